#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

// Per-element pseudocomplement data of one poset, computed once and shared.
struct StarTable {
    std::vector<int> star;   // x -> x*
    std::vector<int> dstar;  // x -> x**
    ElemSet dense;           // D = {x | x* = 0}
};

// Greatest y with L(x,y) = {0}, when the candidate set has a greatest member.
inline std::optional<int> pseudocomplement(const Poset& p, int x) {
    auto bot = p.bottom();
    if (!bot) throw NoBottom();
    const ElemSet zero = ElemSet::single(*bot);
    ElemSet cand;
    for (int y = 0; y < p.size(); ++y)
        if (p.lower_cone(x, y) == zero) cand.add(y);
    for (int y : cand)
        if (cand.subset_of(p.down_set(y))) return y;
    return std::nullopt;
}

inline bool is_pseudocomplemented(const Poset& p) {
    if (!p.bottom()) return false;
    for (int x = 0; x < p.size(); ++x)
        if (!pseudocomplement(p, x)) return false;
    return true;
}

inline StarTable star_table(const Poset& p) {
    if (!p.bottom())
        throw NotPseudocomplemented("poset has no bottom element", -1);
    StarTable t;
    t.star.resize(p.size());
    t.dstar.resize(p.size());
    for (int x = 0; x < p.size(); ++x) {
        auto s = pseudocomplement(p, x);
        if (!s)
            throw NotPseudocomplemented("'" + p.label(x) + "' has no pseudocomplement", x);
        t.star[x] = *s;
    }
    for (int x = 0; x < p.size(); ++x) {
        t.dstar[x] = t.star[t.star[x]];
        if (t.star[x] == *p.bottom()) t.dense.add(x);
    }
    return t;
}

// A* = {a* | a in A}
inline ElemSet star_set(const StarTable& t, ElemSet a) {
    ElemSet r;
    for (int e : a) r.add(t.star[e]);
    return r;
}

inline ElemSet dense_elements(const StarTable& t) { return t.dense; }

// Outcome of one universally quantified check: either it holds after
// `checked` assignments, or `witness` is the first failing assignment
// (lexicographic by element index) with the two evaluated sides.
struct CheckOutcome {
    bool holds = true;
    long long checked = 0;
    std::vector<int> witness;
    ElemSet lhs, rhs;

    void fail(std::vector<int> w, ElemSet l, ElemSet r) {
        holds = false;
        witness = std::move(w);
        lhs = l;
        rhs = r;
    }
};

struct ClauseVerdict {
    std::string clause;
    CheckOutcome outcome;
};

// Corollary-1 hypothesis (1): (Max L(x,y))* <=2 (Max L(x**,y**))* for all pairs.
inline CheckOutcome satisfies_ineq1(const Poset& p, const StarTable& t) {
    CheckOutcome out;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            ++out.checked;
            ElemSet lhs = star_set(t, p.max_of(p.lower_cone(x, y)));
            ElemSet rhs = star_set(t, p.max_of(p.lower_cone(t.dstar[x], t.dstar[y])));
            if (!p.le2(lhs, rhs)) {
                out.fail({x, y}, lhs, rhs);
                return out;
            }
        }
    return out;
}

// Definition-1 inequality: (Max L(x*,y*))* <=2 Min U(x**,y**) for all pairs.
// ACC/DCC hold automatically on finite posets.
inline CheckOutcome is_stone(const Poset& p, const StarTable& t) {
    CheckOutcome out;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            ++out.checked;
            ElemSet lhs = star_set(t, p.max_of(p.lower_cone(t.star[x], t.star[y])));
            ElemSet rhs = p.min_of(p.upper_cone(t.dstar[x], t.dstar[y]));
            if (!p.le2(lhs, rhs)) {
                out.fail({x, y}, lhs, rhs);
                return out;
            }
        }
    return out;
}

// Identity (3): U(x*,x**) = {1} for all x.
inline CheckOutcome satisfies_stone_identity(const Poset& p, const StarTable& t) {
    CheckOutcome out;
    const ElemSet top = ElemSet::single(*p.top());
    for (int x = 0; x < p.size(); ++x) {
        ++out.checked;
        ElemSet lhs = p.upper_cone(t.star[x], t.dstar[x]);
        if (lhs != top) {
            out.fail({x}, lhs, top);
            return out;
        }
    }
    return out;
}

// Identity (2): (Min U(x**,y**))** =2 Min U(x**,y**) for all pairs.
inline CheckOutcome check_identity2(const Poset& p, const StarTable& t) {
    CheckOutcome out;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            ++out.checked;
            ElemSet rhs = p.min_of(p.upper_cone(t.dstar[x], t.dstar[y]));
            ElemSet lhs = star_set(t, star_set(t, rhs));
            if (!p.eq2(lhs, rhs)) {
                out.fail({x, y}, lhs, rhs);
                return out;
            }
        }
    return out;
}

// Lemma 1 clauses (i)-(iv) over all pairs.
inline std::vector<ClauseVerdict> check_lemma1(const Poset& p, const StarTable& t) {
    const ElemSet zero = ElemSet::single(*p.bottom());
    const ElemSet top = ElemSet::single(*p.top());
    ClauseVerdict i{"lemma1.i", {}}, ii{"lemma1.ii", {}}, iii{"lemma1.iii", {}}, iv{"lemma1.iv", {}};
    for (int a = 0; a < p.size(); ++a) {
        ++iv.outcome.checked;
        if (iv.outcome.holds) {
            ElemSet u = p.upper_cone(a, t.star[a]);
            if (!u.subset_of(t.dense)) iv.outcome.fail({a}, u, t.dense);
        }
        for (int b = 0; b < p.size(); ++b) {
            ++i.outcome.checked;
            ++ii.outcome.checked;
            ++iii.outcome.checked;
            ElemSet ustars = p.upper_cone(t.star[a], t.star[b]);
            ElemSet lab = p.lower_cone(a, b);
            if (i.outcome.holds && ustars == top && lab != zero)
                i.outcome.fail({a, b}, lab, zero);
            if (ii.outcome.holds && !star_set(t, lab).subset_of(ustars))
                ii.outcome.fail({a, b}, star_set(t, lab), ustars);
            ElemSet uab = p.upper_cone(a, b);
            ElemSet lstars = p.lower_cone(t.star[a], t.star[b]);
            if (iii.outcome.holds && !star_set(t, uab).subset_of(lstars))
                iii.outcome.fail({a, b}, star_set(t, uab), lstars);
        }
    }
    return {i, ii, iii, iv};
}

namespace detail {

// Runs `fn(x, y)` over all pairs, recording the first failure.
template <typename F>
CheckOutcome pairwise_check(const Poset& p, F&& fn) {
    CheckOutcome out;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            ++out.checked;
            auto [ok, lhs, rhs] = fn(x, y);
            if (!ok) {
                out.fail({x, y}, lhs, rhs);
                return out;
            }
        }
    return out;
}

}  // namespace detail

// Theorem 3 clauses (i)-(x); unconditional on finite pseudocomplemented posets.
inline std::vector<ClauseVerdict> check_th3(const Poset& p, const StarTable& t) {
    auto star = [&](int x) { return t.star[x]; };
    auto dd = [&](int x) { return t.dstar[x]; };
    auto maxl = [&](int x, int y) { return p.max_of(p.lower_cone(x, y)); };
    auto minu = [&](int x, int y) { return p.min_of(p.upper_cone(x, y)); };
    auto ss = [&](ElemSet a) { return star_set(t, a); };
    using R = std::tuple<bool, ElemSet, ElemSet>;

    std::vector<ClauseVerdict> out;
    auto add = [&](const char* clause, auto fn) {
        out.push_back({clause, detail::pairwise_check(p, fn)});
    };
    add("th3.i", [&](int x, int y) -> R {
        ElemSet l = maxl(star(x), star(y));
        ElemSet r = ss(ss(l));
        return {p.eq1(l, r), l, r};
    });
    add("th3.ii", [&](int x, int y) -> R {
        ElemSet inner = ss(maxl(star(x), y));
        ElemSet l = p.max_of(p.lower_cone(inner, x));
        return {l == ElemSet::single(x), l, ElemSet::single(x)};
    });
    add("th3.iii", [&](int x, int y) -> R {
        ElemSet a = maxl(x, y), b = maxl(dd(x), y), c = maxl(dd(x), dd(y));
        if (!p.le1(a, b)) return {false, a, b};
        return {p.le1(b, c), b, c};
    });
    add("th3.iv", [&](int x, int y) -> R {
        ElemSet a = maxl(x, y), b = maxl(x, dd(y)), c = maxl(dd(x), dd(y));
        if (!p.le1(a, b)) return {false, a, b};
        return {p.le1(b, c), b, c};
    });
    add("th3.v", [&](int x, int y) -> R {
        ElemSet l = ss(ss(maxl(x, y)));
        ElemSet r = maxl(dd(x), dd(y));
        return {p.le1(l, r), l, r};
    });
    add("th3.vi", [&](int x, int y) -> R {
        ElemSet a = minu(x, y), b = minu(dd(x), y), c = minu(dd(x), dd(y));
        if (!p.le2(a, b)) return {false, a, b};
        return {p.le2(b, c), b, c};
    });
    add("th3.vii", [&](int x, int y) -> R {
        ElemSet a = minu(x, y), b = minu(x, dd(y)), c = minu(dd(x), dd(y));
        if (!p.le2(a, b)) return {false, a, b};
        return {p.le2(b, c), b, c};
    });
    add("th3.viii", [&](int x, int y) -> R {
        ElemSet l = minu(dd(x), dd(y));
        ElemSet r = ss(ss(minu(x, y)));
        return {p.le2(l, r), l, r};
    });
    add("th3.ix", [&](int x, int y) -> R {
        ElemSet l = ss(minu(x, y));
        ElemSet r = maxl(star(x), star(y));
        return {p.eq1(l, r), l, r};
    });
    add("th3.x", [&](int x, int y) -> R {
        ElemSet l = minu(star(x), star(y));
        ElemSet r = ss(maxl(x, y));
        return {p.le2(l, r), l, r};
    });
    return out;
}

// Theorem 5 identities (ii) and (iii); each is equivalent to being Stone.
inline std::vector<ClauseVerdict> check_th5(const Poset& p, const StarTable& t) {
    auto ss = [&](ElemSet a) { return star_set(t, a); };
    using R = std::tuple<bool, ElemSet, ElemSet>;
    std::vector<ClauseVerdict> out;
    out.push_back({"th5.ii", detail::pairwise_check(p, [&](int x, int y) -> R {
        ElemSet l = ss(p.max_of(p.lower_cone(t.star[x], t.star[y])));
        ElemSet r = p.min_of(p.upper_cone(t.dstar[x], t.dstar[y]));
        return {p.eq2(l, r), l, r};
    })});
    out.push_back({"th5.iii", detail::pairwise_check(p, [&](int x, int y) -> R {
        ElemSet l = ss(ss(p.min_of(p.upper_cone(x, y))));
        ElemSet r = p.min_of(p.upper_cone(t.dstar[x], t.dstar[y]));
        return {p.eq2(l, r), l, r};
    })});
    return out;
}

// Corollary 1: the "(1)" entry reports the hypothesis; the identity clauses
// are present only when the hypothesis holds.
inline std::vector<ClauseVerdict> check_cor1(const Poset& p, const StarTable& t) {
    std::vector<ClauseVerdict> out;
    out.push_back({"cor1.(1)", satisfies_ineq1(p, t)});
    if (!out.front().outcome.holds) return out;

    auto dd = [&](int x) { return t.dstar[x]; };
    auto maxl = [&](int x, int y) { return p.max_of(p.lower_cone(x, y)); };
    auto ss = [&](ElemSet a) { return star_set(t, a); };
    using R = std::tuple<bool, ElemSet, ElemSet>;
    out.push_back({"cor1.i", detail::pairwise_check(p, [&](int x, int y) -> R {
        ElemSet l = ss(maxl(x, y));
        ElemSet r = ss(maxl(dd(x), dd(y)));
        return {p.eq2(l, r), l, r};
    })});
    out.push_back({"cor1.ii", detail::pairwise_check(p, [&](int x, int y) -> R {
        ElemSet l = ss(ss(maxl(x, y)));
        ElemSet r = maxl(dd(x), dd(y));
        return {p.eq1(l, r), l, r};
    })});
    out.push_back({"cor1.iii", detail::pairwise_check(p, [&](int x, int y) -> R {
        ElemSet a = ss(maxl(x, y)), b = ss(maxl(dd(x), y)), c = ss(maxl(x, dd(y)));
        if (!p.eq2(a, b)) return {false, a, b};
        return {p.eq2(b, c), b, c};
    })});
    return out;
}

// The elementary facts (i)-(iv) listed after the pseudocomplement definition.
inline std::vector<ClauseVerdict> check_basic_star_facts(const Poset& p, const StarTable& t) {
    const ElemSet zero = ElemSet::single(*p.bottom());
    ClauseVerdict i{"sec2.i", {}}, ii{"sec2.ii", {}}, iii{"sec2.iii", {}}, iv{"sec2.iv", {}};
    for (int a = 0; a < p.size(); ++a) {
        ++ii.outcome.checked;
        if (ii.outcome.holds && !p.leq(a, t.dstar[a]))
            ii.outcome.fail({a}, ElemSet::single(a), ElemSet::single(t.dstar[a]));
        ++iii.outcome.checked;
        if (iii.outcome.holds && t.star[t.dstar[a]] != t.star[a])
            iii.outcome.fail({a}, ElemSet::single(t.star[t.dstar[a]]), ElemSet::single(t.star[a]));
        for (int b = 0; b < p.size(); ++b) {
            ++i.outcome.checked;
            if (i.outcome.holds && p.leq(a, b) && !p.leq(t.star[b], t.star[a]))
                i.outcome.fail({a, b}, ElemSet::single(t.star[b]), ElemSet::single(t.star[a]));
            ++iv.outcome.checked;
            bool e1 = p.leq(a, t.star[b]);
            bool e2 = p.lower_cone(a, b) == zero;
            bool e3 = p.leq(b, t.star[a]);
            if (iv.outcome.holds && (e1 != e2 || e2 != e3))
                iv.outcome.fail({a, b}, p.lower_cone(a, b), zero);
        }
    }
    return {i, ii, iii, iv};
}

// Monotonicity of the set image A -> A* under <=, <=1, <=2 and =1, =2,
// quantified over all subset pairs. Exponential in n; callers cap n.
inline std::vector<ClauseVerdict> check_star_set_monotonicity(const Poset& p, const StarTable& t) {
    ClauseVerdict le{"sec2.set_le", {}}, le1{"sec2.set_le1", {}}, le2{"sec2.set_le2", {}},
        eq1{"sec2.set_eq1", {}}, eq2{"sec2.set_eq2", {}};
    const std::uint64_t count = std::uint64_t{1} << p.size();
    for (std::uint64_t am = 0; am < count; ++am)
        for (std::uint64_t bm = 0; bm < count; ++bm) {
            ElemSet a{am}, b{bm};
            ElemSet sa = star_set(t, a), sb = star_set(t, b);
            auto run = [&](ClauseVerdict& v, bool hyp, bool concl) {
                ++v.outcome.checked;
                if (v.outcome.holds && hyp && !concl) {
                    v.outcome.fail({}, a, b);
                }
            };
            run(le, p.pointwise_le(a, b), p.pointwise_le(sb, sa));
            run(le1, p.le1(a, b), p.le2(sb, sa));
            run(le2, p.le2(a, b), p.le1(sb, sa));
            run(eq1, p.eq1(a, b), p.eq2(sa, sb));
            run(eq2, p.eq2(a, b), p.eq1(sa, sb));
        }
    return {le, le1, le2, eq1, eq2};
}

// Formats the x / x* / x** table with the dense set line. Columns follow
// declared element order.
inline std::string format_star_table(const Poset& p, const StarTable& t) {
    const int n = p.size();
    std::vector<std::size_t> width(n);
    for (int i = 0; i < n; ++i)
        width[i] = std::max({p.label(i).size(), p.label(t.star[i]).size(),
                             p.label(t.dstar[i]).size()});
    auto row = [&](const char* head, auto cell) {
        std::string line = head;
        line.resize(3, ' ');
        line += " |";
        for (int i = 0; i < n; ++i) {
            std::string c = cell(i);
            c.resize(width[i], ' ');
            line += " " + c;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };
    std::string out;
    out += row("x", [&](int i) { return p.label(i); });
    out += row("x*", [&](int i) { return p.label(t.star[i]); });
    out += row("x**", [&](int i) { return p.label(t.dstar[i]); });
    out += "D = " + p.format_set(t.dense) + "\n";
    return out;
}

}  // namespace posets
