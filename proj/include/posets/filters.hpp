#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "posets/star.hpp"

namespace posets {

// A filter with its classification flags. all_filters/classify fill the
// flags; a default-constructed Filter has everything false.
struct Filter {
    ElemSet members;
    int generator = -1;  // principal generator, -1 if not principal
    bool principal = false;
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool d_filter = false;
    bool coherent = false;
    bool strongly_coherent = false;
    bool closed = false;
    bool median = false;
};

struct FilterViolation {
    enum class Kind { Empty, NotUpClosed, NotDirected } kind;
    int x = -1, y = -1;
};

// Why a subset fails to be a filter, or nullopt if it is one. The witness is
// the first offending element (pair), lexicographic.
inline std::optional<FilterViolation> filter_violation(const Poset& p, ElemSet s) {
    if (s.empty()) return FilterViolation{FilterViolation::Kind::Empty, -1, -1};
    for (int x : s)
        if (!p.up_set(x).subset_of(s)) {
            int y = (p.up_set(x) - s).first();
            return FilterViolation{FilterViolation::Kind::NotUpClosed, x, y};
        }
    for (int x : s)
        for (int y : s)
            if (!p.lower_cone(x, y).intersects(s))
                return FilterViolation{FilterViolation::Kind::NotDirected, x, y};
    return std::nullopt;
}

inline bool is_filter(const Poset& p, ElemSet s) { return !filter_violation(p, s); }

inline bool is_proper_filter(const Poset& p, ElemSet s) {
    return is_filter(p, s) && s != p.carrier();
}

inline Filter principal_filter(const Poset& p, int x) {
    Filter f;
    f.members = p.up_set(x);
    f.generator = x;
    f.principal = true;
    return f;
}

// Every filter of a finite poset is principal, so this is the complete filter
// list, in generator (= declared element) order.
inline std::vector<Filter> all_filters(const Poset& p) {
    std::vector<Filter> out;
    out.reserve(p.size());
    for (int x = 0; x < p.size(); ++x) out.push_back(principal_filter(p, x));
    return out;
}

// Exhaustively confirms that every up-closed directed subset is a principal
// up-set. Used by tests to back the DCC argument; exponential in n.
inline bool every_filter_is_principal(const Poset& p) {
    if (p.size() > 20) throw SizeCapExceeded("exhaustive filter check capped at 20 elements");
    const std::uint64_t count = std::uint64_t{1} << p.size();
    for (std::uint64_t m = 1; m < count; ++m) {
        ElemSet s{m};
        if (!is_filter(p, s)) continue;
        bool principal = false;
        for (int g = 0; g < p.size(); ++g)
            if (s == p.up_set(g)) { principal = true; break; }
        if (!principal) return false;
    }
    return true;
}

// overline(A) = {x | U(x**,y**) = {1} for all y in A}
inline ElemSet overline_set(const Poset& p, const StarTable& t, ElemSet a) {
    const ElemSet top = ElemSet::single(*p.top());
    ElemSet r;
    for (int x = 0; x < p.size(); ++x) {
        bool in = true;
        for (int y : a)
            if (p.upper_cone(t.dstar[x], t.dstar[y]) != top) { in = false; break; }
        if (in) r.add(x);
    }
    return r;
}

// A^D = {x | U(x,y) is dense for all y in A}
inline ElemSet d_set(const Poset& p, const StarTable& t, ElemSet a) {
    ElemSet r;
    for (int x = 0; x < p.size(); ++x) {
        bool in = true;
        for (int y : a)
            if (!p.upper_cone(x, y).subset_of(t.dense)) { in = false; break; }
        if (in) r.add(x);
    }
    return r;
}

// pi(A) = {x | every y lies in Min U(z,u) for some (z,u) in overline(x) x A}.
// Evaluated by the definition's triple loop.
inline ElemSet pi_operator(const Poset& p, const StarTable& t, ElemSet a) {
    ElemSet r;
    for (int x = 0; x < p.size(); ++x) {
        ElemSet covered;
        for (int z : overline_set(p, t, ElemSet::single(x)))
            for (int u : a) covered |= p.min_of(p.upper_cone(z, u));
        if (covered == p.carrier()) r.add(x);
    }
    return r;
}

// Fills all classification flags. Maximality is decided against principal
// filters, which is sound because every filter here is principal.
inline void classify(const Poset& p, const StarTable& t, Filter& f) {
    if (auto v = filter_violation(p, f.members)) {
        std::string what = v->kind == FilterViolation::Kind::Empty ? "empty"
                         : v->kind == FilterViolation::Kind::NotUpClosed ? "not up-closed"
                                                                         : "not directed";
        throw NotAFilter("not a filter (" + what + ")");
    }
    const ElemSet s = f.members;
    f.principal = false;
    for (int g = 0; g < p.size(); ++g)
        if (s == p.up_set(g)) {
            f.principal = true;
            f.generator = g;
            break;
        }
    f.proper = s != p.carrier();

    f.prime = f.proper;
    for (int x = 0; x < p.size() && f.prime; ++x)
        for (int y = 0; y < p.size() && f.prime; ++y)
            if (p.upper_cone(x, y).subset_of(s) && !s.contains(x) && !s.contains(y))
                f.prime = false;

    f.maximal = f.proper;
    for (int g = 0; g < p.size() && f.maximal; ++g) {
        ElemSet up = p.up_set(g);
        if (s.subset_of(up) && up != s && up != p.carrier()) f.maximal = false;
    }

    f.d_filter = t.dense.subset_of(s);

    f.coherent = true;
    for (int x : s) {
        ElemSet ox = overline_set(p, t, ElemSet::single(x));
        for (int y = 0; y < p.size() && f.coherent; ++y)
            if (!s.contains(y) && overline_set(p, t, ElemSet::single(y)) == ox)
                f.coherent = false;
        if (!f.coherent) break;
    }

    f.strongly_coherent = pi_operator(p, t, s) == s;
    f.closed = overline_set(p, t, overline_set(p, t, s)) == s;

    f.median = true;
    for (int x : s)
        if (overline_set(p, t, ElemSet::single(x)).subset_of(s)) { f.median = false; break; }
}

inline std::vector<Filter> classified_filters(const Poset& p, const StarTable& t) {
    std::vector<Filter> out = all_filters(p);
    for (Filter& f : out) classify(p, t, f);
    return out;
}

// One verdict of the filter-theorem battery. `asserted` distinguishes
// established implications (a counterexample is a bug) from reported-only
// readings whose stated hypotheses are weaker than their proofs support.
struct TheoremCheck {
    std::string name;
    bool asserted = true;
    long long instances = 0;
    long long counterexamples = 0;
    std::string first_witness;

    void note(bool ok, const Poset& p, const std::string& witness) {
        ++instances;
        if (!ok) {
            if (counterexamples == 0)
                first_witness = "poset " + p.name() + ": " + witness;
            ++counterexamples;
        }
    }
    bool pass() const { return counterexamples == 0; }
};

// Evaluates every implication of the filter theorems on every filter of p.
// Subset-quantified Galois laws need 4^n set pairs, so those run only for
// n <= galois_pair_limit.
inline std::vector<TheoremCheck> check_filter_theorems(const Poset& p, const StarTable& t,
                                                       int galois_pair_limit = 8) {
    const int n = p.size();
    const ElemSet carrier = p.carrier();
    auto ov = [&](ElemSet a) { return overline_set(p, t, a); };
    auto dst = [&](ElemSet a) { return d_set(p, t, a); };
    auto ov1 = [&](int x) { return overline_set(p, t, ElemSet::single(x)); };
    auto fmt = [&](ElemSet a) { return p.format_set(a); };

    std::vector<Filter> filters = classified_filters(p, t);
    CheckOutcome stone = is_stone(p, t);
    CheckOutcome stoneid = satisfies_stone_identity(p, t);

    // deque: the blocks below hold references across later insertions
    std::deque<TheoremCheck> cs;
    auto mk = [&](const char* name) -> TheoremCheck& {
        TheoremCheck c;
        c.name = name;
        cs.push_back(std::move(c));
        return cs.back();
    };

    // Lemma 2 on proper filters
    {
        auto& c1 = mk("lemma2.i");
        for (const Filter& f : filters) {
            if (!f.proper) continue;
            for (int a = 0; a < n; ++a)
                c1.note(!(f.members.contains(a) && f.members.contains(t.star[a])), p,
                        "F=" + fmt(f.members) + " a=" + p.label(a));
        }
        auto& c2 = mk("lemma2.ii");
        for (const Filter& f : filters) {
            if (!f.proper) continue;
            for (int a = 0; a < n; ++a) {
                if (!f.members.contains(t.star[a])) continue;
                for (int b : ov1(a))
                    c2.note(!ov1(b).subset_of(f.members), p,
                            "F=" + fmt(f.members) + " a=" + p.label(a) + " b=" + p.label(b));
            }
        }
    }

    // overline/d_set endpoints: empty set and full carrier
    {
        auto& c = mk("galois.endpoints");
        c.note(ov(ElemSet{}) == carrier, p, "overline({})");
        c.note(dst(ElemSet{}) == carrier, p, "{}^D");
        c.note(ov(carrier) == t.dense, p, "overline(P)");
        c.note(dst(carrier) == t.dense, p, "P^D");
    }

    // single-subset laws (2^n subsets)
    {
        auto& ext = mk("galois.extensive");
        auto& tri = mk("galois.triple");
        auto& up = mk("galois.up_closed");
        auto& l3i = mk("lemma3.i");
        auto& l3ii = mk("lemma3.ii");
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t m = 0; m < count; ++m) {
            ElemSet a{m};
            ElemSet o = ov(a), d = dst(a);
            ext.note(a.subset_of(ov(o)) && a.subset_of(dst(d)), p, "A=" + fmt(a));
            tri.note(ov(ov(o)) == o && dst(dst(d)) == d, p, "A=" + fmt(a));
            bool up_closed = true;
            for (int x : o)
                if (!p.up_set(x).subset_of(o)) { up_closed = false; break; }
            for (int x : d)
                if (!p.up_set(x).subset_of(d)) { up_closed = false; break; }
            up.note(up_closed, p, "A=" + fmt(a));
            l3i.note(o.subset_of(d), p, "A=" + fmt(a));
            if (stone.holds) l3ii.note(o == d, p, "A=" + fmt(a));
        }
        if (stone.holds) {
            auto& l3s = mk("lemma3.ii.star_member");
            for (int a = 0; a < n; ++a)
                l3s.note(dst(ElemSet::single(a)).contains(t.star[a]), p, "a=" + p.label(a));
        }
    }

    // pairwise Galois laws (4^n pairs)
    if (n <= galois_pair_limit) {
        auto& anti = mk("galois.antitone");
        auto& adj = mk("galois.adjunction");
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t ma = 0; ma < count; ++ma) {
            ElemSet a{ma};
            ElemSet oa = ov(a), da = dst(a);
            for (std::uint64_t mb = 0; mb < count; ++mb) {
                ElemSet b{mb};
                ElemSet ob = ov(b), db = dst(b);
                if (a.subset_of(b))
                    anti.note(ob.subset_of(oa) && db.subset_of(da), p,
                              "A=" + fmt(a) + " B=" + fmt(b));
                adj.note((a.subset_of(ob)) == (b.subset_of(oa)) &&
                             (a.subset_of(db)) == (b.subset_of(da)),
                         p, "A=" + fmt(a) + " B=" + fmt(b));
            }
        }
    }

    // overline(F_a) = overline({a}) and (F_a)^D = {a}^D
    {
        auto& c = mk("galois.principal");
        for (int a = 0; a < n; ++a)
            c.note(ov(p.up_set(a)) == ov1(a) && dst(p.up_set(a)) == dst(ElemSet::single(a)), p,
                   "a=" + p.label(a));
    }

    // filter poset is dually isomorphic to p
    {
        auto& c = mk("filters.dual_order");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                c.note(p.up_set(x).subset_of(p.up_set(y)) == p.leq(y, x), p,
                       "x=" + p.label(x) + " y=" + p.label(y));
    }

    // the DCC argument: no non-principal filter exists
    if (n <= 16) {
        auto& c = mk("filters.all_principal");
        c.note(every_filter_is_principal(p), p, "a non-principal filter exists");
    }

    // Stone/filter theorem chain (i) => (ii) <=> (iii) => (iv) => (v) <=> (vi)
    {
        bool s_ii = true;
        for (const Filter& f : filters)
            if (ov(f.members) != dst(f.members)) { s_ii = false; break; }
        bool s_iii = true;
        for (const Filter& f : filters) {
            for (const Filter& g : filters) {
                bool lhs = (f.members & g.members).subset_of(t.dense);
                bool rhs = f.members.subset_of(ov(g.members));
                if (lhs != rhs) { s_iii = false; break; }
            }
            if (!s_iii) break;
        }
        bool s_iv = true, s_v = true;
        for (int x = 0; x < n; ++x) {
            ElemSet lhs = ov(ov1(x));
            ElemSet rhs = ov1(t.star[x]);
            if (lhs != rhs) s_iv = false;
            if (!lhs.subset_of(rhs)) s_v = false;
        }
        mk("stone_filter.i=>ii").note(!stone.holds || s_ii, p, "(ii) fails");
        mk("stone_filter.ii<=>iii").note(s_ii == s_iii, p, "(ii) vs (iii)");
        mk("stone_filter.iii=>iv").note(!s_iii || s_iv, p, "(iv) fails");
        mk("stone_filter.iv=>v").note(!s_iv || s_v, p, "(v) fails");
        mk("stone_filter.v<=>vi").note(s_v == stoneid.holds, p, "(v) vs (vi)");
    }

    // coherence lemmas
    {
        auto& c1 = mk("coherence.stone_dd_closed");
        auto& c2 = mk("coherence.strong_or_closed");
        for (const Filter& f : filters) {
            if (stone.holds) {
                bool dd_into = true;
                for (int x = 0; x < n; ++x)
                    if (f.members.contains(t.dstar[x]) && !f.members.contains(x)) {
                        dd_into = false;
                        break;
                    }
                if (dd_into)
                    c1.note(f.coherent, p, "F=" + fmt(f.members));
            }
            if (f.strongly_coherent || f.closed)
                c2.note(f.coherent, p, "F=" + fmt(f.members));
        }
    }

    // Theorem th4 on prime filters
    {
        auto& c12 = mk("th4.i<=>ii");
        auto& c23 = mk("th4.ii<=>iii");
        auto& c34 = mk("th4.iii<=>iv");
        auto& c15 = mk("th4.i=>v");
        for (const Filter& f : filters) {
            if (!f.prime) continue;
            const ElemSet s = f.members;
            bool i = f.d_filter;
            bool ii = true, iii = true, iv = true, v = true;
            for (int x = 0; x < n; ++x) {
                if (s.contains(x) != !s.contains(t.star[x])) ii = false;
                if (s.contains(x) != s.contains(t.dstar[x])) iii = false;
                if (!s.contains(x) && !ov1(x).subset_of(s)) v = false;
            }
            for (int x : s)
                for (int y = 0; y < n; ++y)
                    if (t.star[x] == t.star[y] && !s.contains(y)) iv = false;
            std::string w = "F=" + fmt(s);
            c12.note(i == ii, p, w);
            c23.note(ii == iii, p, w);
            c34.note(iii == iv, p, w);
            c15.note(!i || v, p, w);
        }
    }

    // prime D-filter => (x not in F => x* in F) => maximal; the last leg
    // needs F proper (maximality presumes properness)
    {
        auto& c1 = mk("maximality.i=>ii");
        auto& c2 = mk("maximality.ii=>iii");
        for (const Filter& f : filters) {
            bool ii = true;
            for (int x = 0; x < n; ++x)
                if (!f.members.contains(x) && !f.members.contains(t.star[x])) ii = false;
            c1.note(!(f.prime && f.d_filter) || ii, p, "F=" + fmt(f.members));
            c2.note(!(ii && f.proper) || f.maximal, p, "F=" + fmt(f.members));
        }
    }

    // median proposition on prime D-filters
    {
        auto& c12 = mk("median_prop.i=>ii");
        auto& c23 = mk("median_prop.ii=>iii");
        auto& c31 = mk("median_prop.iii=>i");
        for (const Filter& f : filters) {
            if (!(f.prime && f.d_filter)) continue;
            const ElemSet s = f.members;
            bool i = f.median;
            bool ii = true, iii = true;
            for (int x = 0; x < n; ++x) {
                if (s.contains(x) != !ov1(x).subset_of(s)) ii = false;
                if (s.contains(t.dstar[x]) && ov1(x).subset_of(s)) iii = false;
            }
            std::string w = "F=" + fmt(s);
            c12.note(!i || ii, p, w);
            c23.note(!ii || iii, p, w);
            c31.note(!iii || i, p, w);
        }
    }

    // final theorem on median D-filters; clause (ii) is checked both as
    // printed (no primality) and with the primality the proof actually uses
    {
        auto& c1 = mk("median_thm.i");
        auto& c2p = mk("median_thm.ii_given_prime");
        auto& c2 = mk("median_thm.ii_literal");
        c2.asserted = false;  // the proof needs primality; the bare reading is reported only
        for (const Filter& f : filters) {
            if (!(f.median && f.d_filter)) continue;
            const ElemSet s = f.members;
            if (f.prime) {
                bool i = true;
                for (int x = 0; x < n; ++x)
                    if (s.contains(x) != ov(ov1(x)).subset_of(s)) i = false;
                c1.note(i, p, "F=" + fmt(s));
                c2p.note(f.coherent, p, "F=" + fmt(s));
            }
            c2.note(f.coherent, p, "F=" + fmt(s));
        }
    }

    return {cs.begin(), cs.end()};
}

}  // namespace posets
