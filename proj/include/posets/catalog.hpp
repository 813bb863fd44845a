#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "posets/canonical.hpp"
#include "posets/filters.hpp"
#include "posets/law.hpp"
#include "posets/text_io.hpp"

namespace posets {

inline constexpr int kDefaultSizeCap = 7;

// The six cached predicates. Star-dependent ones are false when the poset is
// not pseudocomplemented.
struct Verdicts {
    bool pc = false;
    bool lattice = false;
    bool distributive = false;
    bool stone = false;
    bool stone_identity = false;
    bool ineq1 = false;

    bool operator==(const Verdicts&) const = default;
};

inline Verdicts compute_verdicts(const Poset& p) {
    Verdicts v;
    v.lattice = p.is_lattice();
    v.distributive = p.is_distributive();
    v.pc = is_pseudocomplemented(p);
    if (v.pc) {
        StarTable t = star_table(p);
        v.stone = is_stone(p, t).holds;
        v.stone_identity = satisfies_stone_identity(p, t).holds;
        v.ineq1 = satisfies_ineq1(p, t).holds;
    }
    return v;
}

// Conjunction of required verdict values; unset fields match anything.
struct Require {
    std::optional<bool> pc, lattice, distributive, stone, stone_identity, ineq1;

    bool matches(const Verdicts& v) const {
        auto ok = [](std::optional<bool> want, bool got) { return !want || *want == got; };
        return ok(pc, v.pc) && ok(lattice, v.lattice) && ok(distributive, v.distributive) &&
               ok(stone, v.stone) && ok(stone_identity, v.stone_identity) && ok(ineq1, v.ineq1);
    }
};

// Flags: pc, lattice, nonlattice, distributive, nondistributive, stone,
// nonstone, stoneid, nonstoneid, ineq1 (comma separated).
inline Require parse_require(const std::string& csv) {
    Require r;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t end = csv.find(',', start);
        if (end == std::string::npos) end = csv.size();
        std::string flag = csv.substr(start, end - start);
        start = end + 1;
        if (flag.empty()) continue;
        if (flag == "pc") r.pc = true;
        else if (flag == "lattice") r.lattice = true;
        else if (flag == "nonlattice") r.lattice = false;
        else if (flag == "distributive") r.distributive = true;
        else if (flag == "nondistributive") r.distributive = false;
        else if (flag == "stone") r.stone = true;
        else if (flag == "nonstone") r.stone = false;
        else if (flag == "stoneid") r.stone_identity = true;
        else if (flag == "nonstoneid") r.stone_identity = false;
        else if (flag == "ineq1") r.ineq1 = true;
        else throw Error("unknown require flag '" + flag + "'");
    }
    return r;
}

// One isomorphism class: its canonical key, canonical-labelling covers, and
// the cached predicate verdicts.
struct CatalogRecord {
    std::string name;
    int n = 0;
    std::vector<std::pair<int, int>> covers;
    std::string key;
    Verdicts verdicts;

    Poset to_poset() const {
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
        std::vector<std::pair<std::string, std::string>> cs;
        cs.reserve(covers.size());
        for (auto [a, b] : covers) cs.emplace_back(labels[a], labels[b]);
        return Poset::from_covers(name, labels, cs);
    }
};

namespace detail {

// Extends a partial naturally labelled poset: elements are added in
// linear-extension order, each new element's strict down-set being an ideal
// (down-closed subset) of the poset built so far. `down[i]` is reflexive.
template <typename Fn>
void visit_extensions(std::vector<ElemSet>& down, int from, int n, Fn&& fn) {
    if (from == n) {
        fn(down);
        return;
    }
    const std::uint64_t count = std::uint64_t{1} << from;
    for (std::uint64_t m = 0; m < count; ++m) {
        ElemSet ideal{m};
        bool down_closed = true;
        for (int i : ideal)
            if (!(down[i] - ElemSet::single(i)).subset_of(ideal)) {
                down_closed = false;
                break;
            }
        if (!down_closed) continue;
        down[from] = ideal;
        down[from].add(from);
        visit_extensions(down, from + 1, n, fn);
    }
}

// Visits one representative of every naturally labelled poset on n points.
template <typename Fn>
void visit_natural_posets(int n, Fn&& fn) {
    std::vector<ElemSet> down(n);
    visit_extensions(down, 0, n, fn);
}

// Splits [0, count) into at most `jobs` contiguous chunks and runs
// fn(begin, end) on each in its own thread.
template <typename Fn>
void run_chunked(std::size_t count, int jobs, Fn&& fn) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (jobs == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    std::size_t per = (count + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < count; lo += per) {
        std::size_t hi = std::min(count, lo + per);
        threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : threads) th.join();
}

inline Poset poset_from_down_rows(const std::vector<ElemSet>& down, const std::string& name) {
    const int n = static_cast<int>(down.size());
    std::vector<ElemSet> up(n);
    for (int j = 0; j < n; ++j)
        for (int i : down[j]) up[i].add(j);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
    return Poset::from_relation(name, labels, up);
}

}  // namespace detail

// All n-element posets up to isomorphism satisfying `require`, ascending by
// canonical key. Record names index all classes of that size, so a poset
// keeps its name under any `require` filter. With jobs > 1 the search space
// is partitioned by linear-extension prefix and the per-worker class maps
// are merged; output is identical to the serial run.
inline std::vector<CatalogRecord> enumerate_posets(int n, const Require& require = {},
                                                   int size_cap = kDefaultSizeCap, int jobs = 1) {
    if (n < 1 || n > size_cap)
        throw SizeCapExceeded("n must be within 1.." + std::to_string(size_cap));

    std::map<std::string, Poset> classes;  // canonical key -> canonical poset
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
    auto emit = [&](std::map<std::string, Poset>& into, const std::vector<ElemSet>& down) {
        Poset p = detail::poset_from_down_rows(down, "");
        CanonicalForm cf = canonical_form(p);
        if (into.count(cf.key)) return;
        into.emplace(cf.key, apply_relabeling(p, cf.relabel, "", labels));
    };

    if (jobs <= 1 || n < 4) {
        detail::visit_natural_posets(n, [&](const std::vector<ElemSet>& down) {
            emit(classes, down);
        });
    } else {
        const int depth = 4;
        std::vector<std::vector<ElemSet>> prefixes;
        std::vector<ElemSet> down(n);
        detail::visit_extensions(down, 0, depth, [&](const std::vector<ElemSet>& d) {
            prefixes.push_back(d);
        });
        std::vector<std::map<std::string, Poset>> parts(prefixes.size());
        detail::run_chunked(prefixes.size(), jobs, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                std::vector<ElemSet> d = prefixes[i];
                detail::visit_extensions(d, depth, n, [&](const std::vector<ElemSet>& full) {
                    emit(parts[i], full);
                });
            }
        });
        for (auto& part : parts)
            for (auto& [key, poset] : part) classes.emplace(key, std::move(poset));
    }

    std::vector<const Poset*> ordered;
    ordered.reserve(classes.size());
    for (auto& [key, poset] : classes) ordered.push_back(&poset);
    std::vector<Verdicts> verdicts(ordered.size());
    detail::run_chunked(ordered.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) verdicts[i] = compute_verdicts(*ordered[i]);
    });

    std::vector<CatalogRecord> out;
    std::size_t index = 0;
    for (auto& [key, poset] : classes) {
        std::size_t i = index++;
        std::string name = "n" + std::to_string(n) + "_" + std::to_string(i);
        if (!require.matches(verdicts[i])) continue;
        CatalogRecord rec;
        rec.name = std::move(name);
        rec.n = n;
        rec.covers = poset.covers();
        rec.key = key;
        rec.verdicts = verdicts[i];
        out.push_back(std::move(rec));
    }
    return out;
}

// mode witnesses: posets on which the law holds; violations: on which it
// fails. Laws mentioning '*' only apply to pseudocomplemented posets.
struct SearchQuery {
    int max_n = kDefaultSizeCap;
    Require require;
    std::optional<Statement> law;
    bool violations = false;
    int limit = 100;
    int size_cap = kDefaultSizeCap;
    int jobs = 1;
};

inline std::vector<CatalogRecord> search(const SearchQuery& q) {
    if (q.limit < 1) throw Error("limit must be >= 1");
    std::vector<CatalogRecord> out;
    const bool needs_star = q.law && mentions_star(*q.law);
    for (int n = 1; n <= q.max_n; ++n) {
        for (CatalogRecord& rec : enumerate_posets(n, q.require, q.size_cap, q.jobs)) {
            if (q.law) {
                // a law only applies where its symbols denote: '*' needs a
                // pseudocomplemented poset, 0/1 need the bounds
                if (needs_star && !rec.verdicts.pc) continue;
                Poset p = rec.to_poset();
                if ((mentions_const(*q.law, Term::Kind::Zero) && !p.bottom()) ||
                    (mentions_const(*q.law, Term::Kind::One) && !p.top()))
                    continue;
                StarTable t;
                if (rec.verdicts.pc) t = star_table(p);
                CheckResult r = check_statement(p, rec.verdicts.pc ? &t : nullptr, *q.law);
                if (r.holds == q.violations) continue;
            }
            out.push_back(std::move(rec));
            if (static_cast<int>(out.size()) == q.limit) return out;
        }
    }
    return out;
}

inline std::string format_verdicts(const Verdicts& v) {
    auto bit = [](bool b) { return b ? "1" : "0"; };
    return std::string("pc=") + bit(v.pc) + " lattice=" + bit(v.lattice) +
           " distributive=" + bit(v.distributive) + " stone=" + bit(v.stone) +
           " stoneid=" + bit(v.stone_identity) + " ineq1=" + bit(v.ineq1);
}

// Catalog file: header "catalog v1", then records separated by blank lines;
// each record is the poset text format followed by one verdicts line.
inline void save_catalog(std::ostream& out, const std::vector<CatalogRecord>& records) {
    out << "catalog v1\n";
    for (const CatalogRecord& rec : records) {
        out << "\n" << write_poset_text(rec.to_poset());
        out << "verdicts " << format_verdicts(rec.verdicts) << "\n";
    }
}

inline void save_catalog_file(const std::string& path, const std::vector<CatalogRecord>& records) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    save_catalog(out, records);
}

inline std::vector<CatalogRecord> load_catalog(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw FormatError("empty catalog", 1);
    ++lineno;
    if (line != "catalog v1") {
        if (line.rfind("catalog ", 0) == 0)
            throw VersionMismatch("unsupported catalog version '" + line.substr(8) + "'");
        throw FormatError("expected 'catalog v1'", 1);
    }

    std::vector<CatalogRecord> out;
    std::vector<std::pair<int, std::string>> block;
    auto flush = [&] {
        if (block.empty()) return;
        if (block.size() != 4)
            throw FormatError("record needs poset/elements/covers/verdicts lines",
                              block.back().first);
        auto pl = detail::parse_poset_lines({block[0], block[1], block[2]});
        Poset p = Poset::from_covers(pl.name, pl.labels, pl.covers);

        auto toks = detail::split_ws(block[3].second);
        if (toks.empty() || toks[0] != "verdicts")
            throw FormatError("expected 'verdicts ...'", block[3].first);
        Verdicts v;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            auto eq = toks[i].find('=');
            if (eq == std::string::npos || eq + 2 != toks[i].size() ||
                (toks[i].back() != '0' && toks[i].back() != '1'))
                throw FormatError("malformed verdict '" + toks[i] + "'", block[3].first);
            bool val = toks[i].back() == '1';
            std::string flag = toks[i].substr(0, eq);
            if (flag == "pc") v.pc = val;
            else if (flag == "lattice") v.lattice = val;
            else if (flag == "distributive") v.distributive = val;
            else if (flag == "stone") v.stone = val;
            else if (flag == "stoneid") v.stone_identity = val;
            else if (flag == "ineq1") v.ineq1 = val;
            else throw FormatError("unknown verdict flag '" + flag + "'", block[3].first);
        }

        CatalogRecord rec;
        rec.name = p.name();
        rec.n = p.size();
        std::vector<std::pair<int, int>> covers;
        for (auto [a, b] : p.covers()) covers.emplace_back(a, b);
        rec.covers = std::move(covers);
        rec.key = canonical_key(p);
        rec.verdicts = v;
        out.push_back(std::move(rec));
        block.clear();
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::strip_comment(line);
        if (line.empty()) {
            flush();
            continue;
        }
        block.emplace_back(lineno, line);
    }
    flush();
    return out;
}

inline std::vector<CatalogRecord> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return load_catalog(in);
}

// Aggregated verdict of one named check across the swept catalog.
struct SweepCheck {
    std::string name;
    bool asserted = true;
    long long instances = 0;
    long long counterexamples = 0;
    std::string first_witness;
};

struct SweepReport {
    int max_n = 0;
    long long classes = 0;
    long long pc_classes = 0;
    std::vector<SweepCheck> checks;

    const SweepCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    bool asserted_clean() const {
        for (const auto& c : checks)
            if (c.asserted && c.counterexamples > 0) return false;
        return true;
    }
};

namespace detail {

inline void merge_check(SweepReport& report, const std::string& name, bool asserted,
                        long long instances, long long counterexamples,
                        const std::string& witness) {
    for (SweepCheck& c : report.checks) {
        if (c.name != name) continue;
        c.instances += instances;
        if (counterexamples && c.counterexamples == 0) c.first_witness = witness;
        c.counterexamples += counterexamples;
        return;
    }
    report.checks.push_back({name, asserted, instances, counterexamples, witness});
}

inline std::string describe(const Poset& p) {
    std::string out = "covers";
    for (auto [a, b] : p.covers()) out += " " + p.label(a) + "<" + p.label(b);
    if (p.covers().empty()) out += " (none)";
    return out;
}

inline void merge_clause(SweepReport& report, const Poset& p, const ClauseVerdict& cv) {
    std::string witness;
    if (!cv.outcome.holds) {
        witness = describe(p) + ":";
        for (int e : cv.outcome.witness) witness += " " + p.label(e);
        witness += " lhs=" + p.format_set(cv.outcome.lhs) + " rhs=" + p.format_set(cv.outcome.rhs);
    }
    merge_check(report, cv.clause, true, cv.outcome.checked, cv.outcome.holds ? 0 : 1, witness);
}

// Remark rem1 over all (antichain, subset) pairs; pure order content.
inline std::vector<ClauseVerdict> check_rem1(const Poset& p) {
    ClauseVerdict eq1_sub{"rem1.eq1_subset", {}}, eq2_sub{"rem1.eq2_subset", {}},
        both{"rem1.antichains_equal", {}}, top_link{"rem1.eq2_top", {}};
    const std::uint64_t count = std::uint64_t{1} << p.size();
    const ElemSet top = p.top() ? ElemSet::single(*p.top()) : ElemSet{};
    for (std::uint64_t ma = 0; ma < count; ++ma) {
        ElemSet a{ma};
        if (!p.is_antichain(a)) continue;
        for (std::uint64_t mb = 0; mb < count; ++mb) {
            ElemSet b{mb};
            if (p.eq1(a, b)) {
                ++eq1_sub.outcome.checked;
                if (eq1_sub.outcome.holds && !a.subset_of(b)) eq1_sub.outcome.fail({}, a, b);
                if (p.is_antichain(b)) {
                    ++both.outcome.checked;
                    if (both.outcome.holds && a != b) both.outcome.fail({}, a, b);
                }
            }
            if (p.eq2(a, b)) {
                ++eq2_sub.outcome.checked;
                if (eq2_sub.outcome.holds && !a.subset_of(b)) eq2_sub.outcome.fail({}, a, b);
                if (p.is_antichain(b)) {
                    ++both.outcome.checked;
                    if (both.outcome.holds && a != b) both.outcome.fail({}, a, b);
                }
                if (p.top()) {
                    ++top_link.outcome.checked;
                    if (top_link.outcome.holds && (a == top) != (b == top))
                        top_link.outcome.fail({}, a, b);
                }
            }
        }
    }
    return {eq1_sub, eq2_sub, both, top_link};
}

}  // namespace detail

// The whole battery evaluated on one poset.
inline SweepReport sweep_poset(const Poset& p, const Verdicts& v) {
    SweepReport report;
    report.classes = 1;
    for (const ClauseVerdict& cv : detail::check_rem1(p)) detail::merge_clause(report, p, cv);
    if (!v.pc) return report;
    report.pc_classes = 1;
    StarTable t = star_table(p);

    for (const ClauseVerdict& cv : check_basic_star_facts(p, t))
        detail::merge_clause(report, p, cv);
    for (const ClauseVerdict& cv : check_star_set_monotonicity(p, t))
        detail::merge_clause(report, p, cv);
    for (const ClauseVerdict& cv : check_lemma1(p, t)) detail::merge_clause(report, p, cv);
    for (const ClauseVerdict& cv : check_th3(p, t)) detail::merge_clause(report, p, cv);
    for (const ClauseVerdict& cv : check_cor1(p, t))
        if (cv.clause != "cor1.(1)") detail::merge_clause(report, p, cv);

    // Theorem 5: the three statements agree on every poset
    auto th5 = check_th5(p, t);
    bool stone = is_stone(p, t).holds;
    bool agree = stone == th5[0].outcome.holds && stone == th5[1].outcome.holds;
    detail::merge_check(report, "th5.agreement", true, 1, agree ? 0 : 1,
                        agree ? "" : "poset " + p.name() + ": " + detail::describe(p));

    // identity (2) implies Stone; Stone implies the Stone identity
    bool id2 = check_identity2(p, t).holds;
    detail::merge_check(report, "identity2=>stone", true, 1, (!id2 || stone) ? 0 : 1,
                        (!id2 || stone) ? "" : detail::describe(p));
    bool stoneid = satisfies_stone_identity(p, t).holds;
    detail::merge_check(report, "lemma4.stone=>identity3", true, 1, (!stone || stoneid) ? 0 : 1,
                        (!stone || stoneid) ? "" : detail::describe(p));

    for (const TheoremCheck& tc : check_filter_theorems(p, t)) {
        std::string witness;
        if (tc.counterexamples) witness = detail::describe(p) + ": " + tc.first_witness;
        detail::merge_check(report, tc.name, tc.asserted, tc.instances, tc.counterexamples,
                            witness);
    }
    return report;
}

// Runs the whole theorem battery over every isomorphism class with at most
// max_n elements. Star-dependent checks run on the pseudocomplemented
// classes; rem1 runs on everything. Per-record reports are merged in
// catalog order, so the output does not depend on `jobs`.
inline SweepReport sweep_theorems(int max_n, int size_cap = kDefaultSizeCap, int jobs = 1) {
    std::vector<CatalogRecord> records;
    for (int n = 1; n <= max_n; ++n)
        for (CatalogRecord& rec : enumerate_posets(n, {}, size_cap, jobs))
            records.push_back(std::move(rec));

    std::vector<SweepReport> parts(records.size());
    detail::run_chunked(records.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            parts[i] = sweep_poset(records[i].to_poset(), records[i].verdicts);
    });

    SweepReport report;
    report.max_n = max_n;
    for (const SweepReport& part : parts) {
        report.classes += part.classes;
        report.pc_classes += part.pc_classes;
        for (const SweepCheck& c : part.checks)
            detail::merge_check(report, c.name, c.asserted, c.instances, c.counterexamples,
                                c.first_witness);
    }
    return report;
}

inline std::string format_sweep_report(const SweepReport& r) {
    std::string out = "swept n<=" + std::to_string(r.max_n) + ": " + std::to_string(r.classes) +
                      " classes (" + std::to_string(r.pc_classes) + " pseudocomplemented)\n";
    for (const SweepCheck& c : r.checks) {
        out += c.name + ": " + (c.counterexamples == 0 ? "ok" : "COUNTEREXAMPLES") +
               " instances=" + std::to_string(c.instances);
        if (c.counterexamples) {
            out += " counterexamples=" + std::to_string(c.counterexamples);
            out += c.asserted ? "" : " (reported-only)";
            out += "\n  first: " + c.first_witness;
        }
        out += "\n";
    }
    return out;
}

}  // namespace posets
