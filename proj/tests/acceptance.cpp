// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <iostream>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "posets/catalog.hpp"

using namespace posets;

namespace {

int failures = 0;
std::ostringstream detail;
std::ostringstream notes;

void report(int number, const std::string& name, bool pass, const std::string& extra = "") {
    std::cout << "criterion " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL")
              << (extra.empty() ? "" : " — " + extra) << "\n";
    if (!pass) {
        ++failures;
        if (!detail.str().empty()) std::cout << detail.str();
    }
    std::cout << notes.str();
    detail.str("");
    notes.str("");
}

bool expect(bool cond, const std::string& what) {
    if (!cond) detail << "    " << what << "\n";
    return cond;
}

// ---- criterion 1: golden tables ----
bool golden_tables() {
    struct Want {
        const char* name;
        const char* table;
    };
    const Want wants[] = {
        {"fig1",
         "x   | 0 a b c d 1\n"
         "x*  | 1 b a 0 0 0\n"
         "x** | 0 a b 1 1 1\n"
         "D = {c,d,1}\n"},
        {"fig2",
         "x   | 0 a b c d e f 1\n"
         "x*  | 1 f c f 0 0 c 0\n"
         "x** | 0 c f c 1 1 f 1\n"
         "D = {d,e,1}\n"},
        {"fig3",
         "x   | 0 a b c d e f g 1\n"
         "x*  | 1 d e 0 e d 0 0 0\n"
         "x** | 0 e d 1 d e 1 1 1\n"
         "D = {c,f,g,1}\n"},
        {"fig4a",
         "x   | 0 a b c d e 1\n"
         "x*  | 1 0 0 0 0 0 0\n"
         "x** | 0 1 1 1 1 1 1\n"
         "D = {a,b,c,d,e,1}\n"},
        {"fig4b",
         "x   | 0 a b c d e f g h i j 1\n"
         "x*  | 1 j i h g f e d c b a 0\n"
         "x** | 0 a b c d e f g h i j 1\n"
         "D = {1}\n"},
    };
    bool ok = true;
    for (const Want& w : wants) {
        Poset p = fixtures::load(w.name);
        std::string got = format_star_table(p, star_table(p));
        ok &= expect(got == w.table, std::string(w.name) + " table mismatch:\n" + got);
    }
    // fig4b: the x** row equals the x row
    Poset p4b = fixtures::load("fig4b");
    StarTable t4b = star_table(p4b);
    for (int x = 0; x < p4b.size(); ++x) ok &= expect(t4b.dstar[x] == x, "fig4b x** != x");
    return ok;
}

// ---- criterion 2: counterexample goldens ----
bool counterexample_goldens() {
    bool ok = true;

    Poset p2 = fixtures::load("fig2");
    StarTable t2 = star_table(p2);
    CheckOutcome i1 = satisfies_ineq1(p2, t2);
    ok &= expect(!i1.holds && p2.label(i1.witness[0]) == "d" && p2.label(i1.witness[1]) == "e" &&
                     p2.format_set(i1.lhs) == "{c,f}" && p2.format_set(i1.rhs) == "{0}",
                 "(a) fig2 inequality (1) witness");

    Poset p1 = fixtures::load("fig1");
    StarTable t1 = star_table(p1);
    CheckOutcome si = satisfies_stone_identity(p1, t1);
    ok &= expect(!si.holds && p1.label(si.witness[0]) == "a" &&
                     p1.format_set(si.lhs) == "{c,d,1}",
                 "(b) fig1 Stone identity witness");
    ok &= expect(p1.format_set(p1.upper_cone(p1.index_of("a"), p1.index_of("b"))) == "{c,d,1}",
                 "(b) U(a,b) on fig1");

    // (c) the distributivity counterexample display at (c,d,e)
    ElemSet lhs = p2.lower_cone(p2.upper_cone(p2.index_of("c"), p2.index_of("d")),
                                p2.index_of("e"));
    ElemSet rhs = p2.lower_cone(p2.upper_cone(p2.lower_cone(p2.index_of("c"), p2.index_of("e")) |
                                              p2.lower_cone(p2.index_of("d"), p2.index_of("e"))));
    ok &= expect(lhs == p2.down_set(p2.index_of("e")) && p2.format_set(lhs) == "{0,a,b,e}" &&
                     p2.format_set(rhs) == "{0,a,b}",
                 "(c) fig2 distributivity at (c,d,e): L(e) vs {0,a,b}");
    // and the checker reports the lexicographically first witness
    auto w = p2.distributivity_witness();
    ok &= expect(w && p2.label(w->x) == "a" && p2.label(w->y) == "f" && p2.label(w->z) == "c" &&
                     p2.format_set(w->lhs) == "{0,a,c}" && p2.format_set(w->rhs) == "{0,a}",
                 "(c) fig2 lexicographically-first witness (a,f,c)");

    Poset p3 = fixtures::load("fig3");
    StarTable t3 = star_table(p3);
    ElemSet img = star_set(t3, p3.max_of(p3.lower_cone(p3.index_of("f"), p3.index_of("g"))));
    ok &= expect(p3.format_set(img) == "{0,e}" && !p3.is_antichain(img),
                 "(d) fig3 (Max L(f,g))* = {0,e}, not an antichain");
    return ok;
}

// ---- criterion 3: filter goldens ----
bool filter_goldens() {
    bool ok = true;
    Poset p = fixtures::load("fig1");
    const char* wants[] = {"{0,a,b,c,d,1}", "{a,c,d,1}", "{b,c,d,1}", "{c,1}", "{d,1}", "{1}"};
    std::vector<Filter> fs = all_filters(p);
    ok &= expect(fs.size() == 6, "six filters");
    for (int x = 0; x < p.size(); ++x)
        ok &= expect(p.format_set(fs[x].members) == wants[x],
                     "F_" + p.label(x) + " = " + p.format_set(fs[x].members));
    ok &= expect(every_filter_is_principal(p), "all fig1 filters principal");

    ElemSet dense = fixtures::chars(p, "cd1");
    auto v = filter_violation(p, dense);
    ok &= expect(v && v->kind == FilterViolation::Kind::NotDirected && p.label(v->x) == "c" &&
                     p.label(v->y) == "d",
                 "{c,d,1} rejected with witness (c,d)");
    if (v) {
        ElemSet meet = p.lower_cone(v->x, v->y) & dense;
        ok &= expect(meet.empty(), "L(c,d) ∩ D = {}");
    }
    return ok;
}

// ---- criterion 4: Stone verdicts ----
bool stone_verdicts() {
    bool ok = true;
    for (const char* name : {"fig4a", "fig4b"}) {
        Poset p = fixtures::load(name);
        StarTable t = star_table(p);
        ok &= expect(is_stone(p, t).holds, std::string(name) + " is Stone");
        ok &= expect(satisfies_ineq1(p, t).holds, std::string(name) + " satisfies (1)");
    }
    Poset p1 = fixtures::load("fig1");
    ok &= expect(!is_stone(p1, star_table(p1)).holds, "fig1 is not Stone");

    Poset p2 = fixtures::load("fig2");
    StarTable t2 = star_table(p2);
    bool lib = is_stone(p2, t2).holds;
    oracle::Rel r2 = fixtures::rel("fig2");
    bool brute = oracle::is_stone(r2, *oracle::star_table(r2));
    ok &= expect(lib == brute, "fig2 Stone verdict equals the brute-force Definition-1 oracle");
    ok &= expect(lib, "fig2 is Stone (derived)");
    ok &= expect(satisfies_stone_identity(p2, t2).holds, "fig2 satisfies the Stone identity");
    return ok;
}

// ---- criterion 5: theorem sweep at max_n = 6 ----
bool theorem_sweep() {
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    SweepReport report = sweep_theorems(6, kDefaultSizeCap, jobs > 0 ? jobs : 1);
    bool ok = expect(report.classes == 1 + 2 + 5 + 16 + 63 + 318, "class total");
    for (const SweepCheck& c : report.checks) {
        if (c.asserted && c.counterexamples > 0) {
            ok &= expect(false, c.name + ": " + std::to_string(c.counterexamples) +
                                    " counterexample(s), first: " + c.first_witness);
        }
    }
    // The final theorem's clause (ii) read without the primality its proof
    // uses is refuted by the catalog; the findings are surfaced, as are the
    // clean verdicts of its prime-hypothesis reading.
    const SweepCheck* literal = report.find("median_thm.ii_literal");
    ok &= expect(literal && !literal->asserted, "median_thm.ii_literal present, reported-only");
    if (literal) {
        ok &= expect(literal->counterexamples == 5,
                     "5 known median-theorem findings at n<=6, got " +
                         std::to_string(literal->counterexamples));
        notes << "  reported finding: median D-filters need not be coherent without "
                 "primality ("
              << literal->counterexamples << " instances at n<=6)\n"
              << "  first: " << literal->first_witness << "\n";
    }
    const SweepCheck* prime = report.find("median_thm.ii_given_prime");
    ok &= expect(prime && prime->asserted && prime->counterexamples == 0,
                 "median theorem clause (ii) holds with primality");
    // the median proposition (prime D-filter hypothesis) reported clean
    for (const char* name : {"median_prop.i=>ii", "median_prop.ii=>iii", "median_prop.iii=>i"}) {
        const SweepCheck* c = report.find(name);
        ok &= expect(c && c->counterexamples == 0, std::string(name) + " clean");
    }
    if (!ok) detail << format_sweep_report(report);
    return ok;
}

// ---- criterion 6: enumeration counts ----
bool enumeration_counts() {
    bool ok = true;
    const std::size_t want[] = {1, 2, 5, 16, 63, 318};
    for (int n = 1; n <= 6; ++n) {
        std::size_t got = enumerate_posets(n, {}, kDefaultSizeCap, 4).size();
        ok &= expect(got == want[n - 1], "n=" + std::to_string(n) + " classes=" +
                                             std::to_string(got));
    }
    for (int n = 1; n <= 5; ++n) {
        std::size_t oracle_count = oracle::count_classes(n);
        ok &= expect(oracle_count == want[n - 1],
                     "labeled-enumeration oracle n=" + std::to_string(n) + " gives " +
                         std::to_string(oracle_count));
    }
    return ok;
}

// ---- criterion 7: DSL / native agreement over the catalog ----
bool dsl_agreement() {
    bool ok = true;
    Statement stone_def = *find_law("stone_def");
    Statement distributivity = *find_law("distributivity");
    long long disagreements = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const CatalogRecord& rec : enumerate_posets(n)) {
            Poset p = rec.to_poset();
            if (check_statement(p, nullptr, distributivity).holds != rec.verdicts.distributive)
                ++disagreements;
            if (rec.verdicts.pc) {
                StarTable t = star_table(p);
                if (check_statement(p, &t, stone_def).holds != rec.verdicts.stone)
                    ++disagreements;
            }
        }
    }
    ok &= expect(disagreements == 0,
                 std::to_string(disagreements) + " DSL/native disagreements");
    return ok;
}

// ---- criterion 8: derived-example oracle cross-checks ----
bool oracle_cross_checks() {
    bool ok = true;
    Poset p = fixtures::load("fig1");
    StarTable t = star_table(p);
    oracle::Rel r = fixtures::rel("fig1");
    auto ost = *oracle::star_table(r);
    int a = p.index_of("a");

    ElemSet ov_lib = overline_set(p, t, ElemSet::single(a));
    ElemSet ov_want;
    for (int e : oracle::overline(r, ost, {a})) ov_want.add(e);
    ok &= expect(ov_lib == ov_want && p.format_set(ov_lib) == "{c,d,1}",
                 "overline({a}) = {c,d,1} (library vs oracle)");

    ElemSet ds_lib = d_set(p, t, ElemSet::single(a));
    ElemSet ds_want;
    for (int e : oracle::d_set(r, ost, {a})) ds_want.add(e);
    ok &= expect(ds_lib == ds_want && p.format_set(ds_lib) == "{b,c,d,1}",
                 "{a}^D = {b,c,d,1} (library vs oracle)");

    ElemSet pi1_lib = pi_operator(p, t, p.up_set(p.index_of("1")));
    ElemSet pi0_lib = pi_operator(p, t, p.up_set(p.index_of("0")));
    ElemSet pi1_want, pi0_want;
    for (int e : oracle::pi(r, ost, oracle::principal_filter(r, p.index_of("1"))))
        pi1_want.add(e);
    for (int e : oracle::pi(r, ost, oracle::principal_filter(r, p.index_of("0"))))
        pi0_want.add(e);
    ok &= expect(pi1_lib == pi1_want && pi1_lib.empty(), "pi(F_1) = {} (library vs oracle)");
    ok &= expect(pi0_lib == pi0_want && p.format_set(pi0_lib) == "{c,d,1}",
                 "pi(F_0) = {c,d,1} (library vs oracle)");
    return ok;
}

}  // namespace

int main() {
    report(1, "golden tables", golden_tables());
    report(2, "counterexample goldens", counterexample_goldens());
    report(3, "filter goldens", filter_goldens());
    report(4, "Stone verdicts", stone_verdicts());
    report(5, "theorem sweep n<=6", theorem_sweep());
    report(6, "enumeration counts", enumeration_counts());
    report(7, "DSL/native agreement n<=5", dsl_agreement());
    report(8, "derived-example oracle cross-checks", oracle_cross_checks());
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
