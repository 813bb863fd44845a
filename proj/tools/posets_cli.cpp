// Command-line front end: tables, props, check, classify-filters, laws,
// enumerate, search. Exit codes: 0 success / law holds, 1 law fails,
// 2 usage or format error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "posets/catalog.hpp"

namespace {

using namespace posets;

std::string format_env(const Poset& p, const Env& env) {
    std::string out;
    for (std::size_t i = 0; i < env.size(); ++i) {
        if (i) out += ",";
        out += env[i].first + "=" + p.label(env[i].second);
    }
    return out;
}

int cmd_tables(const std::string& file) {
    Poset p = read_poset_file(file);
    StarTable t;
    try {
        t = star_table(p);
    } catch (const NotPseudocomplemented& e) {
        std::cerr << "not pseudocomplemented: " << e.what() << "\n";
        return 2;
    }
    std::cout << format_star_table(p, t);
    return 0;
}

int cmd_props(const std::string& file) {
    Poset p = read_poset_file(file);
    Verdicts v = compute_verdicts(p);
    auto bit = [](bool b) { return b ? "1" : "0"; };
    std::cout << "pc=" << bit(v.pc) << "\n"
              << "lattice=" << bit(v.lattice) << "\n"
              << "distributive=" << bit(v.distributive) << "\n"
              << "stone=" << bit(v.stone) << "\n"
              << "stoneid=" << bit(v.stone_identity) << "\n"
              << "ineq1=" << bit(v.ineq1) << "\n";
    return 0;
}

Statement resolve_law(const std::string& spec) {
    if (auto law = find_law(spec)) return *law;
    return parse_statement(spec);
}

int cmd_check(const std::string& file, const std::string& law_spec) {
    Poset p = read_poset_file(file);
    Statement law = resolve_law(law_spec);
    StarTable t;
    const StarTable* tp = nullptr;
    if (mentions_star(law)) {
        try {
            t = star_table(p);
        } catch (const NotPseudocomplemented& e) {
            std::cerr << "law needs a pseudocomplemented poset: " << e.what() << "\n";
            return 2;
        }
        tp = &t;
    } else if (is_pseudocomplemented(p)) {
        t = star_table(p);
        tp = &t;
    }
    CheckResult r = check_statement(p, tp, law);
    if (r.holds) {
        std::cout << "HOLDS checked=" << r.checked << "\n";
        return 0;
    }
    std::cout << "FAILS";
    if (!r.counterexample.empty()) std::cout << " at " << format_env(p, r.counterexample);
    std::cout << " lhs=" << p.format_set(r.lhs) << " rhs=" << p.format_set(r.rhs) << "\n";
    return 1;
}

int cmd_classify_filters(const std::string& file) {
    Poset p = read_poset_file(file);
    StarTable t;
    try {
        t = star_table(p);
    } catch (const NotPseudocomplemented& e) {
        std::cerr << "not pseudocomplemented: " << e.what() << "\n";
        return 2;
    }
    for (const Filter& f : classified_filters(p, t)) {
        std::string flags;
        auto add = [&](bool on, const char* name) {
            if (!on) return;
            if (!flags.empty()) flags += " ";
            flags += name;
        };
        add(f.proper, "proper");
        add(f.prime, "prime");
        add(f.maximal, "maximal");
        add(f.d_filter, "D");
        add(f.coherent, "coherent");
        add(f.strongly_coherent, "strong");
        add(f.closed, "closed");
        add(f.median, "median");
        std::cout << "F_" << p.label(f.generator) << " = " << p.format_set(f.members) << " ["
                  << flags << "]\n";
    }
    return 0;
}

int cmd_laws() {
    std::cout << format_law_library();
    return 0;
}

int cmd_enumerate(int n, const std::string& require_csv, const std::string& out_path,
                  int size_cap, int jobs) {
    Require req = parse_require(require_csv);
    std::vector<CatalogRecord> records = enumerate_posets(n, req, size_cap, jobs);
    save_catalog_file(out_path, records);
    std::cout << "records=" << records.size() << "\n";
    return 0;
}

int cmd_search(int max_n, const std::string& require_csv, const std::string& law_spec,
               const std::string& mode, int limit, const std::string& out_path, int size_cap,
               int jobs) {
    SearchQuery q;
    q.max_n = max_n;
    q.require = parse_require(require_csv);
    if (!law_spec.empty()) q.law = resolve_law(law_spec);
    if (mode == "violations") q.violations = true;
    else if (mode != "witnesses") throw Error("mode must be 'witnesses' or 'violations'");
    q.limit = limit;
    q.size_cap = size_cap;
    q.jobs = jobs;
    std::vector<CatalogRecord> records = search(q);
    save_catalog_file(out_path, records);
    std::cout << "matches=" << records.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite poset algebra workbench"};
    app.require_subcommand(1);

    std::string file, law_spec, require_csv, out_path, mode = "witnesses";
    int n = 0, limit = 100, jobs = 1;
    bool allow_large = false;

    auto* tables = app.add_subcommand("tables", "print the x / x* / x** table and dense set");
    tables->add_option("file", file, "poset file")->required();

    auto* props = app.add_subcommand("props", "print the six cached predicates");
    props->add_option("file", file, "poset file")->required();

    auto* check = app.add_subcommand("check", "check a law against a poset");
    check->add_option("file", file, "poset file")->required();
    check->add_option("--law", law_spec, "bundled law name or statement text")->required();

    auto* classify = app.add_subcommand("classify-filters", "classify every filter");
    classify->add_option("file", file, "poset file")->required();

    app.add_subcommand("laws", "print the bundled law library");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate posets up to isomorphism");
    enumerate->add_option("--n", n, "element count")->required();
    enumerate->add_option("--require", require_csv,
                          "comma-separated verdict flags (pc, lattice, nonlattice, distributive, "
                          "nondistributive, stone, nonstone, stoneid, nonstoneid, ineq1)");
    enumerate->add_option("--out", out_path, "catalog output path")->required();
    enumerate->add_flag("--allow-large", allow_large,
                        "raise the size cap from 7 to 9; counts grow fast (n=8 is ~17k classes, "
                        "n=9 ~180k) and runtime with them");
    enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "search the catalog for witnesses/violations");
    search->add_option("--n", n, "maximum element count")->required();
    search->add_option("--require", require_csv, "comma-separated verdict flags");
    search->add_option("--law", law_spec, "law to test on each matching poset");
    search->add_option("--mode", mode, "witnesses (law holds) or violations (law fails)");
    search->add_option("--limit", limit, "maximum matches")->check(CLI::PositiveNumber);
    search->add_option("--out", out_path, "catalog output path")->required();
    search->add_flag("--allow-large", allow_large, "raise the size cap from 7 to 9");
    search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int size_cap = allow_large ? 9 : posets::kDefaultSizeCap;
        if (tables->parsed()) return cmd_tables(file);
        if (props->parsed()) return cmd_props(file);
        if (check->parsed()) return cmd_check(file, law_spec);
        if (classify->parsed()) return cmd_classify_filters(file);
        if (app.got_subcommand("laws")) return cmd_laws();
        if (enumerate->parsed()) return cmd_enumerate(n, require_csv, out_path, size_cap, jobs);
        if (search->parsed())
            return cmd_search(n, require_csv, law_spec, mode, limit, out_path, size_cap, jobs);
    } catch (const posets::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
