#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Golden tests against the installed binary: exact bytes and exit codes.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name + ".poset";
}

}  // namespace

TEST_CASE("tables golden: fig1") {
    RunResult r = run("tables " + fixture("fig1"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "x   | 0 a b c d 1\n"
          "x*  | 1 b a 0 0 0\n"
          "x** | 0 a b 1 1 1\n"
          "D = {c,d,1}\n");
}

TEST_CASE("tables golden: fig2") {
    RunResult r = run("tables " + fixture("fig2"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "x   | 0 a b c d e f 1\n"
          "x*  | 1 f c f 0 0 c 0\n"
          "x** | 0 c f c 1 1 f 1\n"
          "D = {d,e,1}\n");
}

TEST_CASE("tables golden: fig3") {
    RunResult r = run("tables " + fixture("fig3"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "x   | 0 a b c d e f g 1\n"
          "x*  | 1 d e 0 e d 0 0 0\n"
          "x** | 0 e d 1 d e 1 1 1\n"
          "D = {c,f,g,1}\n");
}

TEST_CASE("tables golden: fig4a") {
    RunResult r = run("tables " + fixture("fig4a"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "x   | 0 a b c d e 1\n"
          "x*  | 1 0 0 0 0 0 0\n"
          "x** | 0 1 1 1 1 1 1\n"
          "D = {a,b,c,d,e,1}\n");
}

TEST_CASE("tables golden: fig4b has x** = x") {
    RunResult r = run("tables " + fixture("fig4b"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "x   | 0 a b c d e f g h i j 1\n"
          "x*  | 1 j i h g f e d c b a 0\n"
          "x** | 0 a b c d e f g h i j 1\n"
          "D = {1}\n");
}

TEST_CASE("tables on a non-pseudocomplemented poset exits 2") {
    std::string path = std::string(TMP_DIR) + "/vee_tmp.poset";
    {
        std::ofstream f(path);
        f << "poset vee\nelements 0 a b\ncovers 0<a 0<b\n";
    }
    RunResult r = run("tables " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    std::remove(path.c_str());
}

TEST_CASE("props golden") {
    RunResult r = run("props " + fixture("fig1"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "pc=1\nlattice=0\ndistributive=1\nstone=0\nstoneid=0\nineq1=0\n");
    RunResult r2 = run("props " + fixture("fig2"));
    CHECK(r2.out == "pc=1\nlattice=0\ndistributive=0\nstone=1\nstoneid=1\nineq1=0\n");
    RunResult r4 = run("props " + fixture("fig4a"));
    CHECK(r4.out == "pc=1\nlattice=0\ndistributive=1\nstone=1\nstoneid=1\nineq1=1\n");
}

TEST_CASE("check golden: stone identity fails on fig1 at a") {
    RunResult r = run("check " + fixture("fig1") + " --law stone_identity");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "FAILS at x=a lhs={c,d,1} rhs={1}\n");
}

TEST_CASE("check golden: stone_def holds on fig4a") {
    RunResult r = run("check " + fixture("fig4a") + " --law stone_def");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "HOLDS checked=49\n");
}

TEST_CASE("check golden: inequality (1) fails on fig2 at (d,e)") {
    RunResult r = run("check " + fixture("fig2") + " --law ineq1");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "FAILS at x=d,y=e lhs={c,f} rhs={0}\n");
}

TEST_CASE("check golden: distributivity fails on fig2 at the first triple") {
    RunResult r = run("check " + fixture("fig2") + " --law distributivity");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "FAILS at x=a,y=f,z=c lhs={0,a,c} rhs={0,a}\n");
}

TEST_CASE("check accepts raw statements") {
    RunResult r = run("check " + fixture("fig1") + " --law \"x <= x**\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "HOLDS checked=6\n");
    RunResult bad = run("check " + fixture("fig1") + " --law \"Max(x\"");
    CHECK(bad.exit_code == 2);
    // a star law on a non-pseudocomplemented poset is a usage error
    std::string path = std::string(TMP_DIR) + "/vee_tmp2.poset";
    {
        std::ofstream f(path);
        f << "poset vee\nelements 0 a b\ncovers 0<a 0<b\n";
    }
    RunResult vee = run("check " + path + " --law stone_identity");
    CHECK(vee.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("classify-filters golden: fig1") {
    RunResult r = run("classify-filters " + fixture("fig1"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "F_0 = {0,a,b,c,d,1} [D coherent closed]\n"
          "F_a = {a,c,d,1} [proper prime maximal D]\n"
          "F_b = {b,c,d,1} [proper prime maximal D]\n"
          "F_c = {c,1} [proper prime median]\n"
          "F_d = {d,1} [proper prime median]\n"
          "F_1 = {1} [proper median]\n");
}

TEST_CASE("classify-filters golden: fig4a") {
    RunResult r = run("classify-filters " + fixture("fig4a"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "F_0 = {0,a,b,c,d,e,1} [D coherent closed]\n"
          "F_a = {a,b,c,d,e,1} [proper prime maximal D coherent closed median]\n"
          "F_b = {b,d,e,1} [proper prime median]\n"
          "F_c = {c,d,e,1} [proper prime median]\n"
          "F_d = {d,1} [proper prime median]\n"
          "F_e = {e,1} [proper prime median]\n"
          "F_1 = {1} [proper median]\n");
}

TEST_CASE("classify-filters golden: fig4b") {
    RunResult r = run("classify-filters " + fixture("fig4b"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "F_0 = {0,a,b,c,d,e,f,g,h,i,j,1} [D coherent closed]\n"
          "F_a = {a,e,g,h,i,1} [proper prime maximal D coherent closed median]\n"
          "F_b = {b,e,g,h,j,1} [proper prime maximal D coherent closed median]\n"
          "F_c = {c,f,g,i,j,1} [proper prime maximal D coherent closed median]\n"
          "F_d = {d,f,h,i,j,1} [proper prime maximal D coherent closed median]\n"
          "F_e = {e,g,h,1} [proper D coherent closed median]\n"
          "F_f = {f,i,j,1} [proper D coherent closed median]\n"
          "F_g = {g,1} [proper D coherent closed median]\n"
          "F_h = {h,1} [proper D coherent closed median]\n"
          "F_i = {i,1} [proper D coherent closed median]\n"
          "F_j = {j,1} [proper D coherent closed median]\n"
          "F_1 = {1} [proper D coherent closed median]\n");
}

TEST_CASE("laws prints the library") {
    RunResult r = run("laws");
    CHECK(r.exit_code == 0);
    std::ifstream f(std::string(FIXTURE_DIR) + "/library.laws");
    std::stringstream want;
    want << f.rdbuf();
    CHECK(r.out == want.str());
}

TEST_CASE("enumerate writes a loadable catalog") {
    std::string out = std::string(TMP_DIR) + "/n4.catalog";
    RunResult r = run("enumerate --n 4 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "records=16\n");
    std::ifstream f(out);
    REQUIRE(f.good());
    std::string line;
    std::getline(f, line);
    CHECK(line == "catalog v1");
    std::remove(out.c_str());
}

TEST_CASE("search reports matches") {
    std::string out = std::string(TMP_DIR) + "/search.catalog";
    // exactly one pseudocomplemented non-Stone class exists below 6 elements
    RunResult r = run("search --n 5 --require pc,nonstone --limit 10 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "matches=1\n");
    RunResult r6 = run("search --n 6 --require pc,nonstone --limit 2 --out " + out);
    CHECK(r6.out == "matches=2\n");
    std::remove(out.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("tables /nonexistent.poset").exit_code == 2);
    CHECK(run("check " + fixture("fig1") + " --law no_such_law_at_all").exit_code == 2);
    CHECK(run("enumerate --n 9 --out /tmp/x.catalog").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}
