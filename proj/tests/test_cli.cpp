#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using std::filesystem::path;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QWA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

bool contains(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

path temp_dir() {
    path d = std::filesystem::temp_directory_path() / "qwalg-cli-test";
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("cli: builtin and check") {
    RunResult b = run_cli("builtin example-5.13");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.out, "row a: c 1 1 c 1 1"));

    CHECK(run_cli("builtin no-such-thing").exit_code == 2);

    RunResult qw = run_cli("check example-5.13 --class qw");
    CHECK(qw.exit_code == 0);
    CHECK(qw.out == "CLASS qw PASS\n");

    RunResult w = run_cli("check example-5.13 --class wajsberg");
    CHECK(w.exit_code == 1);
    CHECK(w.out == "CLASS wajsberg FAIL witness x=a y=c z=b axiom=W2\n");

    CHECK(run_cli("check example-5.13 --class not-a-class").exit_code == 2);
    CHECK(run_cli("check /nonexistent.alg --class be").exit_code == 2);
}

TEST_CASE("cli: malformed input file") {
    path f = temp_dir() / "bad.alg";
    std::ofstream(f) << "elements: 0 1\none: 1\nzero: 0\nrow 0: 1 qq\nrow 1: 0 1\n";
    RunResult r = run_cli("check " + f.string() + " --class be");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "unknown element"));
}

TEST_CASE("cli: centers") {
    RunResult r = run_cli("centers example-5.13");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Z = {0,1}\n"));
    CHECK(contains(r.out, "O = {0,a,b,c,d,1}\n"));
    CHECK(contains(r.out, "Z-CHECK closure PASS"));
    CHECK(contains(r.out, "O-CHECK structure PASS"));

    RunResult l = run_cli("centers lukasiewicz-3");
    CHECK(contains(l.out, "Z = {0,1/2,1}\n"));
    CHECK(contains(l.out, "O = {0,1}\n"));
}

TEST_CASE("cli: eval") {
    RunResult r = run_cli("eval example-5.13 -e \"x & y = y & x\"");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "FAILS witness x=a y=b\n");

    RunResult z = run_cli("eval example-5.13 -e \"x & y = y & x\" --scope z");
    CHECK(z.exit_code == 0);
    CHECK(z.out == "HOLDS\n");

    RunResult bad = run_cli("eval example-5.13 -e \"x C y\"");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.out, "syntax error"));

    RunResult qw =
        run_cli("eval example-5.13 -e \"x -> ((x & y) & (z & x)) = (x -> y) & (x -> z)\"");
    CHECK(qw.exit_code == 0);
    CHECK(qw.out == "HOLDS\n");

    RunResult lov = run_cli("eval example-5.13 -e \"x || x' = 1\" --scope o");
    CHECK(lov.exit_code == 0);
    CHECK(lov.out == "HOLDS\n");
}

TEST_CASE("cli: verify") {
    RunResult r = run_cli("verify example-5.13");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "THEOREM wajsberg-center PASS"));
    CHECK(contains(r.out, "THEOREM center-lattice PASS"));
    CHECK(contains(r.out, "THEOREM kleene-center PASS"));
    CHECK(contains(r.out, "THEOREM oml-center PASS"));
    CHECK(contains(r.out,
                   "NOTE orthocenter lattice not distributive: "
                   "witness x=a y=b z=c lhs=a rhs=1"));
    CHECK(contains(r.out, "CORPUS summary: pass 103 fail 0 skip 4 info 1"));
}

TEST_CASE("cli: verify flags a mutated table with targeted failures") {
    // same table as the six-element builtin except a -> c is forced to 1,
    // which silently destroys the defining identity but not involutivity
    path f = temp_dir() / "mutated.alg";
    std::ofstream(f) << "elements: 0 a b c d 1\n"
                        "one: 1\nzero: 0\n"
                        "row 0: 1 1 1 1 1 1\n"
                        "row a: c 1 1 1 1 1\n"
                        "row b: d 1 1 1 d 1\n"
                        "row c: a a 1 1 1 1\n"
                        "row d: b 1 b 1 1 1\n"
                        "row 1: 0 a b c d 1\n";
    RunResult chk = run_cli("check " + f.string() + " --class involutive-be");
    CHECK(chk.exit_code == 0);
    RunResult r = run_cli("verify " + f.string());
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "CLASS qw FAIL witness"));
    CHECK(contains(r.out, "CORPUS qw FAIL witness"));
}

TEST_CASE("cli: refute") {
    RunResult held = run_cli("refute -e \"x -> (x & y) = x -> y\" --class qw --max-size 3");
    CHECK(held.exit_code == 0);
    CHECK(held.out == "holds up to size 3\n");

    path out = temp_dir() / "counter.alg";
    RunResult found = run_cli("refute -e \"x & y = y & x\" --class qw --max-size 4 --out " +
                              out.string());
    CHECK(found.exit_code == 1);
    CHECK(contains(found.out, "REFUTED size=4 witness x=a y=b"));
    RunResult back = run_cli("check " + out.string() + " --class qw");
    CHECK(back.exit_code == 0);
}

TEST_CASE("cli: enumerate") {
    RunResult r = run_cli("enumerate --size 4 --class qw --count-only");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "class qw size 4 count 4 complete\n");

    path dir = temp_dir() / "models";
    std::filesystem::remove_all(dir);
    RunResult full = run_cli("enumerate --size 4 --class qw --out " + dir.string());
    CHECK(full.exit_code == 0);
    CHECK(contains(full.out, "model 000 hash fnv1a:"));
    int files = 0;
    for (auto& e : std::filesystem::directory_iterator(dir)) {
        ++files;
        RunResult chk = run_cli("check " + e.path().string() + " --class qw");
        CHECK(chk.exit_code == 0);
    }
    CHECK(files == 4);

    RunResult budget = run_cli("enumerate --size 4 --class qw --count-only --node-budget 3");
    CHECK(budget.exit_code == 3);
    CHECK(contains(budget.out, "partial"));
}

TEST_CASE("cli: hasse") {
    RunResult r = run_cli("hasse boolean-2 --order leq");
    CHECK(r.out == "node 0\nnode 1\nedge 0 1\n");
    RunResult q = run_cli("hasse example-5.13 --order leqq --subset z");
    CHECK(q.out == "node 0\nnode 1\nedge 0 1\n");
}

TEST_CASE("cli: usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
    CHECK(run_cli("check example-5.13 --class qw --bogus-flag").exit_code == 2);
}

TEST_CASE("cli: json format mirrors the text fields") {
    RunResult r = run_cli("check example-5.13 --class wajsberg --format json");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "\"class\": \"wajsberg\""));
    CHECK(contains(r.out, "\"pass\": false"));
    CHECK(contains(r.out, "\"axiom\": \"W2\""));

    RunResult c = run_cli("centers example-5.13 --format json");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "\"elements\": ["));
    CHECK(contains(c.out, "\"structure\": true"));

    RunResult e = run_cli("eval example-5.13 -e \"x & y = y & x\" --format json");
    CHECK(e.exit_code == 1);
    CHECK(contains(e.out, "\"holds\": false"));
    CHECK(contains(e.out, "\"x\": \"a\""));

    RunResult h = run_cli("refute -e \"x -> (x & y) = x -> y\" --class qw --max-size 3 "
                          "--format json");
    CHECK(h.exit_code == 0);
    CHECK(contains(h.out, "\"refuted\": false"));

    RunResult v = run_cli("verify example-5.13 --format json");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "\"distributivity_witness\""));
    CHECK(contains(v.out, "\"lhs\": \"a\""));

    RunResult all = run_cli("check example-5.13 --class all --format json");
    CHECK(all.exit_code == 1);
    CHECK(all.out.front() == '[');
    CHECK(contains(all.out, "\"class\": \"quasilinear\""));

    CHECK(run_cli("check example-5.13 --class qw --format yaml").exit_code == 2);
}

TEST_CASE("cli: deterministic output") {
    for (const char* cmd : {"verify example-5.13", "enumerate --size 4 --class qw",
                            "hasse example-5.13", "centers lukasiewicz-4"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}
