#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out; // stdout only
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MTV_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("eval") {
    auto r = run("eval T 2 --digits 20");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "2.467401100272339654")); // pi^2/4
    CHECK(contains(r.out, "T(2)"));

    auto rt = run("eval t 2 --digits 20");
    CHECK(rt.exit_code == 0);
    CHECK(contains(rt.out, "1.233700550136169827")); // pi^2/8

    auto rz = run("eval zeta 1,2 --digits 20");
    CHECK(rz.exit_code == 0);
    CHECK(contains(rz.out, "1.202056903159594285")); // zeta(3)

    auto ra = run("eval Z \"1;-\" --digits 20");
    CHECK(ra.exit_code == 0);
    CHECK(contains(ra.out, "-6.9314718055994530942e-1")); // -log 2

    // route flag changes nothing numerically
    auto r1 = run("eval T 1,3 --digits 30");
    auto r2 = run("eval T 1,3 --digits 30 --route expanded");
    auto r3 = run("eval T 1,3 --digits 30 --route signed");
    CHECK(r1.out == r2.out);
    CHECK(r1.out == r3.out);
}

TEST_CASE("eval error paths") {
    CHECK(run("eval T 1,1").exit_code == 2);   // inadmissible
    CHECK(run("eval T 0,2").exit_code == 2);   // bad part
    CHECK(run("eval q 2").exit_code == 2);     // unknown family
    CHECK(run("eval T 2 --route bogus").exit_code == 2);
    CHECK(run("eval T 2 --digits 5").exit_code == 2); // below minimum
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("").exit_code == 2); // missing subcommand
}

TEST_CASE("dual, shuffle, stuffle display") {
    auto d = run("dual 4");
    CHECK(d.exit_code == 0);
    CHECK(d.out == "(4) -> (1,1,2)\n");

    auto sh = run("shuffle 2 2");
    CHECK(sh.exit_code == 0);
    CHECK(sh.out == "4*(1,3) + 2*(2,2)\n");

    auto st = run("stuffle 2 2");
    CHECK(st.exit_code == 0);
    CHECK(st.out == "2*(2,2) + 1*(4)\n");

    auto st2 = run("stuffle 2 3");
    CHECK(st2.out == "1*(2,3) + 1*(3,2) + 1*(5)\n");

    CHECK(run("dual 1,1").exit_code == 2); // inadmissible
}

TEST_CASE("json output is well formed") {
    auto r = run("eval T 2 --digits 20 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"family\": \"T\""));
    CHECK(contains(r.out, "\"value\": \"2.467401100272339654"));

    auto s = run("shuffle 2 2 --format json");
    CHECK(contains(s.out, "\"display\": \"4*(1,3) + 2*(2,2)\""));

    auto c = run("shuffle 2 2 --format csv");
    CHECK(contains(c.out, "index,coeff"));
    CHECK(contains(c.out, "\"1,3\",4"));
}

TEST_CASE("verify") {
    auto r = run("verify duality --index 1,3 --digits 30");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PASS"));
    CHECK(contains(r.out, "duality"));

    CHECK(run("verify sf2 --k 5 --digits 25").exit_code == 0);
    CHECK(run("verify shuffle-tt --k 6").exit_code == 0);
    CHECK(run("verify parity --p 2 --q 3 --digits 25").exit_code == 0);
    CHECK(run("verify sf2 --k 2 --digits 25").exit_code == 2); // k too small

    // conjecture status never breaks the exit code
    auto m = run("verify machide --k 4 --digits 30");
    CHECK(m.exit_code == 0);
    CHECK(contains(m.out, "SUPPORTED"));
}

TEST_CASE("genfun") {
    auto ok = run("genfun 1/8 -1/8 --digits 20");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "PASS"));
    CHECK(run("genfun 1/2 -1/2").exit_code == 2);  // out of domain
    CHECK(run("genfun 1/8 1/8").exit_code == 2);   // Y must be negative
}

TEST_CASE("lindep") {
    auto r = run("lindep \"zeta(6)\" \"T(6)\" --digits 40");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "FOUND"));
    CHECK(contains(r.out, "63*[zeta(6)] - 32*[T(6)] = 0"));

    auto p = run("lindep \"pi^2\" \"T(2)\" --digits 40");
    CHECK(p.exit_code == 0);
    CHECK(contains(p.out, "1*[pi^2] - 4*[T(2)] = 0"));

    auto n = run("lindep pi log2 --digits 40");
    CHECK(n.exit_code == 0);
    CHECK(contains(n.out, "NONE"));

    auto prod = run("lindep \"T(2)*T(3)\" \"T(2)*T(3)\" --digits 30");
    CHECK(prod.exit_code == 0);
    CHECK(contains(prod.out, "FOUND"));

    CHECK(run("lindep pi").exit_code == 2);            // needs two expressions
    CHECK(run("lindep \"T(\" pi").exit_code == 2);      // parse error
    CHECK(run("lindep \"T(1,1)\" pi").exit_code == 2);  // inadmissible inside
}

TEST_CASE("dims table and determinism across jobs") {
    auto r = run("dims --k-min 3 --k-max 4 --digits 60 --families T");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "weight"));
    CHECK(contains(r.out, "T"));

    auto j1 = run("dims --k-min 3 --k-max 4 --digits 60 "
                  "--families T,t,union,intersection --jobs 1");
    auto j4 = run("dims --k-min 3 --k-max 4 --digits 60 "
                  "--families T,t,union,intersection --jobs 4");
    CHECK(j1.exit_code == 0);
    CHECK(j1.out == j4.out);

    auto js = run("dims --k-min 3 --k-max 3 --digits 60 --families T,t,union "
                  "--format json");
    CHECK(js.exit_code == 0);
    CHECK(contains(js.out, "\"family\": \"union\""));
    CHECK(contains(js.out, "\"dimension\": 2"));
}

TEST_CASE("cache directory round trip") {
    namespace fs = std::filesystem;
    std::mt19937_64 rng(std::random_device{}());
    fs::path dir = fs::temp_directory_path() /
                   ("mtv-cli-cache-" + std::to_string(rng()));
    std::string flag = " --cache-dir " + dir.string();
    auto first = run("eval T 2,3 --digits 40" + flag);
    CHECK(first.exit_code == 0);
    CHECK(fs::exists(dir / "values.txt"));
    CHECK(fs::file_size(dir / "values.txt") > 0);
    auto second = run("eval T 2,3 --digits 40" + flag);
    CHECK(second.out == first.out);
    fs::remove_all(dir);
}
