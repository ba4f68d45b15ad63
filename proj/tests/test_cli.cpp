#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the CLI with stdout captured; diagnostics go to the error stream
// and are dropped here unless asked for.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(LINREC_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("terms: exact Fibonacci") {
    const RunResult r =
        run_cli("terms --coeffs 1,1 --init 1,1 --from 1 --count 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1 2 3 5 8 13 21 34 55\n");
}

TEST_CASE("terms: residues near the Pisano boundary") {
    const RunResult r =
        run_cli("terms --coeffs 1,1 --init 1,1 --mod 10 --from 58 --count 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9 1 0 1\n");
    // one full period later the residues repeat
    const RunResult shifted =
        run_cli("terms --coeffs 1,1 --init 1,1 --mod 10 --from 118 --count 4");
    CHECK(shifted.out == r.out);
}

TEST_CASE("terms: count 0 is empty output, exit 0") {
    const RunResult r = run_cli("terms --coeffs 1,1 --init 1,1 --count 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("terms: JSON emits decimal strings and is byte-stable") {
    const RunResult r =
        run_cli("terms --coeffs 1,1 --init 1,1 --count 5 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          R"({"from":1,"count":5,"mod":null,"terms":["1","1","2","3","5"]})"
          "\n");
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("period: single modulus") {
    const RunResult r = run_cli("period --coeffs 1,1 --init 1,1 --mod 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "m=7: preperiod=0 cycle_len=16 fundamental=16\n");
}

TEST_CASE("period: check line") {
    const RunResult r =
        run_cli("period --coeffs 1,1 --init 1,1 --mod 10 --check 60");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("is_period=true") != std::string::npos);
    CHECK(r.out.find("necessary=true") != std::string::npos);
}

TEST_CASE("period: preperiodic orbit reports no fundamental") {
    const RunResult r = run_cli("period --coeffs 2 --init 1 --mod 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "m=8: preperiod=3 cycle_len=1 fundamental=none\n");
}

TEST_CASE("period: modulus range is ordered and JSON round-trips") {
    const RunResult r =
        run_cli("period --coeffs 1,1 --init 1,1 --mod-range 2..5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "m=2: preperiod=0 cycle_len=3 fundamental=3\n"
                   "m=3: preperiod=0 cycle_len=8 fundamental=8\n"
                   "m=4: preperiod=0 cycle_len=6 fundamental=6\n"
                   "m=5: preperiod=0 cycle_len=20 fundamental=20\n");

    const RunResult js =
        run_cli("period --coeffs 1,1 --init 1,1 --mod-range 2..5 --json");
    CHECK(js.exit_code == 0);
    const auto arr = nlohmann::ordered_json::parse(js.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 4);
    CHECK(arr[0]["m"] == 2);
    CHECK(arr[3]["fundamental_period"] == 20);
    CHECK(arr.dump() + "\n" == js.out);
}

TEST_CASE("period: missing modulus is a usage error") {
    CHECK(run_cli("period --coeffs 1,1 --init 1,1").exit_code == 1);
    CHECK(run_cli("period --coeffs 1,1 --init 1,1 --mod 0").exit_code == 1);
}

TEST_CASE("family: rows for q-max 9") {
    const RunResult r = run_cli("family --q-max 9");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q=1 m=7 ell=16 fundamental=16 multiple=no\n"
                   "q=3 m=17 ell=36 fundamental=36 multiple=no\n"
                   "q=7 m=37 ell=76 fundamental=76 multiple=no\n"
                   "q=9 m=47 ell=96 fundamental=32 multiple=yes\n");

    const RunResult js = run_cli("family --q-max 9 --json");
    const auto arr = nlohmann::ordered_json::parse(js.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 4);
    CHECK(arr[3]["q"] == 9);
    CHECK(arr[3]["m"] == 47);
    CHECK(arr[3]["ell"] == 96);
    CHECK(arr[3]["fundamental"] == 32);
    CHECK(arr[3]["is_multiple"] == true);
    CHECK(arr.dump() + "\n" == js.out);
}

TEST_CASE("family: q-max 0 is a usage error") {
    CHECK(run_cli("family --q-max 0").exit_code == 1);
}

TEST_CASE("verify: Fibonacci passes everything") {
    const RunResult r = run_cli("verify --coeffs 1,1 --init 1,1 --mod 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("[fail]") == std::string::npos);
}

TEST_CASE("verify: preperiodic recurrence skips period-dependent checks") {
    const RunResult r = run_cli("verify --coeffs 2 --init 1 --mod 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("skipped: no fundamental period") != std::string::npos);
}

TEST_CASE("verify: corrupted matrix trips the violation channel") {
    const RunResult r =
        run_cli("verify --coeffs 1,1 --init 1,1 --mod 7 --corrupt-mk");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("[fail]") != std::string::npos);
}

TEST_CASE("coeffs and matrix") {
    const RunResult c = run_cli("coeffs --coeffs 1,2,3 --init 1,1,1");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "1 3 11\n");

    const RunResult m = run_cli("matrix --coeffs 1,1 --init 1,1");
    CHECK(m.exit_code == 0);
    CHECK(m.out == "1 1\n1 2\n");

    const RunResult mj = run_cli("matrix --coeffs 1,1 --init 1,1 --json");
    CHECK(mj.out == R"({"rows":2,"cols":2,"entries":[[1,1],[1,2]]})"
                    "\n");
}

TEST_CASE("sd") {
    const RunResult fib = run_cli("sd --coeffs 1,1 --init 1,1 --bound 30");
    CHECK(fib.exit_code == 0);
    CHECK(fib.out == "strong_divisibility(bound=30): true\n");

    const RunResult pow = run_cli("sd --coeffs 2 --init 1 --bound 6");
    CHECK(pow.exit_code == 0);
    CHECK(pow.out == "strong_divisibility(bound=6): false\n");
}

TEST_CASE("solve-residue") {
    const RunResult r =
        run_cli("solve-residue --coeffs 1,1 --init 1,1 --mod 10 --bound 120");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "residues {0}\ncandidates [60, 120]\n");

    const RunResult js = run_cli(
        "solve-residue --coeffs 1,1 --init 1,1 --mod 10 --bound 120 --json");
    CHECK(js.out ==
          R"({"m":10,"residues":[0],"bound":120,"candidates":[60,120]})"
          "\n");
}

TEST_CASE("recurrence from a JSON file") {
    const std::string path = "/tmp/linrec_cli_test_rec.json";
    {
        std::ofstream f(path);
        f << R"({"k":2,"coeffs":[1,1],"init":[1,1]})";
    }
    const RunResult r = run_cli("terms --file " + path + " --count 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1 2 3 5 8\n");

    // exactly one source
    CHECK(run_cli("terms --file " + path + " --coeffs 1,1 --init 1,1")
              .exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("malformed flags exit 1 with a diagnostic on stderr") {
    CHECK(run_cli("terms --coeffs 1,1").exit_code == 1);
    CHECK(run_cli("terms --coeffs a,b --init 1,1").exit_code == 1);
    CHECK(run_cli("terms --coeffs 1,1 --init 1,1 --bogus").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    const RunResult diag = run_cli("terms --coeffs 1,1", true);
    CHECK(diag.out.find("error") != std::string::npos);
}

TEST_CASE("big integers flow through the CLI as decimal strings") {
    const RunResult r = run_cli(
        "terms --coeffs 1208925819614629174706176,1 --init 1,1 --count 4 "
        "--json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["terms"][2] == "1208925819614629174706177");
}
