// End-to-end tests of the egf binary. The test runner exports EGF_BIN with
// the path to the built executable; commands run through the shell so the
// environment-variable cases work unchanged.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "composita/builtins.hpp"
#include "composita/text_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

std::string binary_path() {
    const char* bin = std::getenv("EGF_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "EGF_BIN must point at the egf executable");
    return bin;
}

RunResult run(const std::string& args, const std::string& env = "") {
    std::string command = env + " '" + binary_path() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/egf_cli_test_") + name;
}

}  // namespace

TEST_CASE("seq bell") {
    RunResult r = run("seq bell 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n2\n5\n15\n52\n203\n877\n");
}

TEST_CASE("seq euler_zigzag") {
    RunResult r = run("seq euler_zigzag 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n1\n2\n5\n16\n61\n272\n1385\n7936\n");
}

TEST_CASE("seq a000246_style") {
    RunResult r = run("seq a000246_style 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n1\n3\n9\n45\n225\n1575\n11025\n99225\n");
}

TEST_CASE("seq a001680_style") {
    RunResult r = run("seq a001680_style 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n2\n5\n14\n46\n166\n652\n2780\n");
}

TEST_CASE("seq stirling rows") {
    CHECK(run("seq stirling2_row 5").output == "0\n1\n15\n25\n10\n1\n");
    CHECK(run("seq stirling1_row 4").output == "0\n6\n11\n6\n1\n");
}

TEST_CASE("seq rejects unknown names") {
    CHECK(run("seq fibonacci 5").exit_code == 1);
}

TEST_CASE("compose bell numbers") {
    RunResult r = run("compose --outer exp --inner expm1 --order 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n2\n5\n15\n52\n203\n877\n");
}

TEST_CASE("compose euler numbers") {
    RunResult r = run("compose --outer geom --inner sin --order 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n2\n5\n16\n61\n272\n1385\n7936\n");
}

TEST_CASE("compose odd-cycle sequence") {
    RunResult r = run("compose --outer exp --inner artanh --order 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n1\n3\n9\n45\n225\n1575\n11025\n99225\n");
}

TEST_CASE("compose rejects an inner series with a free term") {
    CHECK(run("compose --outer exp --inner exp --order 4").exit_code == 1);
}

TEST_CASE("composita csv of the identity series") {
    RunResult r = run("composita --series x --order 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,k,value\n1,1,1\n2,1,0\n2,2,1\n3,1,0\n3,2,0\n3,3,1\n");
}

TEST_CASE("composita of expm1 contains the scaled stirling entries") {
    RunResult r = run("composita --series expm1 --order 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4,2,7/12\n") != std::string::npos);
    CHECK(r.output.rfind("n,k,value\n", 0) == 0);
}

TEST_CASE("composita aligned text format") {
    RunResult r = run("composita --series x --order 3 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n0 1\n0 0 1\n");
}

TEST_CASE("composita of poly3 matches the closed form") {
    RunResult r = run("composita --series poly3 --order 8 --format jsonl");
    CHECK(r.exit_code == 0);
    // spot-check one closed-form value: F^Delta(5,2) = 1/6
    CHECK(r.output.find(R"({"n":5,"k":2,"value":"1/6"})") != std::string::npos);
}

TEST_CASE("composita rejects unknown series and bad orders") {
    CHECK(run("composita --series nope --order 4").exit_code == 1);
    CHECK(run("composita --series expm1 --order 0").exit_code == 1);
    CHECK(run("composita --series /does/not/exist --order 4").exit_code == 1);
    // geom has a free term, so its composita is not defined
    CHECK(run("composita --series geom --order 4").exit_code == 1);
}

TEST_CASE("output is byte-deterministic across runs") {
    std::string cmd = "scan --family poly3 --from 1 --to 13";
    CHECK(run(cmd).output == run(cmd).output);
    std::string table = "composita --series artanh --order 9 --format csv";
    CHECK(run(table).output == run(table).output);
}

TEST_CASE("order cap from the environment") {
    CHECK(run("composita --series expm1 --order 20", "EGF_MAX_ORDER=10").exit_code == 2);
    CHECK(run("composita --series expm1 --order 10", "EGF_MAX_ORDER=10").exit_code == 0);
    CHECK(run("seq bell 600").exit_code == 2);  // past the default cap
    CHECK(run("scan --family poly3 --from 3 --to 40", "EGF_MAX_ORDER=30").exit_code == 2);
    CHECK(run("seq bell 5", "EGF_MAX_ORDER=banana").exit_code == 1);
}

TEST_CASE("scan touchard_k0 jsonl stream") {
    RunResult r = run("scan --family touchard_k0 --from 2 --to 30");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find(
              R"({"type":"report","family":"touchard_k0","n":2,"value":"0","is_integer":true,"verdict":"consistent_with_prime"})") !=
          std::string::npos);
    CHECK(r.output.find(
              R"({"type":"report","family":"touchard_k0","n":9,"value":"21145/9","is_integer":false,"verdict":"composite_witness"})") !=
          std::string::npos);
    CHECK(r.output.find(
              R"({"type":"certificate","family":"touchard_k0","n":9,"value":"21145/9","denominator":"9"})") !=
          std::string::npos);
    CHECK(r.output.find(R"("type":"summary")") != std::string::npos);
}

TEST_CASE("scan poly3 reproduces the fraction list") {
    RunResult r = run("scan --family poly3 --from 3 --to 13 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("family,n,value,is_integer,verdict,degenerate\n", 0) == 0);
    CHECK(r.output.find("poly3,4,13/4,false,composite_witness,false\n") != std::string::npos);
    CHECK(r.output.find("poly3,13,728283,true,consistent_with_prime,false\n") != std::string::npos);
    CHECK(r.output.find("# summary reports=11 witnesses=6\n") != std::string::npos);
}

TEST_CASE("scan single-element euler range") {
    RunResult r = run("scan --family euler --from 2 --to 2 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "euler n=2 value=1 integer consistent_with_prime\n"
          "summary: 1 reports, 0 witnesses\n");
}

TEST_CASE("scan over a user EGF file") {
    std::string path = temp_path("user_egf.txt");
    {
        std::ofstream f(path);
        f << "# sin x EGF coefficients\n1\n0\n-1\n0\n1\n0\n-1\n0\n1\n0\n-1\n0\n1\n";
    }
    RunResult r = run("scan --egf " + path + " --from 3 --to 13 --format csv --family sin_file");
    CHECK(r.exit_code == 0);
    // prime rows integral
    CHECK(r.output.find("sin_file,3,") != std::string::npos);
    for (int p : {3, 5, 7, 11, 13}) {
        size_t pos = r.output.find("sin_file," + std::to_string(p) + ",");
        REQUIRE(pos != std::string::npos);
        CHECK(r.output.substr(pos).find("true,consistent_with_prime") <
              r.output.substr(pos).find('\n'));
    }
    std::remove(path.c_str());
}

TEST_CASE("scan with a witness-free prime range exits 0") {
    RunResult r = run("scan --family touchard_k0 --from 13 --to 13");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find(R"("witnesses":0)") != std::string::npos);
}

TEST_CASE("scan usage errors") {
    CHECK(run("scan --from 2 --to 4").exit_code == 1);
    CHECK(run("scan --family nope --from 2 --to 4").exit_code == 1);
    CHECK(run("scan --family touchard_k0 --from 4 --to 2").exit_code == 1);
    CHECK(run("scan --family touchard_k0 --from 1 --to 4").exit_code == 1);
}

TEST_CASE("emit-series round trip") {
    std::string path = temp_path("roundtrip.tsv");
    RunResult first = run("composita --series poly3 --order 6 --emit-series " + path);
    CHECK(first.exit_code == 0);

    // the emitted file parses back to the identical series
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(composita::series_from_text(text, composita::Kind::exponential) ==
          composita::builtin_series("poly3", 6));

    // and feeding it back through the CLI reproduces the table byte for byte
    RunResult second = run("composita --series " + path + " --order 6");
    CHECK(second.exit_code == 0);
    CHECK(second.output == first.output);
    std::remove(path.c_str());
}

TEST_CASE("compose accepts integer-EGF coefficient files") {
    std::string path = temp_path("expm1_egf.txt");
    {
        std::ofstream f(path);
        for (int i = 0; i < 7; ++i) f << "1\n";
    }
    RunResult r = run("compose --outer exp --inner " + path + " --order 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n2\n5\n15\n52\n203\n877\n");

    RunResult short_file = run("compose --outer exp --inner " + path + " --order 9");
    CHECK(short_file.exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("output lands in the requested file") {
    std::string path = temp_path("bell.txt");
    RunResult r = run("seq bell 5 --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "1\n1\n2\n5\n15\n");
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 1, help exits 0") {
    CHECK(run("").exit_code == 1);
    CHECK(run("bogus").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("compose --outer exp --order 4").exit_code == 1);
}
