#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "kschur/json_io.hpp"

using namespace kschur;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(KSCHUR_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.code = WEXITSTATUS(status);
    return r;
}

} // namespace

TEST_CASE("genfun subcommand") {
    CliResult r = run_cli("genfun --family jq --outer 2 --vars 1");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    MultiPoly p = poly_from_json(j);
    MultiPoly expect;
    expect.add_term(Monomial::var(xvar(1), 2), BetaInt(2));
    expect.add_term(Monomial::var(xvar(1), 1), -BetaInt::beta());
    CHECK(p == expect);

    // byte determinism
    CliResult again = run_cli("genfun --family jq --outer 2 --vars 1");
    CHECK(again.out == r.out);

    CliResult pretty = run_cli("genfun --family jq --outer 2 --vars 1 --format pretty");
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("x1") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
    CliResult r = run_cli("enumerate --family btq --outer 2 --max-value 1 --count-only");
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    CliResult listing = run_cli("enumerate --family svtq --outer 1 --max-value 1");
    CHECK(listing.code == 0);
    // three JSON lines, each parseable
    int lines = 0;
    size_t pos = 0;
    while ((pos = listing.out.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 3);
}

TEST_CASE("verify cauchy subcommand exit codes") {
    CliResult pass = run_cli("verify cauchy --kind qp --nx 1 --ny 1 --max-deg 4");
    CHECK(pass.code == 0);
    Json j = Json::parse(pass.out);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("residual_terms") == 0);
}

TEST_CASE("bk subcommand round trip") {
    // a semistandard tableau: swap then unswap returns the input
    BarTableau t;
    t.shape = shifted_diagram({3, 1});
    t.cells = {{{1, 1}, Entry::parse("1").code()},
               {{1, 2}, Entry::parse("1").code()},
               {{1, 3}, Entry::parse("2'").code()},
               {{2, 2}, Entry::parse("2").code()}};
    t.bars = {{{1, 1}, {1, 2}}, {{1, 3}}, {{2, 2}}};
    t.normalize();
    std::string file = "/tmp/kschur_cli_test_tableau.json";
    {
        FILE* f = fopen(file.c_str(), "w");
        REQUIRE(f);
        std::string s = bt_to_json(t).dump();
        fwrite(s.data(), 1, s.size(), f);
        fclose(f);
    }
    CliResult swapped = run_cli("bk swap --in " + file);
    CHECK(swapped.code == 0);
    BarTableau sorted = bt_from_json(Json::parse(swapped.out));
    {
        FILE* f = fopen(file.c_str(), "w");
        REQUIRE(f);
        std::string s = bt_to_json(sorted).dump();
        fwrite(s.data(), 1, s.size(), f);
        fclose(f);
    }
    CliResult back = run_cli("bk unswap --in " + file);
    CHECK(back.code == 0);
    CHECK(bt_from_json(Json::parse(back.out)) == t);
}

TEST_CASE("pieri subcommand") {
    CliResult r = run_cli("pieri --kind chat --lambda 5,4,1 --nu 8,5,3,1");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    Int total = 0;
    for (const auto& [n, v] : j.at("values").items()) total += Int(v.get<std::string>());
    CHECK(total == 12);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("genfun --family nosuch --outer 2 --vars 1").code == 2);
    CHECK(run_cli("genfun --family jq --outer 4,4 --vars 1").code == 2);
    CHECK(run_cli("nosuchcommand").code == 2);
}

TEST_CASE("polynomial json round trip") {
    MultiPoly p(5);
    p.add_term(Monomial::var(xvar(1), 2) * Monomial::var(yvar(3), 1), BetaInt::monomial(Int("123456789012345678901234567890"), 2));
    p.add_term(Monomial::one(), BetaInt(-7));
    Json j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
}
