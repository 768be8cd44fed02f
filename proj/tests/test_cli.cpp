#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "gdet/cli.hpp"
#include "gdet/spec_text.hpp"

using namespace gdet;
using json = nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(const Command& cmd) {
    std::ostringstream out, err;
    int status = execute(cmd, out, err);
    return {status, out.str(), err.str()};
}

RunResult run_args(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"gdet"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spec string parsing") {
    Group g = parse_group("Z4xZ2");
    CHECK(g.moduli() == std::vector<int>{4, 2});
    CHECK(format_group(g) == "Z4xZ2");

    CHECK(parse_group("Z1").order() == 1);
    CHECK_THROWS_AS(parse_group(""), ParseError);
    CHECK_THROWS_AS(parse_group("Z0"), ParseError);
    CHECK_THROWS_AS(parse_group("Z4x"), ParseError);
    CHECK_THROWS_AS(parse_group("A4"), ParseError);

    // parse errors carry the offending position
    try {
        parse_group("Z4yZ2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }

    Group z4({4});
    CHECK(parse_element("2", z4) == Element({2}));
    CHECK(parse_element("-1", z4) == Element({3}));
    CHECK(parse_element("(1,1)", g) == Element({1, 1}));
    CHECK(parse_element("(5,-1)", g) == Element({1, 1}));
    CHECK_THROWS_AS(parse_element("(1,2,3)", g), ParseError);
    CHECK_THROWS_AS(parse_element("1", g), ParseError);

    CHECK(parse_generators("", z4).empty());
    CHECK(parse_generators("2", z4).size() == 1);
    CHECK(parse_generators("(2,0);(0,1)", g).size() == 2);

    std::vector<Rational> a = parse_assignment("x0=2;x1=1", Group({2}));
    CHECK(a == std::vector<Rational>{Rational(2), Rational(1)});
    std::vector<Rational> b = parse_assignment("x(0,1)=1/2;x(0,0)=-3;x(1,0)=0;x(1,1)=7",
                                               Group({2, 2}));
    CHECK(b[1] == Rational(1, 2));
    CHECK_THROWS_AS(parse_assignment("x0=2", Group({2})), Error);           // incomplete
    CHECK_THROWS_AS(parse_assignment("x0=2;x0=1;x1=0", Group({2})), Error); // duplicate
    CHECK_THROWS_AS(parse_assignment("x0=1/0;x1=2", Group({2})), Error);
}

TEST_CASE("factor command document") {
    Command cmd;
    cmd.verb = Verb::factor;
    cmd.group = "Z3";
    cmd.format = "json";
    RunResult r = run(cmd);
    REQUIRE(r.status == 0);

    json doc = json::parse(r.out);
    CHECK(doc["command"] == "factor");
    CHECK(doc["group"] == "Z3");
    CHECK(doc["level"] == 3);
    CHECK(doc["status"] == "oracle-verified");
    REQUIRE(doc["factors"].size() == 3);

    // every emitted canonical polynomial re-parses to an equal value
    Group z3({3});
    Poly product = Poly::constant(3, 3, Rational(1));
    for (const auto& f : doc["factors"]) {
        Poly factor = parse_poly(f.get<std::string>(), z3, 3);
        Poly again = parse_poly(to_canonical_text(factor, z3), z3, 3);
        CHECK(factor == again);
        product = product * factor;
    }
    CHECK(product == parse_poly(doc["determinant"].get<std::string>(), z3, 3));
}

TEST_CASE("factor text output mirrors the classical notation") {
    Command cmd;
    cmd.verb = Verb::factor;
    cmd.group = "Z3";
    RunResult r = run(cmd);
    REQUIRE(r.status == 0);
    CHECK(r.out.find("x[0] + w*x[1] + w^2*x[2]") != std::string::npos);
    CHECK(r.out.find("x[0] + w^2*x[1] + w*x[2]") != std::string::npos);
    CHECK(r.out.find("status: oracle-verified") != std::string::npos);
}

TEST_CASE("extend command document") {
    Command cmd;
    cmd.verb = Verb::extend;
    cmd.group = "Z4";
    cmd.subgroup = "2";
    cmd.format = "json";
    RunResult r = run(cmd);
    REQUIRE(r.status == 0);

    json doc = json::parse(r.out);
    CHECK(doc["command"] == "extend");
    CHECK(doc["status"] == "oracle-verified");
    REQUIRE(doc["coefficients"].size() == 2);
    CHECK(doc["coefficients"][0]["h"] == "0");
    CHECK(doc["coefficients"][1]["h"] == "2");

    Group z4({4});
    Poly a0 = parse_poly(doc["coefficients"][0]["poly"].get<std::string>(), z4, 4);
    Poly a2 = parse_poly(doc["coefficients"][1]["poly"].get<std::string>(), z4, 4);
    Poly theta = parse_poly(doc["determinant"].get<std::string>(), z4, 4);
    CHECK(theta == a0 * a0 - a2 * a2);
}

TEST_CASE("generalize command") {
    Command cmd;
    cmd.verb = Verb::generalize;
    cmd.group = "Z4";
    cmd.subgroup = "2";
    cmd.format = "json";
    RunResult r = run(cmd);
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["factors"].size() == 2);
    CHECK(doc["subgroup"]["order"] == 2);
    CHECK(doc["subgroup"]["index"] == 2);

    // omitting the subgroup means H = G, the classical factor list
    Command full;
    full.verb = Verb::generalize;
    full.group = "Z4";
    full.format = "json";
    json doc_full = json::parse(run(full).out);
    CHECK(doc_full["factors"].size() == 4);
}

TEST_CASE("invert command") {
    Command cmd;
    cmd.verb = Verb::invert;
    cmd.group = "Z2";
    cmd.assignment = "x0=2;x1=1";
    cmd.format = "json";
    RunResult r = run(cmd);
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["status"] == "identity-checked");
    CHECK(doc["inverse"][0]["value"] == "[2/3]");
    CHECK(doc["inverse"][1]["value"] == "[-1/3]");

    // singular draw exits 1 and names the vanishing character
    Command singular;
    singular.verb = Verb::invert;
    singular.group = "Z3";
    singular.assignment = "x0=1;x1=1;x2=1";
    RunResult s = run(singular);
    CHECK(s.status == 1);
    CHECK(s.err.find("chi(1)") != std::string::npos);

    // malformed input is a usage error
    Command bad;
    bad.verb = Verb::invert;
    bad.group = "Z2";
    bad.assignment = "x0=2";
    CHECK(run(bad).status == 2);
}

TEST_CASE("verify command") {
    Command cmd;
    cmd.verb = Verb::verify;
    cmd.group = "Z2xZ2";
    cmd.format = "json";
    RunResult r = run(cmd);
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["overall"] == "pass");
    for (const auto& prop : doc["properties"]) CHECK(prop["status"] != "fail");

    // seeds only change the randomized instances, never the outcome
    for (std::uint64_t seed : {2ULL, 3ULL, 23ULL}) {
        Command seeded;
        seeded.verb = Verb::verify;
        seeded.group = "Z4xZ2";
        seeded.seed = seed;
        CHECK(run(seeded).status == 0);
    }
}

TEST_CASE("identical commands produce byte-identical documents") {
    for (const char* format : {"text", "json"}) {
        Command cmd;
        cmd.verb = Verb::extend;
        cmd.group = "Z4xZ2";
        cmd.subgroup = "(2,0);(0,1)";
        cmd.format = format;
        RunResult first = run(cmd);
        RunResult second = run(cmd);
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("argv front end") {
    RunResult ok = run_args({"factor", "--group", "Z3", "--format", "json"});
    CHECK(ok.status == 0);
    CHECK(json::parse(ok.out)["command"] == "factor");

    CHECK(run_args({"factor"}).status == 2);                      // missing --group
    CHECK(run_args({"unknown-verb"}).status == 2);
    CHECK(run_args({"factor", "--group", "Zx"}).status == 2);     // parse error
    CHECK(run_args({"--help"}).status == 0);

    RunResult numeric = run_args({"invert", "--group", "Z2", "--assign", "x0=2;x1=1",
                                  "--numeric"});
    CHECK(numeric.status == 0);
    CHECK(numeric.out.find("0.666666666667") != std::string::npos);

    RunResult timed = run_args({"factor", "--group", "Z2", "--timing"});
    CHECK(timed.status == 0);
    CHECK(timed.out.find("elapsed:") != std::string::npos);
}
