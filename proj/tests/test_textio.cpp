#include <catch2/catch_amalgamated.hpp>

#include "planarlie/textio.hpp"

#include "testutil.hpp"

using namespace planarlie;

TEST_CASE("derivation grammar") {
    Derivation d = parse_derivation("y^2 dx - (x/(y+1)) dy");
    CHECK(d.cx == parse_ratfunc("y^2"));
    CHECK(d.cy == -parse_ratfunc("x") / parse_ratfunc("y + 1"));

    CHECK(parse_derivation("dx") == Derivation::dx());
    CHECK(parse_derivation("-dx") == -Derivation::dx());
    CHECK(parse_derivation("2/3x y dx + dy").cx == parse_ratfunc("2/3 * x * y"));
}

TEST_CASE("syntax errors carry position and expectations") {
    CHECK_THROWS_AS(parse_derivation("x dz"), SyntaxError);
    try {
        parse_derivation("x dz");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 2);
        CHECK(!e.expected().empty());
    }
    CHECK_THROWS_AS(parse_derivation("dx +"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc_t("x"), SyntaxError); // univariate context accepts t only
    CHECK_THROWS_AS(parse_generators(" ; "), SyntaxError);
}

TEST_CASE("generator lists split on semicolons") {
    auto gens = parse_generators("dx; y dx; dy");
    REQUIRE(gens.size() == 3);
    CHECK(gens[1] == parse_derivation("y dx"));
}

TEST_CASE("render-parse round trip on random derivations") {
    testutil::Rng rng(10001);
    for (int i = 0; i < 60; ++i) {
        Derivation d = testutil::random_derivation(rng);
        CHECK(parse_derivation(derivation_str(d)) == d);
    }
    CHECK(derivation_str(parse_derivation("dx")) == "dx");
    CHECK(derivation_str(parse_derivation("0 dx")) == "0");
    CHECK(derivation_str(parse_derivation("dy - x dx")) == "-x dx + dy");
}

TEST_CASE("univariate parsing maps t onto the internal variable") {
    RatFunc f = parse_ratfunc_t("t^2 + 1/2");
    CHECK(f == parse_ratfunc("x^2 + 1/2"));
    CHECK(ratfunc_str_t(f) == "t^2 + 1/2");
}
