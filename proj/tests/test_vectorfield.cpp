#include <catch2/catch_amalgamated.hpp>

#include "planarlie/textio.hpp"
#include "planarlie/vectorfield.hpp"

#include "testutil.hpp"

using namespace planarlie;

static Derivation dv(const std::string& s) { return parse_derivation(s); }
static RatFunc rf(const std::string& s) { return parse_ratfunc(s); }

TEST_CASE("apply") {
    CHECK(apply(dv("dx"), rf("x^2 y")) == rf("2x y"));
    // beta y d/dy - x d/dx applied to y^m scales by beta*m
    CHECK(apply(dv("2y dy - x dx"), rf("y^3")) == rf("6y^3"));
    CHECK(apply(dv("dx"), rf("-x")) == rf("-1"));
}

TEST_CASE("bracket on fixed fields") {
    CHECK(bracket(dv("dy - x dx"), dv("dx")) == dv("dx"));
    CHECK(bracket(dv("dx"), dv("-x^2 dx")) == dv("-2x dx"));
    Derivation d = dv("y^2 dx - (x/(y+1)) dy");
    CHECK(bracket(d, d).is_zero());
}

TEST_CASE("rank over the rational-function field") {
    CHECK(rank_over_R({dv("dx"), dv("y dx"), dv("y^2 dx")}) == 1);
    CHECK(rank_over_R({dv("dx"), dv("dy")}) == 2);
    // determinant x * xy - y * x^2 = 0
    CHECK((rf("x") * rf("x y") - rf("y") * rf("x^2")).is_zero());
    CHECK(rank_over_R({dv("x dx + y dy"), dv("x^2 dx + x y dy")}) == 1);
    CHECK(rank_over_R({dv("0 dx")}) == 0);
}

TEST_CASE("scale") {
    CHECK(scale(rf("y"), dv("dx")) == dv("y dx"));
    CHECK(scale(RatFunc(), dv("x dx + dy")).is_zero());
    CHECK(scale(rf("-x^2/4"), dv("dx")) == dv("-1/4x^2 dx"));
}

TEST_CASE("bracket is bilinear and antisymmetric") {
    testutil::Rng rng(9001);
    for (int i = 0; i < 50; ++i) {
        Derivation a = testutil::random_derivation(rng, 2);
        Derivation b = testutil::random_derivation(rng, 2);
        Rat c = testutil::random_rat(rng);
        CHECK(bracket(a, b) == -(bracket(b, a)));
        CHECK(bracket(scale(RatFunc(c), a), b) == scale(RatFunc(c), bracket(a, b)));
        Derivation s = testutil::random_derivation(rng, 2);
        CHECK(bracket(a + s, b) == bracket(a, b) + bracket(s, b));
    }
}

TEST_CASE("scaled-bracket identity holds exactly") {
    // [aD1, bD2] = ab[D1,D2] + a D1(b) D2 - b D2(a) D1
    testutil::Rng rng(9002);
    for (int i = 0; i < 100; ++i) {
        RatFunc a = testutil::random_ratfunc(rng, 2);
        RatFunc b = testutil::random_ratfunc(rng, 2);
        Derivation d1 = testutil::random_derivation(rng, 2, false);
        Derivation d2 = testutil::random_derivation(rng, 2, false);
        Derivation lhs = bracket(scale(a, d1), scale(b, d2));
        Derivation rhs = scale(a * b, bracket(d1, d2)) + scale(a * apply(d1, b), d2) -
                         scale(b * apply(d2, a), d1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Jacobi identity holds exactly") {
    testutil::Rng rng(9003);
    for (int i = 0; i < 100; ++i) {
        Derivation a = testutil::random_derivation(rng, 2, false);
        Derivation b = testutil::random_derivation(rng, 2, false);
        Derivation c = testutil::random_derivation(rng, 2, false);
        Derivation j = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
                       bracket(bracket(c, a), b);
        CHECK(j.is_zero());
    }
}

TEST_CASE("independent standard fields have no common nonconstant kernel") {
    testutil::Rng rng(9004);
    int done = 0;
    while (done < 30) {
        RatFunc c = testutil::random_ratfunc(rng, 3);
        if (c.is_constant()) continue;
        bool dx_kills = apply(Derivation::dx(), c).is_zero();
        bool dy_kills = apply(Derivation::dy(), c).is_zero();
        CHECK(!(dx_kills && dy_kills));
        ++done;
    }
}
