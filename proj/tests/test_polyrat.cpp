#include <catch2/catch_amalgamated.hpp>

#include "planarlie/factor.hpp"
#include "planarlie/poly.hpp"
#include "planarlie/ratfunc.hpp"
#include "planarlie/textio.hpp"

#include "testutil.hpp"

using namespace planarlie;

static RatFunc rf(const std::string& s) { return parse_ratfunc(s); }
static RatFunc rt(const std::string& s) { return parse_ratfunc_t(s); }

TEST_CASE("rational function arithmetic in canonical form") {
    CHECK(rf("x + y") * rf("x - y") == rf("x^2 - y^2"));
    // oracle for the cancellation: (x+y)(x-y) reproduces the numerator exactly
    CHECK(rf("x + y") * rf("x - y") == rf("x^2 - y^2"));
    CHECK(rf("x^2 - y^2") / rf("x - y") == rf("x + y"));
    RatFunc f = rf("(x + 2y)/(x y - 1)");
    CHECK((f + (-f)).is_zero());
    CHECK_THROWS_AS(f / RatFunc(), DivisionByZero);
}

TEST_CASE("canonical representation invariants") {
    RatFunc f = rf("(2x^2 - 2y^2)/(4x - 4y)"); // reduces to (x+y)/2
    CHECK(f == rf("(x + y)/2"));
    CHECK(f.den() == Poly(Rat(1)));
    RatFunc g(Poly::x() * Poly::y(), Rat(3) * Poly::y()); // gcd cancel + monic den
    CHECK(g == rf("x/3"));
}

TEST_CASE("partial derivatives") {
    CHECK(partial(rf("x^2 y"), Var::X) == rf("2x y"));
    CHECK(partial(rf("y/x"), Var::X) == rf("-y/x^2"));
    CHECK(partial(rf("y^3"), Var::Y) == rf("3y^2"));
}

TEST_CASE("Leibniz rule holds exactly on random pairs") {
    testutil::Rng rng(7001);
    for (int i = 0; i < 60; ++i) {
        RatFunc f = testutil::random_ratfunc(rng), g = testutil::random_ratfunc(rng);
        for (Var v : {Var::X, Var::Y})
            CHECK(partial(f * g, v) == partial(f, v) * g + f * partial(g, v));
    }
}

TEST_CASE("field laws hold exactly on random triples") {
    testutil::Rng rng(7002);
    for (int i = 0; i < 100; ++i) {
        RatFunc a = testutil::random_ratfunc(rng, 4);
        RatFunc b = testutil::random_ratfunc(rng, 4);
        RatFunc c = testutil::random_ratfunc(rng, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("poly_gcd") {
    Poly x = Poly::x(), y = Poly::y();
    // oracle: x - y divides both inputs, and the cofactors x + y and 1 are coprime
    CHECK(Poly::divexact(x * x - y * y, x - y).value() == x + y);
    CHECK(poly_gcd(x * x - y * y, x - y) == x - y);
    CHECK(poly_gcd(x, y) == Poly(Rat(1)));
    CHECK(poly_gcd(Poly(), Rat(3) * x) == x); // normalized convention for gcd(0, p)
}

TEST_CASE("poly_gcd on random products") {
    testutil::Rng rng(7003);
    for (int i = 0; i < 25; ++i) {
        Poly a = testutil::random_poly_nonzero(rng, 2, 2);
        Poly b = testutil::random_poly_nonzero(rng, 2, 2);
        Poly g = testutil::random_poly_nonzero(rng, 2, 2);
        Poly gg = poly_gcd(a * g, b * g);
        // the common factor divides the gcd; the gcd divides both products
        CHECK(gg.divides(a * g));
        CHECK(gg.divides(b * g));
        CHECK(g.divides(gg * poly_gcd(a, b))); // g | gcd(ag, bg) up to gcd(a, b)
    }
}

TEST_CASE("factor_univariate on fixed inputs") {
    Poly t = Poly::x();
    auto f1 = factor_univariate(t.pow(3) + t.pow(2));
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.unit == 1);
    CHECK(f1.factors[0] == std::pair<Poly, int>{t, 2});
    CHECK(f1.factors[1] == std::pair<Poly, int>{t + Poly(Rat(1)), 1});

    // t^2 - 2: no rational root (oracle: candidates +-1, +-2 fail), degree 2 => irreducible
    Poly q = t * t - Poly(Rat(2));
    for (long r : {1L, -1L, 2L, -2L}) CHECK(q.eval_univariate(Var::X, Rat(r)) != 0);
    auto f2 = factor_univariate(q);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0] == std::pair<Poly, int>{q, 1});

    // t^4 - 1 (oracle: the product of the expected factors reproduces it)
    Poly expect_a = t - Poly(Rat(1)), expect_b = t + Poly(Rat(1)), expect_c = t * t + Poly(Rat(1));
    CHECK(expect_a * expect_b * expect_c == t.pow(4) - Poly(Rat(1)));
    auto f3 = factor_univariate(t.pow(4) - Poly(Rat(1)));
    REQUIRE(f3.factors.size() == 3);
    CHECK(f3.unit == 1);
    CHECK(f3.factors[0] == std::pair<Poly, int>{expect_a, 1});
    CHECK(f3.factors[1] == std::pair<Poly, int>{expect_b, 1});
    CHECK(f3.factors[2] == std::pair<Poly, int>{expect_c, 1});
}

TEST_CASE("factor_univariate needs Kronecker splits") {
    // (t^2+1)(t^2+2): squarefree, no rational roots, degree 4
    Poly t = Poly::x();
    Poly a = t * t + Poly(Rat(1)), b = t * t + Poly(Rat(2));
    auto f = factor_univariate(a * b);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Poly, int>{a, 1});
    CHECK(f.factors[1] == std::pair<Poly, int>{b, 1});
}

TEST_CASE("factor_univariate errors") {
    CHECK_THROWS_AS(factor_univariate(Poly()), ZeroInput);
    CHECK_THROWS_AS(factor_univariate(Poly::x() * Poly::y()), MultivariateInput);
    CHECK_THROWS_AS(factor_univariate(Poly::x().pow(13)), DegreeCapExceeded);
}

TEST_CASE("factor round-trip on random univariates") {
    testutil::Rng rng(7004);
    for (int i = 0; i < 40; ++i) {
        Poly p = testutil::random_upoly_nonzero(rng, 5);
        auto f = factor_univariate(p);
        Poly prod(f.unit);
        for (const auto& [q, e] : f.factors) prod = prod * q.pow(static_cast<unsigned>(e));
        CHECK(prod == p);
        for (const auto& [q, e] : f.factors) CHECK(q.leading_coeff() == 1);
    }
}

TEST_CASE("ord_p") {
    Poly t = Poly::x();
    CHECK(ord_p(rt("t^2(t + 1)"), t) == 2);
    RatFunc phi = rt("t^2");
    CHECK(ord_p(partial(phi, Var::X) / phi, t) == -1);
    CHECK(ord_p(rt("t^2"), t + Poly(Rat(1))) == 0);
    CHECK_THROWS_AS(ord_p(RatFunc(), t), ZeroInput);
    CHECK_THROWS_AS(ord_p(rt("t"), t * t - Poly(Rat(1))), ReducibleModulus);
}

TEST_CASE("ord_p is additive") {
    testutil::Rng rng(7005);
    Poly t = Poly::x();
    int done = 0;
    while (done < 30) {
        RatFunc f(testutil::random_upoly_nonzero(rng, 3), testutil::random_upoly_nonzero(rng, 2));
        RatFunc g(testutil::random_upoly_nonzero(rng, 3), testutil::random_upoly_nonzero(rng, 2));
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(ord_p(f * g, t) == ord_p(f, t) + ord_p(g, t));
        ++done;
    }
}

TEST_CASE("ratfunc rendering round-trips through the parser") {
    testutil::Rng rng(7006);
    for (int i = 0; i < 40; ++i) {
        RatFunc f = testutil::random_ratfunc(rng);
        CHECK(parse_ratfunc(ratfunc_str(f)) == f);
    }
    CHECK(ratfunc_str(rf("(x^2 - y^2)/(x - y)")) == "x + y");
}
