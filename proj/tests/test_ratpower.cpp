#include <catch2/catch_amalgamated.hpp>

#include "planarlie/ratpower.hpp"
#include "planarlie/textio.hpp"

#include "testutil.hpp"

using namespace planarlie;

static RatFunc rt(const std::string& s) { return parse_ratfunc_t(s); }

TEST_CASE("proportionality ratio") {
    // oracle for t^3, t^2: mu * 3t^2 * t^2 = t^3 * 2t gives mu = 2/3
    CHECK(rt("3t^4") * rt("2/3") == rt("2t^4"));
    CHECK(proportionality_ratio(rt("t^3"), rt("t^2")) == Rat(2, 3));
    CHECK(proportionality_ratio(rt("t"), rt("t")) == 1);
    CHECK_THROWS_AS(proportionality_ratio(rt("t"), rt("t + 1")), NotProportional);
    CHECK_THROWS_AS(proportionality_ratio(rt("5"), rt("t")), ConstantInput);
}

TEST_CASE("power decomposition on fixed inputs") {
    auto d1 = power_decompose(rt("t^4(t+1)^2"), rt("t^6(t+1)^3"));
    CHECK(d1.theta == rt("t^2(t+1)"));
    CHECK(d1.s == 2);
    CHECK(d1.t == 3);
    CHECK(d1.c1 == 1);
    CHECK(d1.c2 == 1);
    CHECK(d1.mu == Rat(3, 2));
    // oracle: psi'/psi = (3/2) phi'/phi
    RatFunc phi = rt("t^4(t+1)^2"), psi = rt("t^6(t+1)^3");
    CHECK(partial(psi, Var::X) / psi == Rat(3, 2) * (partial(phi, Var::X) / phi));

    auto d2 = power_decompose(rt("t^3"), rt("t^2"));
    CHECK(d2.theta == rt("t"));
    CHECK(d2.s == 3);
    CHECK(d2.t == 2);
    CHECK(d2.mu == Rat(2, 3));

    auto d3 = power_decompose(rt("t^2"), rt("t^2"));
    CHECK(d3.theta == rt("t^2"));
    CHECK(d3.s == 1);
    CHECK(d3.t == 1);
    CHECK(d3.mu == 1);

    CHECK_THROWS_AS(power_decompose(rt("t"), rt("t+1")), NotProportional);
}

TEST_CASE("power decomposition round-trips on random powers") {
    testutil::Rng rng(12001);
    std::uniform_int_distribution<long> st(-4, 4);
    int done = 0;
    while (done < 50) {
        RatFunc theta(testutil::random_upoly_nonzero(rng, 3), testutil::random_upoly_nonzero(rng, 3));
        if (theta.is_constant() || theta.is_zero()) continue;
        long s = st(rng), t = st(rng);
        if (s == 0 || t == 0 || std::gcd(std::abs(s), std::abs(t)) != 1) continue;
        if (s < 0) { s = -s; t = -t; } // the decomposition orients s > 0
        Rat c1 = testutil::random_rat(rng), c2 = testutil::random_rat(rng);
        if (c1 == 0 || c2 == 0) continue;
        RatFunc phi = c1 * theta.pow(s), psi = c2 * theta.pow(t);
        if (phi.is_constant() || psi.is_constant()) continue;
        auto d = power_decompose(phi, psi);
        CHECK(RatFunc(d.c1) * d.theta.pow(d.s) == phi);
        CHECK(RatFunc(d.c2) * d.theta.pow(d.t) == psi);
        CHECK(d.mu == Rat(t, s));
        CHECK(d.s == s);
        CHECK(d.t == t);
        CHECK(d.s > 0);
        CHECK(std::gcd(std::labs(d.s), std::labs(d.t)) == 1);
        // the identity mu phi' psi - phi psi' = 0 holds exactly
        CHECK((d.mu * partial(phi, Var::X) * psi - phi * partial(psi, Var::X)).is_zero());
        ++done;
    }
}

TEST_CASE("log-derivative obstruction on fixed inputs") {
    auto [p1, o1] = log_derivative_obstruction(rt("t^2"));
    CHECK(p1 == Poly::x());
    CHECK(o1 == -1);

    auto [p2, o2] = log_derivative_obstruction(rt("(t+1)/t"));
    CHECK(o2 == -1);
    CHECK((p2 == Poly::x() || p2 == Poly::x() + Poly(Rat(1))));
    RatFunc phi = rt("(t+1)/t");
    CHECK(ord_p(partial(phi, Var::X) / phi, p2) == -1);

    CHECK_THROWS_AS(log_derivative_obstruction(rt("5")), ConstantInput);
}

TEST_CASE("log-derivative obstruction on random nonconstant inputs") {
    testutil::Rng rng(12002);
    int done = 0;
    while (done < 50) {
        RatFunc phi = testutil::random_uratfunc_nonconstant(rng, 4);
        auto [p, o] = log_derivative_obstruction(phi);
        CHECK(o == -1);
        CHECK(ord_p(phi, p) != 0);
        CHECK(ord_p(partial(phi, Var::X) / phi, p) == -1);
        ++done;
    }
}
