#include <catch2/catch_amalgamated.hpp>

#include "planarlie/linalg.hpp"

#include "testutil.hpp"

using namespace planarlie;

static QMatrix mat(const std::vector<std::vector<long>>& rows) {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

TEST_CASE("rref basics") {
    auto [r1, p1] = rref(QMatrix::identity(2));
    CHECK(r1 == QMatrix::identity(2));
    CHECK(p1 == std::vector<int>{0, 1});

    auto [r2, p2] = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r2 == mat({{1, 2}, {0, 0}}));
    CHECK(p2 == std::vector<int>{0});
}

TEST_CASE("rref of random invertible matrices is the identity") {
    testutil::Rng rng(8001);
    int done = 0;
    while (done < 20) {
        QMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = testutil::random_rat(rng, 5, 3);
        if (det(m) == 0) continue; // determinant oracle
        auto [r, piv] = rref(m);
        CHECK(r == QMatrix::identity(4));
        CHECK(piv.size() == 4);
        ++done;
    }
}

TEST_CASE("rref is idempotent and preserves the row space") {
    testutil::Rng rng(8002);
    for (int t = 0; t < 20; ++t) {
        QMatrix m(3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = testutil::random_rat(rng, 4, 2);
        auto [r, piv] = rref(m);
        CHECK(rref(r).first == r);
        // mutual containment of row spaces via rank
        QMatrix stacked(6, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) {
                stacked.at(i, j) = m.at(i, j);
                stacked.at(3 + i, j) = r.at(i, j);
            }
        CHECK(rank(stacked) == rank(m));
        CHECK(rank(m) == rank(r));
    }
}

TEST_CASE("kernel and solve") {
    QMatrix m = mat({{1, 2, 3}, {2, 4, 6}});
    auto k = kernel(m);
    CHECK(k.size() == 2);
    for (const auto& v : k) {
        auto w = m.apply(v);
        for (const auto& x : w) CHECK(x == 0);
    }
    auto s = solve(mat({{2, 0}, {0, 3}}), {Rat(4), Rat(9)});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == 2);
    CHECK((*s)[1] == 3);
    CHECK(!solve(mat({{1, 1}, {1, 1}}), {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("charpoly") {
    // diag(1, 2): (t-1)(t-2) = t^2 - 3t + 2
    auto c = charpoly(mat({{1, 0}, {0, 2}}));
    CHECK(c == QVec{Rat(2), Rat(-3), Rat(1)});
    CHECK_THROWS_AS(charpoly(QMatrix(2, 3)), NonSquare);
}

TEST_CASE("rational_eigen on fixed matrices") {
    auto e1 = rational_eigen(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 3}}));
    REQUIRE(e1.spaces.size() == 2);
    CHECK(e1.split);
    CHECK(e1.spaces[0].lambda == 1);
    CHECK(e1.spaces[0].multiplicity == 2);
    CHECK(e1.spaces[0].generalized.size() == 2);
    CHECK(e1.spaces[1].lambda == 3);
    CHECK(e1.spaces[1].multiplicity == 1);

    auto e2 = rational_eigen(mat({{0, -1}, {1, 0}})); // t^2 + 1
    CHECK(e2.spaces.empty());
    CHECK(!e2.split);

    auto e3 = rational_eigen(mat({{0, 1}, {0, 0}})); // Jordan block J_2(0)
    REQUIRE(e3.spaces.size() == 1);
    CHECK(e3.split);
    CHECK(e3.spaces[0].lambda == 0);
    CHECK(e3.spaces[0].multiplicity == 2);
    CHECK(e3.spaces[0].generalized.size() == 2);
    CHECK(e3.spaces[0].eigenvectors.size() == 1);
    CHECK_THROWS_AS(rational_eigen(QMatrix(2, 3)), NonSquare);
}

TEST_CASE("split eigenspace dimensions sum to the matrix dimension") {
    testutil::Rng rng(8003);
    for (int t = 0; t < 15; ++t) {
        // conjugate a diagonal matrix by a unimodular-ish random one: split by construction
        QMatrix d(4, 4);
        std::uniform_int_distribution<long> lam(-3, 3);
        for (int i = 0; i < 4; ++i) d.at(i, i) = lam(rng);
        QMatrix u = QMatrix::identity(4);
        std::uniform_int_distribution<int> idx(0, 3);
        std::uniform_int_distribution<long> val(-2, 2);
        for (int k = 0; k < 5; ++k) {
            int i = idx(rng), j = idx(rng);
            if (i != j) u.at(i, j) = val(rng);
        }
        if (det(u) == 0) continue;
        // inverse via solve on columns
        QMatrix inv(4, 4);
        for (int j = 0; j < 4; ++j) {
            QVec e(4, Rat(0));
            e[static_cast<std::size_t>(j)] = 1;
            QVec col = *solve(u, e);
            for (int i = 0; i < 4; ++i) inv.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        auto eg = rational_eigen(u * d * inv);
        CHECK(eg.split);
        int total = 0;
        for (const auto& sp : eg.spaces) total += static_cast<int>(sp.generalized.size());
        CHECK(total == 4);
    }
}
