#include "suspcalc/intmat.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace suspcalc;

namespace {

IntMat from_rows(std::vector<std::vector<long long>> rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

IntMat diag_matrix(const SmithResult& s, std::size_t rows, std::size_t cols) {
    IntMat d(rows, cols);
    for (std::size_t i = 0; i < s.diag.size(); ++i)
        d(i, i) = s.diag[i];
    return d;
}

Int det3(const IntMat& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    auto s1 = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(s1.diag == std::vector<Int>{1, 6});

    auto s2 = smith_normal_form(from_rows({{0}}));
    REQUIRE(s2.diag == std::vector<Int>{0});

    auto s3 = smith_normal_form(from_rows({{4, 2}, {2, 4}}));
    REQUIRE(s3.diag == std::vector<Int>{2, 6});
}

TEST_CASE("empty matrices are fine") {
    IntMat m(0, 0);
    auto s = smith_normal_form(m);
    REQUIRE(s.diag.empty());

    IntMat col(3, 0);
    auto sc = smith_normal_form(col);
    REQUIRE(sc.diag.empty());
    REQUIRE(kernel_basis(col).cols() == 0);
}

TEST_CASE("U*M*V = S with unimodular transforms, randomized") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> dim(1, 5), val(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = dim(rng), n = dim(rng);
        IntMat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = val(rng);
        SmithResult s = smith_normal_form(a);
        REQUIRE(s.U * a * s.V == diag_matrix(s, m, n));
        for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
            REQUIRE(s.diag[i] >= 0);
            if (s.diag[i] != 0) REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
            else REQUIRE(s.diag[i + 1] == 0);
        }
    }
}

TEST_CASE("unimodular transforms have determinant +-1 (3x3 spot check)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                a(i, j) = val(rng);
        SmithResult s = smith_normal_form(a);
        REQUIRE(abs(det3(s.U)) == 1);
        REQUIRE(abs(det3(s.V)) == 1);
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 4), val(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = dim(rng), n = dim(rng);
        IntMat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = val(rng);
        IntMat k = kernel_basis(a);
        // every basis column is killed
        for (std::size_t j = 0; j < k.cols(); ++j) {
            auto img = a.mul_vec(k.col(j));
            for (const Int& v : img) REQUIRE(v == 0);
        }
        REQUIRE(k.cols() == a.cols() - smith_normal_form(a).rank());
    }
}

TEST_CASE("integral solve finds witnesses exactly when they exist") {
    IntMat a = from_rows({{2, 0}, {0, 3}});
    auto x = solve(a, {4, 9});
    REQUIRE(x.has_value());
    REQUIRE(a.mul_vec(*x) == std::vector<Int>{4, 9});
    REQUIRE_FALSE(solve(a, {1, 0}).has_value());

    // rank-deficient system
    IntMat b = from_rows({{2, 4}});
    auto y = solve(b, {6});
    REQUIRE(y.has_value());
    REQUIRE(b.mul_vec(*y) == std::vector<Int>{6});
    REQUIRE_FALSE(solve(b, {3}).has_value());
}

TEST_CASE("shape errors carry an explicit report") {
    IntMat a(2, 3), b(2, 2);
    REQUIRE_THROWS_WITH(a * b, Catch::Matchers::ContainsSubstring("2x3"));
}
