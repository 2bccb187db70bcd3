#include <catch2/catch_amalgamated.hpp>

#include "toric/linalg.hpp"

#include <cmath>
#include <random>

using namespace toric;

namespace {
Vec<Rat> rv(std::initializer_list<int> xs) {
    Vec<Rat> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("pairing") {
    SECTION("orthogonal basis") { CHECK(dot(rv({1, 0}), rv({0, 1})) == Rat(0)); }
    SECTION("functional vanishing on a boundary ray") {
        // <e1* + 2 e2*, 2 e1 - e2> = 2 - 2
        CHECK(dot(rv({1, 2}), rv({2, -1})) == Rat(0));
    }
    SECTION("irrational coordinates, float mode") {
        double s = std::sqrt(2.0);
        Vec<double> u{-s, 1.0}, v{1.0, s};
        CHECK(is_zero(dot(u, v)));
    }
    SECTION("dimension mismatch rejected") {
        CHECK_THROWS_AS(dot(rv({1}), rv({1, 2})), PreconditionError);
    }
}

TEST_CASE("kernel_basis examples") {
    SECTION("single row (2 3)") {
        Mat<Rat> m = Mat<Rat>::from_rows({rv({2, 3})});
        auto k = kernel_basis(m);
        REQUIRE(k.size() == 1);
        CHECK(k[0] == rv({3, -2}));
    }
    SECTION("identity has trivial kernel") {
        Mat<Rat> m = Mat<Rat>::from_rows({rv({1, 0}), rv({0, 1})});
        CHECK(kernel_basis(m).empty());
    }
    SECTION("rows (1,0,0,1),(0,1,0,1),(0,0,1,-1)") {
        Mat<Rat> m = Mat<Rat>::from_rows({rv({1, 0, 0, 1}), rv({0, 1, 0, 1}), rv({0, 0, 1, -1})});
        auto k = kernel_basis(m);
        REQUIRE(k.size() == 1);
        CHECK((k[0] == rv({1, 1, -1, -1}) || k[0] == rv({-1, -1, 1, 1})));
        // sign normalization: first nonzero entry positive
        CHECK(k[0] == rv({1, 1, -1, -1}));
    }
}

TEST_CASE("kernel_basis properties, exact mode") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 3, cols = 2 + rng() % 4;
        Mat<Rat> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(d(rng));
        auto k = kernel_basis(m);
        CHECK(k.size() == cols - rank(m));
        for (const auto& v : k) {
            CHECK(is_zero_vec(mat_vec(m, v)));
            Int g = 0;
            for (const auto& x : v) {
                CHECK(denominator(x) == 1);
                g = int_gcd(g, numerator(x));
            }
            CHECK(g == 1);  // primitive
        }
        CHECK(rank_of_rows(k) == k.size());  // independent
    }
}

TEST_CASE("kernel_basis float residual bound") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + rng() % 3, cols = 2 + rng() % 4;
        Mat<double> m(rows, cols);
        double norm = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            double rsum = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = d(rng);
                rsum += std::fabs(m(i, j));
            }
            norm = std::max(norm, rsum);
        }
        for (const auto& v : kernel_basis(m)) {
            double vmax = 0;
            for (double x : v) vmax = std::max(vmax, std::fabs(x));
            for (double r : mat_vec(m, v)) CHECK(std::fabs(r) <= tolerance() * norm * vmax + 1e-15);
        }
    }
}

TEST_CASE("integer kernel is a saturated lattice basis") {
    // columns (0,1),(1,1),(1,2): kernel generated by (1,1,-1)
    std::vector<ZVec> rows = {{Int(0), Int(1), Int(1)}, {Int(1), Int(1), Int(2)}};
    auto k = integer_kernel(rows, 3);
    REQUIRE(k.size() == 1);
    auto v = zvec_primitive_signed(k[0]);
    CHECK(v == ZVec{Int(1), Int(1), Int(-1)});

    // a case where naive scaling could miss saturation: columns of 2x-multiples
    std::vector<ZVec> rows2 = {{Int(2), Int(4)}};
    auto k2 = integer_kernel(rows2, 2);
    REQUIRE(k2.size() == 1);
    CHECK(zvec_primitive_signed(k2[0]) == ZVec{Int(2), Int(-1)});
}

TEST_CASE("solve and span helpers") {
    Mat<Rat> m = Mat<Rat>::from_rows({rv({1, 1}), rv({1, -1})});
    auto x = solve(m, rv({3, 1}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(1));
    CHECK_FALSE(solve(Mat<Rat>::from_rows({rv({1, 1}), rv({2, 2})}), rv({1, 3})).has_value());

    CHECK(in_span<Rat>({rv({1, 1, 0}), rv({0, 0, 1})}, rv({2, 2, 5})));
    CHECK_FALSE(in_span<Rat>({rv({1, 1, 0})}, rv({1, 0, 0})));

    auto p = project_onto_span<Rat>({rv({1, 1})}, rv({2, 0}));
    CHECK(p == Vec<Rat>{Rat(1), Rat(1)});
}
