#include "doctest.h"

#include "kodaira/linalg.hpp"
#include "kodaira/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace kodaira;
using namespace kodaira::linalg;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rng() % static_cast<unsigned long>(2 * spread + 1)) - spread;
    return m;
}

// gcd of all k x k minors, by brute-force enumeration of row/column subsets.
Integer determinantal_divisor(const IntMatrix& a, std::size_t k)
{
    Integer g = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
        if (rows.size() == k) {
            pick_cols(0);
            return;
        }
        for (std::size_t r = start; r < a.rows(); ++r) {
            rows.push_back(r);
            pick_rows(r + 1);
            rows.pop_back();
        }
    };
    pick_cols = [&](std::size_t start) {
        if (cols.size() == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = a(rows[i], cols[j]);
            g = gcd(g, determinant(sub));
            return;
        }
        for (std::size_t c = start; c < a.cols(); ++c) {
            cols.push_back(c);
            pick_cols(c + 1);
            cols.pop_back();
        }
    };
    pick_rows(0);
    return g;
}

}  // namespace

TEST_CASE("rank of small matrices")
{
    CHECK(rank(RatMatrix::identity(2)) == 2);
    CHECK(rank(RatMatrix(3, 4)) == 0);
    CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel basis")
{
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    CHECK(kernel_basis(RatMatrix(2, 3)).size() == 3);

    const auto k = kernel_basis(RatMatrix{{1, 1}});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVector{-1, 1});

    SUBCASE("random matrices: M v = 0 and dimension = cols - rank")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const RatMatrix m = to_rational(random_int_matrix(rng, 3, 5, 2));
            const auto basis = kernel_basis(m);
            CHECK(basis.size() == m.cols() - rank(m));
            for (const auto& v : basis)
                for (const auto& x : m.apply(v))
                    CHECK(x == 0);
        }
    }
}

TEST_CASE("kernel vectors are scaled to primitive integers")
{
    const auto k = kernel_basis(RatMatrix{{2, 3, 0}, {0, 0, 1}});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVector{-3, 2, 0});
}

TEST_CASE("solve")
{
    const RatMatrix m{{1, 2}, {3, 4}};
    const auto x = solve(m, RatVector{5, 6});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == RatVector{5, 6});
    CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, RatVector{1, 2}).has_value());
}

TEST_CASE("Smith normal form examples")
{
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors() == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).invariant_factors() == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(IntMatrix(2, 3)).invariant_factors() == std::vector<Integer>{0, 0});
}

TEST_CASE("Smith normal form properties on random matrices")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix a = random_int_matrix(rng, 4, 6, 9);
        const SnfResult snf = smith_normal_form(a);
        CHECK(snf.left * a * snf.right == snf.diagonal);
        CHECK(abs(determinant(snf.left)) == 1);
        CHECK(abs(determinant(snf.right)) == 1);
        for (std::size_t i = 0; i < snf.diagonal.rows(); ++i)
            for (std::size_t j = 0; j < snf.diagonal.cols(); ++j)
                if (i != j)
                    CHECK(snf.diagonal(i, j) == 0);
        const auto f = snf.invariant_factors();
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f[i] >= 0);
            if (f[i] != 0)
                ++nonzero;
            if (i + 1 < f.size() && f[i] != 0)
                CHECK(f[i + 1] % f[i] == 0);
        }
        CHECK(nonzero == rank(a));
    }
}

TEST_CASE("invariant factors agree with determinantal divisors")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const IntMatrix a = random_int_matrix(rng, 3, 4, 6);
        const auto f = smith_normal_form(a).invariant_factors();
        Integer prefix = 1;
        for (std::size_t k = 1; k <= 3; ++k) {
            prefix *= f[k - 1];
            CHECK(prefix == determinantal_divisor(a, k));
        }
    }
}

TEST_CASE("Smith normal form handles large entries")
{
    IntMatrix a{{0, 0}, {0, 0}};
    a(0, 0) = Integer("123456789012345678901234567890");
    a(1, 1) = Integer("987654321098765432109876543210");
    const auto snf = smith_normal_form(a);
    CHECK(snf.left * a * snf.right == snf.diagonal);
    const auto f = snf.invariant_factors();
    CHECK(f[0] == gcd(a(0, 0), a(1, 1)));
    CHECK(f[0] * f[1] == a(0, 0) * a(1, 1));
}

TEST_CASE("Sturm real root counts")
{
    CHECK(sturm_real_root_count(Polynomial{1, 0, 1}) == 0);
    CHECK(sturm_real_root_count(Polynomial{-1, 0, 1}) == 2);

    // x^2 (x^2 + 1): the rational root test finds only 0, and the cofactor
    // x^2 + 1 has negative discriminant.
    const Polynomial p = Polynomial{0, 0, 1} * Polynomial{1, 0, 1};
    std::size_t rational_roots = 0;
    for (long cand : {-1L, 0L, 1L})
        if (p.evaluate(cand) == 0)
            ++rational_roots;
    CHECK(rational_roots == 1);
    CHECK(sturm_real_root_count(p) == 1);

    CHECK_THROWS_AS(sturm_real_root_count(Polynomial{}), std::domain_error);
}

TEST_CASE("Sturm count of distinct linear factors equals the factor count")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        std::vector<Rational> roots;
        Polynomial p{1};
        while (roots.size() < n) {
            Rational r(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % 5));
            r.canonicalize();
            if (std::find(roots.begin(), roots.end(), r) != roots.end())
                continue;
            roots.push_back(r);
            p = p * Polynomial(std::vector<Rational>{Rational(-r), Rational(1)});
        }
        CHECK(sturm_real_root_count(p) == n);
        // Repeated factors do not change the distinct-root count.
        CHECK(sturm_real_root_count(p * p) == n);
    }
}

TEST_CASE("characteristic polynomial")
{
    // Rotation generator block: x^2 + 1.
    CHECK(characteristic_polynomial(RatMatrix{{0, 1}, {-1, 0}}) == Polynomial{1, 0, 1});
    CHECK(characteristic_polynomial(RatMatrix{{2, 0}, {0, 3}}) == Polynomial{6, -5, 1});
    CHECK(characteristic_polynomial(RatMatrix(3, 3)) == Polynomial{0, 0, 0, 1});
}

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational(" 10/5 ")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}
