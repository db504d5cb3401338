#include "doctest.h"

#include "kodaira/lie_algebra.hpp"

#include <array>
#include <cmath>
#include <random>

using namespace kodaira;
using namespace kodaira::lie;

namespace {

RatVector v(std::initializer_list<long> xs)
{
    RatVector out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

Form e(std::size_t i) { return Form::generator(i); }

std::vector<LieAlgebra> all_builtins()
{
    return {builtin::heisenberg(), builtin::oscillator(), builtin::line_times_heisenberg(),
            builtin::rotation_example(1), builtin::abelian(4), builtin::affine_line()};
}

// Independent Jacobi evaluation on a raw 3x3x3 structure-constant array.
bool jacobi_holds(const std::array<std::array<std::array<long, 3>, 3>, 3>& c)
{
    auto br = [&](const std::array<long, 3>& a, const std::array<long, 3>& b) {
        std::array<long, 3> out{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    out[k] += a[i] * b[j] * c[i][j][k];
        return out;
    };
    const std::array<long, 3> e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    const auto t1 = br(e1, br(e2, e3));
    const auto t2 = br(e2, br(e3, e1));
    const auto t3 = br(e3, br(e1, e2));
    for (int k = 0; k < 3; ++k)
        if (t1[k] + t2[k] + t3[k] != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("builtin algebras satisfy Jacobi")
{
    for (const auto& alg : all_builtins())
        CHECK(validate(alg).empty());
}

TEST_CASE("validate agrees with a direct Jacobi oracle on perturbed constants")
{
    std::mt19937_64 rng(11);
    int violations_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        // Base: [e1,e2] = e3, [e1,e3] = e1, [e2,e3] = 0, then perturb.
        std::array<std::array<std::array<long, 3>, 3>, 3> c{};
        c[0][1] = {0, 0, 1};
        c[0][2] = {1, 0, 0};
        c[1][2] = {0, 0, 0};
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
            for (int k = 0; k < 3; ++k)
                c[i][j][k] += static_cast<long>(rng() % 5) - 2;
        LieAlgebra alg(3, {}, {});
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            c[j][i] = {-c[i][j][0], -c[i][j][1], -c[i][j][2]};
            alg.set_bracket(i, j, v({c[i][j][0], c[i][j][1], c[i][j][2]}));
        }
        const bool oracle = jacobi_holds(c);
        CHECK(validate(alg).empty() == oracle);
        violations_seen += oracle ? 0 : 1;
    }
    CHECK(violations_seen > 30);  // generic perturbations break Jacobi
}

TEST_CASE("adjoint matrices")
{
    CHECK(adjoint(builtin::heisenberg(), v({0, 0, 1})).is_zero());
    CHECK(adjoint(builtin::abelian(3), v({1, -2, 5})).is_zero());

    // Oracle: central finite difference of the rotation alpha(t) at t = 0,
    // rounded to the nearest integer.
    const double h = 1e-6;
    auto alpha = [](double t) {
        return std::array<std::array<double, 2>, 2>{{{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}}};
    };
    const auto plus = alpha(h), minus = alpha(-h);
    const auto ad = adjoint(builtin::oscillator(), v({1, 0, 0, 0}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            long expected = 0;
            if (i >= 1 && i <= 2 && j >= 1 && j <= 2)
                expected = std::lround((plus[i - 1][j - 1] - minus[i - 1][j - 1]) / (2 * h));
            CHECK(ad(i, j) == expected);
        }

    CHECK_THROWS_AS(adjoint(builtin::heisenberg(), v({1, 0})), std::invalid_argument);
}

TEST_CASE("unimodularity")
{
    CHECK(is_unimodular(builtin::oscillator()));
    CHECK(is_unimodular(builtin::heisenberg()));
    CHECK(is_unimodular(builtin::line_times_heisenberg()));
    CHECK_FALSE(is_unimodular(builtin::affine_line()));
}

TEST_CASE("Chevalley-Eilenberg differentials")
{
    SUBCASE("h3: d gamma = -alpha beta")
    {
        const auto cx = ce_complex(builtin::heisenberg());
        CHECK(cx.cochains.d(e(0)).is_zero());
        CHECK(cx.cochains.d(e(1)).is_zero());
        CHECK(cx.cochains.d(e(2)) == -wedge(e(0), e(1)));
    }
    SUBCASE("abelian R^4: all differentials vanish")
    {
        for (const auto& d : ce_complex(builtin::abelian(4)).differentials)
            CHECK(d.is_zero());
    }
    SUBCASE("rotation example at scale 1")
    {
        const auto cx = ce_complex(builtin::rotation_example(1));
        CHECK(cx.cochains.d(e(0)).is_zero());
        CHECK(cx.cochains.d(e(1)) == wedge(e(0), e(2)));
        CHECK(cx.cochains.d(e(2)) == -wedge(e(0), e(1)));
    }
    SUBCASE("non-Lie constants are rejected")
    {
        LieAlgebra bad(3, {}, {});
        bad.set_bracket(0, 1, v({0, 0, 1}));
        bad.set_bracket(0, 2, v({1, 0, 0}));
        REQUIRE_FALSE(validate(bad).empty());
        CHECK_THROWS_AS(ce_complex(bad), StructureError);
    }
}

TEST_CASE("d squares to zero for all builtins")
{
    for (const auto& alg : all_builtins()) {
        const auto cx = ce_complex(alg);
        for (std::size_t p = 0; p + 1 < cx.differentials.size(); ++p)
            if (cx.differentials[p].cols() > 0 && cx.differentials[p + 1].cols() > 0)
                CHECK((cx.differentials[p + 1] * cx.differentials[p]).is_zero());
    }
}

TEST_CASE("Betti numbers of the builtin algebras")
{
    using B = std::vector<std::size_t>;
    CHECK(betti(builtin::oscillator()) == B{1, 1, 0, 1, 1});
    CHECK(betti(builtin::line_times_heisenberg()) == B{1, 3, 4, 3, 1});
    CHECK(betti(builtin::heisenberg()) == B{1, 2, 2, 1});
}

TEST_CASE("Euler characteristic vanishes for unimodular solvable builtins")
{
    for (const auto& alg : {builtin::oscillator(), builtin::heisenberg(), builtin::line_times_heisenberg()}) {
        long chi = 0;
        const auto b = betti(alg);
        for (std::size_t p = 0; p < b.size(); ++p)
            chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(b[p]);
        CHECK(chi == 0);
    }
}

TEST_CASE("Kunneth formula for R x h3")
{
    const auto bt = betti(builtin::abelian(1));
    const auto bh = betti(builtin::heisenberg());
    const auto prod = betti(builtin::line_times_heisenberg());
    for (std::size_t p = 0; p < prod.size(); ++p) {
        std::size_t expected = 0;
        for (std::size_t i = 0; i < bt.size(); ++i)
            if (p >= i && p - i < bh.size())
                expected += bt[i] * bh[p - i];
        CHECK(prod[p] == expected);
    }
}

TEST_CASE("rotation example Betti numbers do not depend on the scale")
{
    const auto reference = betti(builtin::rotation_example(1));
    for (long num : {-3L, 2L, 7L})
        for (long den : {1L, 5L})
            CHECK(betti(builtin::rotation_example(make_rational(num, den))) == reference);
}

TEST_CASE("cohomology representatives")
{
    SUBCASE("h3 degree 2: alpha gamma, beta gamma")
    {
        const auto alg = ce_algebra(builtin::heisenberg());
        const auto reps = cohomology_basis(builtin::heisenberg(), 2);
        REQUIRE(reps.size() == 2);
        CHECK(alg.from_vector(reps[0], 2) == wedge(e(0), e(2)));
        CHECK(alg.from_vector(reps[1], 2) == wedge(e(1), e(2)));
    }
    SUBCASE("R x h3 degree 1: tau, alpha, beta")
    {
        const auto alg = ce_algebra(builtin::line_times_heisenberg());
        const auto reps = cohomology_basis(builtin::line_times_heisenberg(), 1);
        REQUIRE(reps.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(alg.from_vector(reps[i], 1) == e(i));
    }
    SUBCASE("abelian R^2 degree 1")
    {
        const auto reps = cohomology_basis(builtin::abelian(2), 1);
        CHECK(reps == std::vector<RatVector>{v({1, 0}), v({0, 1})});
    }
    SUBCASE("representatives are independent cocycles modulo coboundaries")
    {
        for (const auto& lie : all_builtins()) {
            const auto h = ce_cohomology(lie);
            for (int p = 0; p <= h.top_degree(); ++p) {
                const auto& reps = h.representatives(p);
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    CHECK(h.is_cocycle(p, reps[i]));
                    RatVector expected(reps.size(), Rational(0));
                    expected[i] = 1;
                    CHECK(h.class_coordinates(p, reps[i]) == expected);
                }
            }
        }
    }
    CHECK_THROWS_AS(cohomology_basis(builtin::heisenberg(), 4), std::out_of_range);
}

TEST_CASE("complete solvability witness search")
{
    const auto g = builtin::oscillator();
    const auto w = completely_solvable_witness(g, default_trial_vectors(g, 1));
    REQUIRE(w.has_value());
    CHECK(w->vector == v({1, 0, 0, 0}));
    CHECK(w->characteristic == linalg::Polynomial{0, 0, 1, 0, 1});
    CHECK(w->distinct_roots == 3);
    CHECK(w->distinct_real_roots == 1);

    CHECK_FALSE(completely_solvable_witness(builtin::heisenberg(), default_trial_vectors(builtin::heisenberg(), 3))
                    .has_value());
    CHECK_FALSE(
        completely_solvable_witness(builtin::abelian(3), default_trial_vectors(builtin::abelian(3), 3)).has_value());
    CHECK(completely_solvable_witness(builtin::rotation_example(2), default_trial_vectors(builtin::rotation_example(2), 0))
              .has_value());
}

TEST_CASE("builtin lookup")
{
    CHECK(builtin::by_name("oscillator") == builtin::oscillator());
    CHECK(builtin::by_name("abelian4").dim() == 4);
    CHECK_THROWS_AS(builtin::by_name("sl2"), std::invalid_argument);
}
