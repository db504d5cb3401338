#include "doctest.h"

#include "kodaira/classification.hpp"
#include "kodaira/oscillator.hpp"

#include <random>

using namespace kodaira;
using namespace kodaira::osc;

namespace {

OscElement el(long q, long x, long y, const Rational& z) { return make_element(q, x, y, z); }
Rational half() { return Rational(1, 2); }

const std::vector<Flavor> kFlavors{Flavor::Zero, Flavor::Pi, Flavor::PiHalf};

std::vector<OscElement> small_rational_elements()
{
    std::vector<OscElement> out;
    const std::vector<Rational> coords{Rational(-1), Rational(0), Rational(1, 2), Rational(2, 3)};
    for (long q : {-1L, 0L, 1L, 2L})
        for (const auto& x : coords)
            for (const auto& y : coords)
                for (const auto& z : {Rational(0), Rational(-1, 3)})
                    out.push_back({Integer(q), x, y, z});
    return out;
}

}  // namespace

TEST_CASE("rotation matrices")
{
    CHECK(rotation(0) == Rotation{{{1, 0}, {0, 1}}});
    CHECK(rotation(2) == Rotation{{{-1, 0}, {0, -1}}});
    CHECK(rotation(1) == Rotation{{{0, 1}, {-1, 0}}});
    CHECK(rotation(4) == rotation(0));
    CHECK(rotation(-1) == rotation(3));
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            CHECK(compose(rotation(a), rotation(b)) == rotation(a + b));
}

TEST_CASE("group law")
{
    CHECK(mul(el(0, 1, 0, 0), el(0, 0, 1, 0)) == el(0, 1, 1, half()));
    CHECK(mul(el(2, 0, 0, 0), el(0, 1, 0, 0)) == el(2, -1, 0, 0));

    SUBCASE("matches the expansion (theta,a,b,c)(0,1,0,0) for quarter-turn theta")
    {
        // (theta, a + cos, b - sin, c - (a sin + b cos)/2)
        const int cosines[] = {1, 0, -1, 0};
        const int sines[] = {0, 1, 0, -1};
        for (long q = 0; q < 4; ++q) {
            const Rational a(3), b(-2), c(1, 5);
            const OscElement g{Integer(q), a, b, c};
            const OscElement expected{Integer(q), a + cosines[q], b - sines[q],
                                      c - (a * sines[q] + b * cosines[q]) / 2};
            CHECK(mul(g, el(0, 1, 0, 0)) == expected);
        }
    }

    SUBCASE("identity")
    {
        for (const auto& g : small_rational_elements()) {
            CHECK(mul(OscElement::identity(), g) == g);
            CHECK(mul(g, OscElement::identity()) == g);
        }
    }
}

TEST_CASE("associativity on small rational triples")
{
    const auto elems = small_rational_elements();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 3000; ++t) {
        const auto& a = elems[rng() % elems.size()];
        const auto& b = elems[rng() % elems.size()];
        const auto& c = elems[rng() % elems.size()];
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("inverses")
{
    CHECK(inv(el(0, 1, 0, 0)) == el(0, -1, 0, 0));
    CHECK(inv(el(1, 1, 0, 0)) == el(-1, 0, -1, 0));
    CHECK(mul(el(1, 1, 0, 0), el(-1, 0, -1, 0)) == OscElement::identity());
    CHECK(inv(OscElement::identity()) == OscElement::identity());
    for (const auto& g : small_rational_elements()) {
        CHECK(mul(g, inv(g)) == OscElement::identity());
        CHECK(mul(inv(g), g) == OscElement::identity());
    }
}

TEST_CASE("commutators")
{
    CHECK(commutator(el(0, 1, 0, 0), el(0, 0, 1, 0)) == el(0, 0, 0, 1));
    CHECK(commutator(el(2, 0, 0, 0), el(0, 1, 0, 0)) == el(0, -2, 0, 0));
    for (const auto& g : small_rational_elements())
        CHECK(commutator(g, g) == OscElement::identity());
}

TEST_CASE("power agrees with repeated multiplication")
{
    const OscElement g = el(1, 2, -1, Rational(1, 3));
    OscElement acc;
    for (long n = 0; n <= 6; ++n) {
        CHECK(power(g, n) == acc);
        CHECK(power(g, -n) == inv(acc));
        acc = mul(acc, g);
    }
}

TEST_CASE("lattice membership")
{
    CHECK(contains(LatticeId(1, Flavor::Zero), el(4, 2, 3, half())));
    CHECK_FALSE(contains(LatticeId(1, Flavor::Zero), el(2, 0, 0, 0)));
    CHECK(contains(LatticeId(1, Flavor::Pi), el(2, 0, 0, 0)));
    CHECK(contains(LatticeId(3, Flavor::PiHalf), el(1, 0, 0, Rational(1, 6))));
    CHECK_FALSE(contains(LatticeId(3, Flavor::PiHalf), el(1, 0, 0, Rational(1, 4))));
    CHECK_THROWS_AS(LatticeId(0, Flavor::Zero), std::invalid_argument);
}

TEST_CASE("canonical generators")
{
    CHECK(generators(LatticeId(1, Flavor::Zero)) ==
          std::vector<OscElement>{el(4, 0, 0, 0), el(0, 1, 0, 0), el(0, 0, 1, 0), el(0, 0, 0, half())});
    CHECK(generators(LatticeId(2, Flavor::Pi)) ==
          std::vector<OscElement>{el(2, 0, 0, 0), el(0, 1, 0, 0), el(0, 0, 1, 0), el(0, 0, 0, Rational(1, 4))});
    for (std::int64_t k = 1; k <= 4; ++k)
        for (auto f : kFlavors)
            for (const auto& g : generators(LatticeId(k, f)))
                CHECK(contains(LatticeId(k, f), g));
}

TEST_CASE("lattices are closed under multiplication and inversion on a box")
{
    for (std::int64_t k = 1; k <= 2; ++k)
        for (auto f : kFlavors) {
            const LatticeId id(k, f);
            const auto box = box_elements(id, 1);
            for (const auto& g : box) {
                CHECK(contains(id, inv(g)));
                for (const auto& h : box)
                    if (!contains(id, mul(g, h)))
                        FAIL("product left the lattice");
            }
        }
}

TEST_CASE("center")
{
    const LatticeId l10(1, Flavor::Zero);
    CHECK(is_central(l10, el(4, 0, 0, half())));
    CHECK_FALSE(is_central(l10, el(0, 1, 0, 0)));
    CHECK(is_central(l10, OscElement::identity()));
    CHECK_THROWS_AS(is_central(l10, el(1, 0, 0, 0)), NotAMember);

    CHECK(center_box_check(LatticeId(1, Flavor::Zero), 4));
    CHECK(center_box_check(LatticeId(1, Flavor::Pi), 4));
    CHECK(center_box_check(LatticeId(2, Flavor::PiHalf), 4));
    // The half-turn commutes with c but not with a.
    CHECK_FALSE(is_central(LatticeId(1, Flavor::Pi), el(2, 0, 0, 0)));
}

TEST_CASE("commutator subgroup of Lambda_{k,0}")
{
    CHECK(commutator_box_check(1, 3));
    CHECK(commutator_box_check(2, 3));
    CHECK(commutator_box_check(3, 2));
}

TEST_CASE("covering indices")
{
    const LatticeId z(1, Flavor::Zero), p(1, Flavor::Pi), h(1, Flavor::PiHalf);
    CHECK(covering_index(z, p) == 2);
    CHECK(covering_index(z, h) == 4);
    CHECK(covering_index(p, h) == 2);
    CHECK(covering_index(z, p) * covering_index(p, h) == covering_index(z, h));
    CHECK_THROWS_AS(covering_index(h, z), std::invalid_argument);
    CHECK_THROWS_AS(covering_index(LatticeId(1, Flavor::Zero), LatticeId(2, Flavor::Pi)), std::invalid_argument);
}

TEST_CASE("normality along the covering chain")
{
    const LatticeId z(1, Flavor::Zero), p(1, Flavor::Pi), h(1, Flavor::PiHalf);
    CHECK(normality_check(z, p, 2));
    CHECK(normality_check(z, h, 2));
    CHECK(normality_check(p, h, 2));
}

TEST_CASE("normal forms")
{
    const LatticeId l10(1, Flavor::Zero);
    CHECK(normal_form(l10, el(0, 1, 1, half())) == NormalForm{0, 1, 1, 0});
    CHECK(normal_form(l10, el(4, 0, 0, Rational(3, 2))) == NormalForm{1, 0, 0, 3});
    CHECK(normal_form(l10, OscElement::identity()) == NormalForm{0, 0, 0, 0});
    CHECK_THROWS_AS(normal_form(l10, el(2, 0, 0, 0)), NotAMember);

    for (std::int64_t k = 1; k <= 3; ++k)
        for (auto f : kFlavors) {
            const LatticeId id(k, f);
            for (const auto& g : box_elements(id, 2))
                CHECK(evaluate_normal_form(id, normal_form(id, g)) == g);
        }
}

TEST_CASE("product lattice classification")
{
    SUBCASE("l = 0 mod 4")
    {
        const auto c = classify_product_lattice(4, 1, 1, 1);
        CHECK(c.lattice == LatticeId(1, Flavor::Zero));
        CHECK(c.map_name == "gamma1");
        CHECK(c.verified());
    }
    SUBCASE("l = 2 mod 4")
    {
        const auto c = classify_product_lattice(2, 2, 3, 5);
        CHECK(c.lattice == LatticeId(5, Flavor::Pi));
        CHECK(c.description() == "Λ_{5,π} via γ₂");
        CHECK(c.verified());
    }
    SUBCASE("l = 1 mod 4")
    {
        const auto c = classify_product_lattice(5, Rational(2, 3), Rational(2, 3), 2);
        CHECK(c.lattice == LatticeId(2, Flavor::PiHalf));
        CHECK(c.map_name == "gamma3");
        CHECK(c.verified());
    }
    SUBCASE("l = 3 mod 4 needs the reflected map")
    {
        const auto c = classify_product_lattice(3, 2, 2, 1);
        CHECK(c.lattice == LatticeId(1, Flavor::PiHalf));
        CHECK(c.map_name == "gamma4");
        CHECK(c.verified());

        // Negating all three Heisenberg coordinates is not a homomorphism:
        // it sends [a, b] = c^{2k} to an element with the wrong sign.
        CoordinateMap all_negated = c.iso;
        all_negated.xx = -2;
        all_negated.yy = -2;
        all_negated.z_scale = -4;
        std::vector<OscElement> gens = generators(LatticeId(1, Flavor::PiHalf));
        CHECK_FALSE(is_homomorphism_on(all_negated, gens));
    }
    SUBCASE("rejections")
    {
        using Reason = ClassificationError::Reason;
        auto reason_of = [](auto&& fn) {
            try {
                fn();
            } catch (const ClassificationError& e) {
                return e.reason();
            }
            FAIL("expected ClassificationError");
            return Reason::NotCompact;
        };
        CHECK(reason_of([] { classify_product_lattice(0, 1, 1, 1); }) == Reason::NotCompact);
        CHECK(reason_of([] { classify_product_lattice(4, 0, 1, 1); }) == Reason::NotALattice);
        CHECK(reason_of([] { classify_product_lattice(4, 1, 0, 1); }) == Reason::NotALattice);
        CHECK(reason_of([] { classify_product_lattice(1, 1, 2, 1); }) == Reason::ScalesMustAgree);
        CHECK(reason_of([] { classify_product_lattice(3, 1, 2, 1); }) == Reason::ScalesMustAgree);
    }
    SUBCASE("every residue and a range of scales verifies")
    {
        for (long l = 1; l <= 12; ++l)
            for (std::int64_t k = 1; k <= 3; ++k) {
                const Rational q(3, 2);
                const Rational r = (l % 2 == 1) ? q : Rational(5);
                CHECK(classify_product_lattice(l, q, r, k).verified());
            }
    }
}

TEST_CASE("exotic lattice")
{
    CHECK(in_exotic_lattice(el(0, 2, 2, 2)));
    CHECK(in_exotic_lattice(el(2, 1, -1, half())));
    CHECK_FALSE(in_exotic_lattice(el(2, 2, 0, 0)));
    CHECK_FALSE(in_exotic_lattice(el(1, 1, 1, 0)));
    for (const auto& g : exotic_generators())
        CHECK(in_exotic_lattice(g));

    const auto rep2 = exotic_lattice_check(2);
    CHECK(rep2.closed);
    CHECK(exotic_lattice_check(3).passed());

    // The map lands in Lambda_{2,pi} but misses a = (0,1,0,0): its preimage
    // (0,1,-1,0) has odd coordinates at angle 0.
    CHECK(contains(LatticeId(2, Flavor::Pi), exotic_map()(exotic_generators()[0])));
    CHECK_FALSE(in_exotic_lattice(exotic_map().inverse()(el(0, 1, 0, 0))));
    CHECK(exotic_lattice_check(3).image_index_lower_bound == 2);
}

TEST_CASE("integer lattice coordinates agree with the rational group law")
{
    for (std::int64_t k = 1; k <= 3; ++k)
        for (auto f : kFlavors) {
            const LatticeId id(k, f);
            const auto box = box_elements(id, 1);
            for (const auto& g : box) {
                const LatticeCoords cg = to_coords(id, g);
                CHECK(to_element(k, cg) == g);
                CHECK(to_element(k, lattice_inv(cg)) == inv(g));
                for (const auto& h : box)
                    if (to_element(k, lattice_mul(k, cg, to_coords(id, h))) != mul(g, h))
                        FAIL("integer and rational products differ");
            }
        }
    CHECK_THROWS_AS(to_coords(LatticeId(1, Flavor::Zero), el(1, 0, 0, 0)), NotAMember);
    const LatticeCoords big{0, std::int64_t{1} << 62, 0, 0};
    CHECK_THROWS_AS(lattice_mul(1, big, LatticeCoords{0, 0, 4, 0}), std::overflow_error);
}

TEST_CASE("closure box check")
{
    for (auto f : kFlavors)
        CHECK(closure_box_check(LatticeId(2, f), 1));
}
