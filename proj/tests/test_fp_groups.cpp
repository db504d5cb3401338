#include "doctest.h"

#include "kodaira/classification.hpp"
#include "kodaira/presentation.hpp"

#include <numeric>
#include <random>

using namespace kodaira;
using namespace kodaira::fp;
using osc::Flavor;
using osc::LatticeId;

namespace {

const std::vector<Flavor> kFlavors{Flavor::Zero, Flavor::Pi, Flavor::PiHalf};

AbelianInvariants inv(std::size_t rank, std::vector<long> torsion)
{
    AbelianInvariants out;
    out.free_rank = rank;
    for (long t : torsion)
        out.torsion.emplace_back(t);
    return out;
}

// Brute-force |Hom(G, Z/n)|: assignments of the generators in Z/n that kill
// every relator's exponent-sum row.
long count_homs_to_cyclic(const Presentation& p, long n)
{
    const std::size_t g = p.generators().size();
    std::vector<std::vector<long>> rows;
    for (const auto& w : p.relators()) {
        std::vector<long> row(g, 0);
        for (const auto& s : w)
            row[s.generator] += s.exponent;
        rows.push_back(row);
    }
    std::vector<long> x(g, 0);
    long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& row : rows) {
            long sum = 0;
            for (std::size_t i = 0; i < g; ++i)
                sum += row[i] * x[i];
            ok = ok && ((sum % n) + n) % n == 0;
        }
        count += ok;
        std::size_t i = 0;
        while (i < g && ++x[i] == n)
            x[i++] = 0;
        if (i == g)
            break;
    }
    return count;
}

// |Hom(Z^r + sum Z/d_i, Z/n)| = n^r prod gcd(d_i, n).
long predicted_homs(const AbelianInvariants& a, long n)
{
    long out = 1;
    for (std::size_t i = 0; i < a.free_rank; ++i)
        out *= n;
    for (const auto& d : a.torsion)
        out *= std::gcd(d.get_si(), n);
    return out;
}

}  // namespace

TEST_CASE("word reduction")
{
    CHECK(reduce({{0, 1}, {1, 2}, {1, -2}, {0, 1}}) == Word{{0, 2}});
    CHECK(reduce({{0, 0}}).empty());
    CHECK(concat(letter(2, 3), inverse(letter(2, 3))).empty());
    CHECK(commutator(letter(0), letter(1)) == Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
}

TEST_CASE("builtin presentations")
{
    const auto p0 = builtin_presentation(LatticeId(3, Flavor::Zero));
    CHECK(p0.generators() == std::vector<std::string>{"s", "a", "b", "c"});
    CHECK(format_word(p0, p0.relators()[0]) == "a b a- b- c-6");

    const auto pp = builtin_presentation(LatticeId(1, Flavor::Pi));
    CHECK(format_word(pp, pp.relators()[3]) == "s a s- a");
    const auto ph = builtin_presentation(LatticeId(1, Flavor::PiHalf));
    CHECK(format_word(ph, ph.relators()[3]) == "s a s- b");
    CHECK(format_word(ph, ph.relators()[4]) == "s b s- a-");
}

TEST_CASE("relators hold in exact arithmetic")
{
    for (std::int64_t k = 1; k <= 4; ++k)
        for (auto f : kFlavors) {
            const auto check = verify_presentation(LatticeId(k, f), 2);
            CHECK(check.passed());
            CHECK(check.box_elements_checked > 0);
        }
}

TEST_CASE("wrong sign conventions are caught")
{
    // Swapping the roles of a and b^-1 in the quarter-turn relation fails.
    const LatticeId id(1, Flavor::PiHalf);
    const auto gens = osc::generators(id);
    const Word wrong{{0, 1}, {1, 1}, {0, -1}, {2, -1}};
    CHECK(evaluate_word(wrong, gens) != osc::OscElement::identity());
    const Word right = builtin_presentation(id).relators()[3];
    CHECK(evaluate_word(right, gens) == osc::OscElement::identity());
}

TEST_CASE("abelianization of the three families")
{
    for (long k = 1; k <= 6; ++k) {
        CHECK(abelianization(builtin_presentation(LatticeId(k, Flavor::Zero))) == inv(3, {2 * k}));
        CHECK(abelianization(builtin_presentation(LatticeId(k, Flavor::Pi))) == inv(1, {2, 2, 2 * k}));
        CHECK(abelianization(builtin_presentation(LatticeId(k, Flavor::PiHalf))) == inv(1, {2, 2 * k}));
    }
    CHECK(abelianization(builtin_presentation(LatticeId(2, Flavor::Pi))).to_string() == "Z^1 + Z/2 + Z/2 + Z/4");
}

TEST_CASE("abelianization agrees with brute-force homomorphism counts")
{
    for (std::int64_t k = 1; k <= 3; ++k)
        for (auto f : kFlavors) {
            const auto p = builtin_presentation(LatticeId(k, f));
            const auto a = abelianization(p);
            for (long n = 2; n <= 8; ++n)
                CHECK(count_homs_to_cyclic(p, n) == predicted_homs(a, n));
        }
}

TEST_CASE("invariant factor properties")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        std::vector<Word> rels;
        for (int r = 0; r < 3; ++r) {
            Word w;
            for (std::size_t g = 0; g < 3; ++g)
                w.push_back({g, static_cast<long>(rng() % 9) - 4});
            rels.push_back(reduce(w));
        }
        const Presentation p({"x", "y", "z"}, rels);
        const auto a = abelianization(p);
        for (std::size_t i = 0; i + 1 < a.torsion.size(); ++i)
            CHECK(a.torsion[i + 1] % a.torsion[i] == 0);
        for (const auto& d : a.torsion)
            CHECK(d >= 2);
        for (long n = 2; n <= 6; ++n)
            CHECK(count_homs_to_cyclic(p, n) == predicted_homs(a, n));
    }
}

TEST_CASE("Tietze moves leave the abelianization unchanged")
{
    std::mt19937_64 rng(5);
    for (std::int64_t k = 1; k <= 3; ++k)
        for (auto f : kFlavors) {
            const auto p = builtin_presentation(LatticeId(k, f));
            const auto base = abelianization(p);

            const Word extra{{1, 2}, {3, -1}, {0, 1}};
            CHECK(abelianization(p.with_redundant_generator("t", extra)) == base);

            auto rels = p.relators();
            for (auto& w : rels) {
                const Word g = letter(rng() % 4, static_cast<long>(rng() % 5) - 2);
                w = concat(concat(g, w), inverse(g));
            }
            CHECK(abelianization(Presentation(p.generators(), rels)) == base);

            CHECK(abelianization(p.with_relator(concat(p.relators()[0], inverse(p.relators()[1])))) == base);
            CHECK(abelianization(p.with_relator({})) == base);
        }
}

TEST_CASE("distinguish_all")
{
    const auto rep = distinguish_all(2);
    CHECK(rep.rows.size() == 6);
    CHECK(rep.pairwise_distinct());
    CHECK(distinguish_all(8).pairwise_distinct());
    CHECK_THROWS_AS(distinguish_all(1), std::invalid_argument);
    // free rank equals b1 of the solvmanifold: 3, 1, 1.
    CHECK(rep.rows[0].invariants.free_rank == 3);
    CHECK(rep.rows[1].invariants.free_rank == 1);
    CHECK(rep.rows[2].invariants.free_rank == 1);
}

TEST_CASE("text format")
{
    const auto p = parse_presentation("gens: s a b c; rel: a b a- b- c-2, a c a- c-\n b c b^-1 c^-1; s^2 a+3 a-3 s-2");
    CHECK(p.generators().size() == 4);
    CHECK(p.relators().size() == 4);
    CHECK(p.relators()[3].empty());
    CHECK(format_presentation(p) == "gens: s a b c; rel: a b a- b- c-2, a c a- c-, b c b- c-, 1");
    CHECK(parse_presentation(format_presentation(p)) == p);

    for (std::int64_t k = 1; k <= 3; ++k)
        for (auto f : kFlavors) {
            const auto q = builtin_presentation(LatticeId(k, f));
            CHECK(parse_presentation(format_presentation(q)) == q);
        }

    CHECK(parse_presentation("gens: x; rel: 1").relators() == std::vector<Word>{Word{}});
    CHECK(parse_presentation("# comment\ngens: x y\nrel: x^3\ny+2").relators().size() == 2);
    CHECK_THROWS_AS(parse_presentation("gens: a; rel: A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("rel: a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("gens: a a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("gens: a; rel: a^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("gens: a; rel: a,,a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("gens: a; a b"), std::invalid_argument);
}

TEST_CASE("the exotic lattice satisfies the relations of Lambda_{4,pi}")
{
    // s' = (2,1,1,0), A' = A C^-2, B' = B C^2, C with A = (0,2,0,0), B = (0,0,2,0), C = (0,0,0,1/2).
    const auto g = osc::exotic_generators();
    const osc::OscElement c = g[3];
    const std::vector<osc::OscElement> assignment{g[0], osc::mul(g[1], osc::power(c, -2)),
                                                  osc::mul(g[2], osc::power(c, 2)), c};
    const auto p = builtin_presentation(LatticeId(4, Flavor::Pi));
    for (const auto& w : p.relators())
        CHECK(evaluate_word(w, assignment) == osc::OscElement::identity());
    for (const auto& e : assignment)
        CHECK(osc::in_exotic_lattice(e));
    // Lambda_{2,pi} abelianizes differently, so no isomorphism exists.
    CHECK(abelianization(p) != abelianization(builtin_presentation(LatticeId(2, Flavor::Pi))));
}
