#pragma once

#include "kodaira/oscillator.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kodaira::fp {

struct Syllable {
    std::size_t generator;
    long exponent;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

/// Word helpers. All results are freely reduced.
Word reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word letter(std::size_t generator, long exponent = 1);

class Presentation {
public:
    Presentation() = default;
    /// Throws std::invalid_argument on duplicate names or out-of-range indices.
    Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

    const std::vector<std::string>& generators() const { return names_; }
    const std::vector<Word>& relators() const { return relators_; }
    std::size_t generator_index(const std::string& name) const;

    Presentation with_relator(Word w) const;
    /// Adds a generator `name` together with the relator name^-1 * w.
    Presentation with_redundant_generator(const std::string& name, const Word& w) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Word> relators_;
};

/// Text format, one statement per ';' or newline:
///   gens: s a b c
///   rel: a b a- b- c-2, a c a- c-
/// A syllable is a generator name optionally followed by an exponent
/// "-" | "+" | "-N" | "+N" | "^N" | "^-N". The empty word is "1".
/// Statements after the first `rel:` without a keyword are further relators.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);
std::string format_word(const Presentation& p, const Word& w);

/// Generators (s, a, b, c) with the flavor relations of Lambda_{k,i}.
Presentation builtin_presentation(const osc::LatticeId& lattice);

/// Evaluates w with generator i sent to assignment[i].
osc::OscElement evaluate_word(const Word& w, const std::vector<osc::OscElement>& assignment);

struct PresentationCheck {
    std::vector<std::size_t> failing_relators;  // indices into relators()
    std::size_t box_elements_checked = 0;
    std::size_t normal_form_failures = 0;
    bool passed() const { return failing_relators.empty() && normal_form_failures == 0; }
};

/// Relators evaluate to the identity under the canonical generators, and each
/// box element equals the evaluation of its normal-form word s^m a^x b^y c^j.
PresentationCheck verify_presentation(const osc::LatticeId& lattice, long box_bound = 2);

struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors >= 2, each dividing the next

    std::string to_string() const;  // e.g. "Z^1 + Z/2 + Z/2 + Z/4"
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relation matrix (one row per relator, exponent sums) reduced by Smith normal form.
AbelianInvariants abelianization(const Presentation& p);

struct DistinctionRow {
    osc::LatticeId lattice;
    AbelianInvariants invariants;
};

struct DistinctionReport {
    std::vector<DistinctionRow> rows;
    /// Pairs (i, j), i < j, whose invariants coincide.
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    bool pairwise_distinct() const { return collisions.empty(); }
};

/// Invariants of every Lambda_{k,i} with k <= k_max. Throws std::invalid_argument if k_max < 2.
DistinctionReport distinguish_all(std::int64_t k_max);

}  // namespace kodaira::fp
