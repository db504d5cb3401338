#pragma once

#include "kodaira/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kodaira::lie {

/// A product of distinct odd generators, stored as a bitmask; the factors are
/// read in increasing index order.
using Monomial = std::uint32_t;

inline constexpr std::size_t kMaxGenerators = 16;

/// Sign of the reordering e_a * e_b -> e_{a|b}; zero when a and b share a factor.
int wedge_sign(Monomial a, Monomial b);

std::vector<std::size_t> factors(Monomial m);

/// Element of a free graded-commutative algebra on odd generators.
class Form {
public:
    Form() = default;
    static Form generator(std::size_t index);
    static Form monomial(Monomial m, const Rational& coeff = 1);
    static Form scalar(const Rational& c) { return monomial(0, c); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Monomial m) const;

    void add_term(Monomial m, const Rational& c);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& s, const Form& f);
    friend Form operator-(const Form& f) { return Rational(-1) * f; }
    friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

    /// Graded-commutative product (all generators odd).
    friend Form wedge(const Form& a, const Form& b);

private:
    std::map<Monomial, Rational> terms_;
};

/// Free graded-commutative algebra on odd-degree generators with a
/// derivation d specified on generators. Monomials of each degree are listed
/// in lexicographic order of their (increasing) index sequences.
class OddAlgebra {
public:
    OddAlgebra(std::vector<std::string> names, std::vector<int> degrees, std::vector<Form> differential);

    std::size_t generator_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const Form& differential_of(std::size_t gen) const { return diff_[gen]; }

    int degree(Monomial m) const;
    int top_degree() const { return top_degree_; }

    const std::vector<Monomial>& basis(int p) const;
    /// Position of m within basis(degree(m)).
    std::size_t position(Monomial m) const;

    /// Extends d from generators as a derivation of degree +1.
    Form d(const Form& f) const;

    /// Matrix of d : A^p -> A^{p+1} in the monomial bases.
    linalg::RatMatrix differential_matrix(int p) const;

    RatVector to_vector(const Form& f, int p) const;
    Form from_vector(const RatVector& v, int p) const;

    std::string format(const Form& f) const;
    std::string format(Monomial m) const;

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<Form> diff_;
    int top_degree_ = 0;
    std::vector<std::vector<Monomial>> bases_;
    std::map<Monomial, std::size_t> positions_;
};

/// Algebra map A -> B fixed by generator images; returns its matrix A^p -> B^p.
linalg::RatMatrix induced_map(const OddAlgebra& source, const OddAlgebra& target,
                              const std::vector<Form>& generator_images, int p);

/// Image of one form under the algebra map determined by generator images.
Form apply_algebra_map(const std::vector<Form>& generator_images, const Form& f);

}  // namespace kodaira::lie
