#pragma once

#include "kodaira/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kodaira::linalg {

/// Univariate polynomial over Q. coeffs[i] multiplies x^i; no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational evaluate(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder; throws std::domain_error on division by zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same roots, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Number of distinct real roots via a Sturm sequence on the square-free part.
/// Throws std::domain_error for the zero polynomial.
std::size_t sturm_real_root_count(const Polynomial& p);

/// det(x I - m), computed with the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const RatMatrix& m);

}  // namespace kodaira::linalg
