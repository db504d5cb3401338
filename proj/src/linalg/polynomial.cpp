#include "kodaira/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace kodaira::linalg {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return {};
    std::vector<Rational> c = coeffs_;
    const Rational lead = c.back();
    for (auto& x : c)
        x /= lead;
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) 
{
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c)
        x = -x;
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() < divisor.coeffs_.size())
        return {Polynomial{}, *this};
    std::vector<Rational> quot(rem.size() - dd, Rational(0));
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0)
            continue;
        const Rational f = rem[i] / divisor.coeffs_.back();
        quot[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] -= f * divisor.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1)
            out << kodaira::to_string(mag);
        if (i > 0)
            out << var;
        if (i > 1)
            out << '^' << i;
    }
    return out.str();
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial square_free_part(const Polynomial& p)
{
    if (p.is_zero())
        throw std::domain_error("square-free part of the zero polynomial");
    const Polynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

namespace {

int sign(const Rational& r) { return sgn(r); }

std::size_t sign_changes(const std::vector<int>& signs)
{
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

std::size_t sturm_real_root_count(const Polynomial& p)
{
    if (p.is_zero())
        throw std::domain_error("Sturm count of the zero polynomial");
    std::vector<Polynomial> seq;
    seq.push_back(square_free_part(p));
    seq.push_back(seq[0].derivative());
    while (!seq.back().is_zero()) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq[seq.size() - 1];
        seq.push_back(-a.divmod(b).second);
    }
    seq.pop_back();

    std::vector<int> at_neg_inf, at_pos_inf;
    for (const auto& q : seq) {
        const int lead = sign(q.leading());
        at_pos_inf.push_back(lead);
        at_neg_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
    }
    return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

Polynomial characteristic_polynomial(const RatMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) += c[n - k + 1];
        const RatMatrix am = a * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / static_cast<unsigned long>(k);
    }
    return Polynomial(std::move(c));
}

}  // namespace kodaira::linalg
