#include "kodaira/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace kodaira::linalg {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

EchelonForm reduced_row_echelon(RatMatrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(sel, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatVector primitive_scaling(RatVector v)
{
    Integer den_lcm = 1;
    for (const auto& x : v)
        if (x != 0)
            den_lcm = lcm(den_lcm, Integer(x.get_den()));
    Integer num_gcd = 0;
    for (auto& x : v) {
        x *= den_lcm;
        if (x != 0)
            num_gcd = gcd(num_gcd, Integer(x.get_num()));
    }
    if (num_gcd > 1)
        for (auto& x : v)
            x /= num_gcd;
    return v;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    const EchelonForm ef = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ef.pivots)
        is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r)
            v[ef.pivots[r]] = -ef.reduced(r, f);
        basis.push_back(primitive_scaling(std::move(v)));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const EchelonForm ef = reduced_row_echelon(std::move(aug));
    RatVector x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        if (ef.pivots[r] == m.cols())
            return std::nullopt;
        x[ef.pivots[r]] = ef.reduced(r, m.cols());
    }
    return x;
}

Rational determinant(RatMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            const Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m)
{
    const Rational d = determinant(to_rational(m));
    return d.get_num();
}

}  // namespace kodaira::linalg
