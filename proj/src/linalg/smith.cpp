#include "kodaira/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace kodaira::linalg {

namespace {

// Row and column operations applied to D while mirroring them into U (rows)
// and V (columns), so that U * A * V == D is maintained throughout.
class SnfWork {
public:
    explicit SnfWork(const IntMatrix& a)
        : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols()))
    {
    }

    SnfResult run()
    {
        const std::size_t steps = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < steps; ++t) {
            if (!select_pivot(t))
                break;
            for (;;) {
                clear_cross(t);
                auto bad = find_nondivisible(t);
                if (!bad)
                    break;
                // Fold the offending row into the pivot row; the next
                // elimination pass produces a strictly smaller remainder.
                add_row(t, bad->first, 1);
            }
            if (d_(t, t) < 0)
                negate_row(t);
        }
        return {std::move(d_), std::move(u_), std::move(v_)};
    }

private:
    bool select_pivot(std::size_t t)
    {
        bool found = false;
        std::size_t bi = 0, bj = 0;
        Integer best;
        for (std::size_t i = t; i < d_.rows(); ++i)
            for (std::size_t j = t; j < d_.cols(); ++j) {
                const Integer& e = d_(i, j);
                if (e == 0)
                    continue;
                if (!found || abs(e) < best) {
                    best = abs(e);
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        if (!found)
            return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Repeatedly reduce column t and row t against the pivot until both are
    // zero off the diagonal, re-picking the smallest entry as pivot.
    void clear_cross(std::size_t t)
    {
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < d_.rows(); ++i) {
                if (d_(i, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
                add_row(i, t, -q);
                dirty = dirty || d_(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < d_.cols(); ++j) {
                if (d_(t, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
                add_col(j, t, -q);
                dirty = dirty || d_(t, j) != 0;
            }
            if (!dirty)
                return;
            move_smallest_to_pivot(t);
        }
    }

    void move_smallest_to_pivot(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        Integer best = abs(d_(t, t));
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            if (d_(i, t) != 0 && abs(d_(i, t)) < best) {
                best = abs(d_(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
            if (d_(t, j) != 0 && abs(d_(t, j)) < best) {
                best = abs(d_(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    std::optional<std::pair<std::size_t, std::size_t>> find_nondivisible(std::size_t t) const
    {
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            for (std::size_t j = t + 1; j < d_.cols(); ++j)
                if (d_(i, j) % d_(t, t) != 0)
                    return std::make_pair(i, j);
        return std::nullopt;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < d_.cols(); ++j)
            std::swap(d_(a, j), d_(b, j));
        for (std::size_t j = 0; j < u_.cols(); ++j)
            std::swap(u_(a, j), u_(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < d_.rows(); ++i)
            std::swap(d_(i, a), d_(i, b));
        for (std::size_t i = 0; i < v_.rows(); ++i)
            std::swap(v_(i, a), v_(i, b));
    }

    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& f)
    {
        for (std::size_t j = 0; j < d_.cols(); ++j)
            d_(dst, j) += f * d_(src, j);
        for (std::size_t j = 0; j < u_.cols(); ++j)
            u_(dst, j) += f * u_(src, j);
    }

    // col[dst] += f * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& f)
    {
        for (std::size_t i = 0; i < d_.rows(); ++i)
            d_(i, dst) += f * d_(i, src);
        for (std::size_t i = 0; i < v_.rows(); ++i)
            v_(i, dst) += f * v_(i, src);
    }

    void negate_row(std::size_t r)
    {
        for (std::size_t j = 0; j < d_.cols(); ++j)
            d_(r, j) = -d_(r, j);
        for (std::size_t j = 0; j < u_.cols(); ++j)
            u_(r, j) = -u_(r, j);
    }

    IntMatrix d_;
    IntMatrix u_;
    IntMatrix v_;
};

}  // namespace

std::vector<Integer> SnfResult::invariant_factors() const
{
    std::vector<Integer> out;
    const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(diagonal(i, i));
    return out;
}

SnfResult smith_normal_form(const IntMatrix& a) { return SnfWork(a).run(); }

}  // namespace kodaira::linalg
