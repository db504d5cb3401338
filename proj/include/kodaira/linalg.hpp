#pragma once

#include "kodaira/matrix.hpp"

#include <optional>
#include <vector>

namespace kodaira::linalg {

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct EchelonForm {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

EchelonForm reduced_row_echelon(RatMatrix m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of the right null space. Each vector is scaled to integer entries
/// with gcd 1 and a positive entry at its free column, so results compare
/// exactly across runs.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some x with m * x = b, or nullopt when b is outside the column space.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Rescales v to integer entries with gcd 1, keeping its direction.
RatVector primitive_scaling(RatVector v);

Rational determinant(RatMatrix m);

struct SnfResult {
    IntMatrix diagonal;  // D
    IntMatrix left;      // U, unimodular
    IntMatrix right;     // V, unimodular

    /// The diagonal entries d_1 | d_2 | ... (zeros included, up to min(rows, cols)).
    std::vector<Integer> invariant_factors() const;
};

/// U * A * V = D with D diagonal, nonnegative, and d_i | d_{i+1}.
SnfResult smith_normal_form(const IntMatrix& a);

Integer determinant(const IntMatrix& m);

}  // namespace kodaira::linalg
