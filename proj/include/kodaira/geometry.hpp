#pragma once

#include "kodaira/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace kodaira::geom {

using lie::Form;
using lie::LieAlgebra;
using linalg::RatMatrix;

/// Endomorphism J of the Lie algebra with J^2 = -I; column j is J e_j.
class AlmostComplexStructure {
public:
    /// Throws std::invalid_argument unless J is square, of even size and squares to -I.
    explicit AlmostComplexStructure(RatMatrix j);

    const RatMatrix& matrix() const { return j_; }
    std::size_t dim() const { return j_.rows(); }
    RatVector operator()(const RatVector& v) const { return j_.apply(v); }

private:
    RatMatrix j_;
};

/// On (T, X, Y, Z): JX = Y, JZ = T.
AlmostComplexStructure standard_structure();
/// On (T, X, Y, Z): JX = Z, JY = T.
AlmostComplexStructure swapped_structure();

/// N(u, v) = [Ju, Jv] - J[Ju, v] - J[u, Jv] - [u, v].
RatVector nijenhuis(const LieAlgebra& alg, const AlmostComplexStructure& j, const RatVector& u, const RatVector& v);

struct NijenhuisEntry {
    std::size_t i, j;
    RatVector value;
};

/// N(e_i, e_j) for every i < j. Throws std::invalid_argument on a dimension mismatch.
std::vector<NijenhuisEntry> nijenhuis_table(const LieAlgebra& alg, const AlmostComplexStructure& j);
bool is_integrable(const LieAlgebra& alg, const AlmostComplexStructure& j);

/// [Je_i, Je_j] = [e_i, e_j] for all basis pairs.
bool is_abelian_cs(const LieAlgebra& alg, const AlmostComplexStructure& j);

/// Basis of the closed invariant 2-forms, ker(d : Lambda^2 -> Lambda^3).
std::vector<Form> closed_two_forms(const LieAlgebra& alg);

bool is_closed(const LieAlgebra& alg, const Form& f);

/// Pfaffian of a 2-form on four generators: w01 w23 - w02 w13 + w03 w12.
Rational pfaffian(const Form& omega);

/// Coefficient of e^0 e^1 e^2 e^3 in omega ^ omega, which equals 2 Pf(omega).
Rational top_coefficient_of_square(const Form& omega);

struct SymplecticWitness {
    RatVector coefficients;  // in the closed basis
    Form omega;
    Rational top_coefficient;  // of omega ^ omega, nonzero
};

struct SymplecticSearch {
    std::vector<Form> closed_basis;
    /// Pf(sum c_a b_a) = c^T Q c.
    RatMatrix pfaffian_form;
    std::optional<SymplecticWitness> witness;
};

/// Decides whether a closed nondegenerate invariant 2-form exists by expanding
/// the Pfaffian of the generic closed 2-form. Throws std::invalid_argument unless dim 4.
SymplecticSearch invariant_symplectic(const LieAlgebra& alg);

/// Evaluates the Pfaffian of sum c_a b_a at every c in {-1, 0, 1}^m. A quadratic
/// that vanishes on this grid is identically zero.
bool pfaffian_vanishes_on_grid(const std::vector<Form>& closed_basis);

}  // namespace kodaira::geom
