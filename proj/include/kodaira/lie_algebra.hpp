#pragma once

#include "kodaira/cohomology.hpp"
#include "kodaira/exterior.hpp"
#include "kodaira/matrix.hpp"
#include "kodaira/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kodaira::lie {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c^k_{ij} e_k. Only pairs i < j are stored.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, std::vector<std::string> labels, std::vector<std::string> dual_labels = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Names of the dual basis e^i, used when printing cochains.
    const std::vector<std::string>& dual_labels() const { return dual_labels_; }

    /// Sets [e_i, e_j]; [e_j, e_i] follows by antisymmetry. Requires i != j.
    void set_bracket(std::size_t i, std::size_t j, RatVector coeffs);

    RatVector bracket(std::size_t i, std::size_t j) const;
    RatVector bracket(const RatVector& u, const RatVector& v) const;
    Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    RatVector basis_vector(std::size_t i) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const;

    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::string> dual_labels_;
    std::vector<RatVector> table_;
};

struct JacobiViolation {
    std::size_t i, j, k;
    RatVector value;  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

std::vector<JacobiViolation> validate(const LieAlgebra& alg);

/// Matrix of ad_v; column j is [v, e_j].
linalg::RatMatrix adjoint(const LieAlgebra& alg, const RatVector& v);

bool is_unimodular(const LieAlgebra& alg);

/// Chevalley-Eilenberg complex: the exterior algebra on the dual basis with
/// d e^k = -sum_{i<j} c^k_{ij} e^i e^j, plus the matrices d_p.
struct CeComplex {
    LieAlgebra algebra;
    OddAlgebra cochains;
    std::vector<linalg::RatMatrix> differentials;
};

/// Throws StructureError when d^2 != 0 (i.e. Jacobi fails).
CeComplex ce_complex(const LieAlgebra& alg);
GradedCohomology ce_cohomology(const LieAlgebra& alg);

/// The CE algebra (exterior algebra on the dual basis with its differential).
OddAlgebra ce_algebra(const LieAlgebra& alg);

std::vector<std::size_t> betti(const LieAlgebra& alg);

/// Cocycle representatives spanning H^p; throws std::out_of_range for p > dim.
std::vector<RatVector> cohomology_basis(const LieAlgebra& alg, int p);

struct SolvabilityWitness {
    RatVector vector;
    linalg::Polynomial characteristic;
    std::size_t distinct_roots;       // degree of the square-free part
    std::size_t distinct_real_roots;  // Sturm count
};

/// A witness certifies that ad_v has a non-real eigenvalue, so the algebra is
/// not completely solvable. nullopt means no trial vector exhibited one: the
/// search is inconclusive, not a proof of complete solvability.
std::optional<SolvabilityWitness> completely_solvable_witness(const LieAlgebra& alg,
                                                              const std::vector<RatVector>& trial_vectors);

/// Basis vectors followed by `extra` pseudo-random small-integer combinations.
std::vector<RatVector> default_trial_vectors(const LieAlgebra& alg, std::uint64_t seed, std::size_t extra = 16);

namespace builtin {

LieAlgebra heisenberg();           // h3: [X,Y] = Z
LieAlgebra oscillator();           // g: [T,X] = -Y, [T,Y] = X, [X,Y] = Z
LieAlgebra line_times_heisenberg(); // R x h3
/// R ⋉ R^2 rotating with speed `scale`: d e^2 = scale e^13, d e^3 = -scale e^12.
LieAlgebra rotation_example(const Rational& scale = 1);
LieAlgebra abelian(std::size_t dim);
/// 2-dim non-unimodular algebra [X,Y] = Y.
LieAlgebra affine_line();

/// Lookup by name: "h3", "oscillator", "r_x_h3", "example_sec3", "abelian<n>", "aff".
LieAlgebra by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace builtin

}  // namespace kodaira::lie
