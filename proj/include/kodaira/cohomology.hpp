#pragma once

#include "kodaira/exterior.hpp"

#include <stdexcept>
#include <vector>

namespace kodaira::lie {

/// Raised when a proposed differential does not square to zero.
class StructureError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CohomologyResult {
    std::vector<std::size_t> betti;
    /// Per degree: cocycles (coordinates in the monomial basis) whose classes form a basis.
    std::vector<std::vector<RatVector>> representatives;
};

/// Cohomology of a finite-dimensional free odd algebra with differential.
///
/// Representatives are picked greedily from the canonical kernel basis of each
/// d_p, skipping vectors already spanned by coboundaries and earlier picks.
/// For the builtin algebras this reproduces the textbook generator lists.
class GradedCohomology {
public:
    explicit GradedCohomology(OddAlgebra algebra);

    const OddAlgebra& algebra() const { return algebra_; }
    int top_degree() const { return algebra_.top_degree(); }

    /// d_p : A^p -> A^{p+1}; an empty-target matrix at the top degree.
    const linalg::RatMatrix& differential(int p) const;

    std::vector<std::size_t> betti() const;
    std::size_t betti(int p) const { return representatives(p).size(); }

    const std::vector<RatVector>& representatives(int p) const;
    std::vector<Form> representative_forms(int p) const;
    const std::vector<RatVector>& coboundary_basis(int p) const;

    bool is_cocycle(int p, const RatVector& v) const;
    bool is_coboundary(int p, const RatVector& v) const;

    /// Coordinates of [v] in the representative basis of H^p.
    /// Throws std::invalid_argument when v is not a cocycle.
    RatVector class_coordinates(int p, const RatVector& v) const;

    CohomologyResult result() const;

private:
    void check_degree(int p) const;

    OddAlgebra algebra_;
    std::vector<linalg::RatMatrix> d_;
    std::vector<std::vector<RatVector>> coboundaries_;
    std::vector<std::vector<RatVector>> reps_;
};

}  // namespace kodaira::lie
