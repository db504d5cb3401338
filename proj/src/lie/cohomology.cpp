#include "kodaira/cohomology.hpp"

#include "kodaira/linalg.hpp"

#include <string>

namespace kodaira::lie {

namespace {

using linalg::RatMatrix;

std::vector<RatVector> independent_columns(const RatMatrix& m)
{
    std::vector<RatVector> out;
    for (auto p : linalg::reduced_row_echelon(m).pivots)
        out.push_back(m.column(p));
    return out;
}

RatMatrix columns_matrix(const std::vector<RatVector>& cols, std::size_t rows)
{
    return RatMatrix::from_columns(cols, rows);
}

}  // namespace

GradedCohomology::GradedCohomology(OddAlgebra algebra) : algebra_(std::move(algebra))
{
    const int top = algebra_.top_degree();
    for (int p = 0; p <= top; ++p)
        d_.push_back(algebra_.differential_matrix(p));

    for (int p = 0; p + 1 <= top; ++p) {
        if (d_[static_cast<std::size_t>(p) + 1].cols() == 0 || d_[static_cast<std::size_t>(p)].cols() == 0)
            continue;
        const RatMatrix dd = d_[static_cast<std::size_t>(p) + 1] * d_[static_cast<std::size_t>(p)];
        if (!dd.is_zero())
            throw StructureError("differential does not square to zero (d_" + std::to_string(p + 1) + " d_" +
                                 std::to_string(p) + " != 0)");
    }

    for (int p = 0; p <= top; ++p) {
        const std::size_t dim = algebra_.basis(p).size();
        std::vector<RatVector> cob;
        if (p > 0)
            cob = independent_columns(d_[static_cast<std::size_t>(p) - 1]);
        std::vector<RatVector> span = cob;
        std::vector<RatVector> reps;
        for (auto& z : linalg::kernel_basis(d_[static_cast<std::size_t>(p)])) {
            span.push_back(z);
            if (linalg::rank(columns_matrix(span, dim)) == span.size())
                reps.push_back(std::move(z));
            else
                span.pop_back();
        }
        coboundaries_.push_back(std::move(cob));
        reps_.push_back(std::move(reps));
    }
}

void GradedCohomology::check_degree(int p) const
{
    if (p < 0 || p > top_degree())
        throw std::out_of_range("cohomological degree " + std::to_string(p) + " outside 0.." +
                                std::to_string(top_degree()));
}

const linalg::RatMatrix& GradedCohomology::differential(int p) const
{
    check_degree(p);
    return d_[static_cast<std::size_t>(p)];
}

std::vector<std::size_t> GradedCohomology::betti() const
{
    std::vector<std::size_t> b;
    for (const auto& r : reps_)
        b.push_back(r.size());
    return b;
}

const std::vector<RatVector>& GradedCohomology::representatives(int p) const
{
    check_degree(p);
    return reps_[static_cast<std::size_t>(p)];
}

std::vector<Form> GradedCohomology::representative_forms(int p) const
{
    std::vector<Form> out;
    for (const auto& v : representatives(p))
        out.push_back(algebra_.from_vector(v, p));
    return out;
}

const std::vector<RatVector>& GradedCohomology::coboundary_basis(int p) const
{
    check_degree(p);
    return coboundaries_[static_cast<std::size_t>(p)];
}

bool GradedCohomology::is_cocycle(int p, const RatVector& v) const
{
    const auto image = differential(p).apply(v);
    for (const auto& x : image)
        if (x != 0)
            return false;
    return true;
}

bool GradedCohomology::is_coboundary(int p, const RatVector& v) const
{
    const auto& cob = coboundary_basis(p);
    if (cob.empty()) {
        for (const auto& x : v)
            if (x != 0)
                return false;
        return true;
    }
    return linalg::solve(columns_matrix(cob, v.size()), v).has_value();
}

RatVector GradedCohomology::class_coordinates(int p, const RatVector& v) const
{
    if (!is_cocycle(p, v))
        throw std::invalid_argument("class_coordinates: vector is not a cocycle in degree " + std::to_string(p));
    const auto& reps = representatives(p);
    std::vector<RatVector> cols = reps;
    const auto& cob = coboundary_basis(p);
    cols.insert(cols.end(), cob.begin(), cob.end());
    if (cols.empty())
        return {};
    const auto x = linalg::solve(columns_matrix(cols, v.size()), v);
    if (!x)
        throw std::logic_error("class_coordinates: cocycle outside the span of representatives and coboundaries");
    return RatVector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(reps.size()));
}

CohomologyResult GradedCohomology::result() const { return {betti(), reps_}; }

}  // namespace kodaira::lie
