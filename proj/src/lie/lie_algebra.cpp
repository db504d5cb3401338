#include "kodaira/lie_algebra.hpp"

#include "kodaira/linalg.hpp"

#include <random>
#include <stdexcept>

namespace kodaira::lie {

namespace {

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i)
        out.push_back(prefix + std::to_string(i + 1));
    return out;
}

RatVector unit(std::size_t dim, std::size_t i)
{
    RatVector v(dim, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels, std::vector<std::string> dual_labels)
    : dim_(dim), labels_(std::move(labels)), dual_labels_(std::move(dual_labels))
{
    if (dim_ > kMaxGenerators)
        throw std::invalid_argument("LieAlgebra: dimension exceeds " + std::to_string(kMaxGenerators));
    if (labels_.empty())
        labels_ = default_labels(dim_, "E");
    if (dual_labels_.empty())
        dual_labels_ = default_labels(dim_, "e");
    if (labels_.size() != dim_ || dual_labels_.size() != dim_)
        throw std::invalid_argument("LieAlgebra: label count does not match dimension");
    table_.assign(dim_ * (dim_ - (dim_ > 0 ? 1 : 0)) / 2, RatVector(dim_, Rational(0)));
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const
{
    // i < j; row-major over the strict upper triangle.
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, RatVector coeffs)
{
    if (i >= dim_ || j >= dim_)
        throw std::out_of_range("set_bracket: basis index out of range");
    if (i == j)
        throw std::invalid_argument("set_bracket: [e_i, e_i] is zero by antisymmetry");
    if (coeffs.size() != dim_)
        throw std::invalid_argument("set_bracket: coefficient vector has wrong length");
    if (i > j) {
        std::swap(i, j);
        for (auto& c : coeffs)
            c = -c;
    }
    table_[pair_index(i, j)] = std::move(coeffs);
}

RatVector LieAlgebra::bracket(std::size_t i, std::size_t j) const
{
    if (i >= dim_ || j >= dim_)
        throw std::out_of_range("bracket: basis index out of range");
    if (i == j)
        return RatVector(dim_, Rational(0));
    if (i < j)
        return table_[pair_index(i, j)];
    RatVector v = table_[pair_index(j, i)];
    for (auto& c : v)
        c = -c;
    return v;
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const
{
    return bracket(i, j).at(k);
}

RatVector LieAlgebra::bracket(const RatVector& u, const RatVector& v) const
{
    if (u.size() != dim_ || v.size() != dim_)
        throw std::invalid_argument("bracket: vector length does not match dimension");
    RatVector out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0 || i == j)
                continue;
            const Rational f = u[i] * v[j];
            const RatVector b = bracket(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                out[k] += f * b[k];
        }
    }
    return out;
}

RatVector LieAlgebra::basis_vector(std::size_t i) const { return unit(dim_, i); }

std::vector<JacobiViolation> validate(const LieAlgebra& alg)
{
    std::vector<JacobiViolation> out;
    const std::size_t n = alg.dim();
    auto e = [&](std::size_t i) { return alg.basis_vector(i); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                RatVector sum(n, Rational(0));
                const RatVector t1 = alg.bracket(e(i), alg.bracket(j, k));
                const RatVector t2 = alg.bracket(e(j), alg.bracket(k, i));
                const RatVector t3 = alg.bracket(e(k), alg.bracket(i, j));
                bool zero = true;
                for (std::size_t c = 0; c < n; ++c) {
                    sum[c] = t1[c] + t2[c] + t3[c];
                    zero = zero && sum[c] == 0;
                }
                if (!zero)
                    out.push_back({i, j, k, std::move(sum)});
            }
    return out;
}

linalg::RatMatrix adjoint(const LieAlgebra& alg, const RatVector& v)
{
    if (v.size() != alg.dim())
        throw std::invalid_argument("adjoint: vector length does not match dimension");
    std::vector<RatVector> cols;
    for (std::size_t j = 0; j < alg.dim(); ++j)
        cols.push_back(alg.bracket(v, alg.basis_vector(j)));
    return linalg::RatMatrix::from_columns(cols, alg.dim());
}

bool is_unimodular(const LieAlgebra& alg)
{
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Rational tr = 0;
        for (std::size_t j = 0; j < alg.dim(); ++j)
            tr += alg.structure_constant(i, j, j);
        if (tr != 0)
            return false;
    }
    return true;
}

OddAlgebra ce_algebra(const LieAlgebra& alg)
{
    const std::size_t n = alg.dim();
    std::vector<Form> diff(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const RatVector b = alg.bracket(i, j);
            const Monomial m = (Monomial{1} << i) | (Monomial{1} << j);
            for (std::size_t k = 0; k < n; ++k)
                diff[k].add_term(m, -b[k]);
        }
    return OddAlgebra(alg.dual_labels(), std::vector<int>(n, 1), std::move(diff));
}

CeComplex ce_complex(const LieAlgebra& alg)
{
    GradedCohomology h = ce_cohomology(alg);  // verifies d^2 = 0
    std::vector<linalg::RatMatrix> ds;
    for (int p = 0; p <= h.top_degree(); ++p)
        ds.push_back(h.differential(p));
    return {alg, h.algebra(), std::move(ds)};
}

GradedCohomology ce_cohomology(const LieAlgebra& alg) { return GradedCohomology(ce_algebra(alg)); }

std::vector<std::size_t> betti(const LieAlgebra& alg) { return ce_cohomology(alg).betti(); }

std::vector<RatVector> cohomology_basis(const LieAlgebra& alg, int p)
{
    if (p < 0 || static_cast<std::size_t>(p) > alg.dim())
        throw std::out_of_range("cohomology_basis: degree " + std::to_string(p) + " outside 0.." +
                                std::to_string(alg.dim()));
    return ce_cohomology(alg).representatives(p);
}

std::optional<SolvabilityWitness> completely_solvable_witness(const LieAlgebra& alg,
                                                              const std::vector<RatVector>& trial_vectors)
{
    for (const auto& v : trial_vectors) {
        linalg::Polynomial chi = linalg::characteristic_polynomial(adjoint(alg, v));
        const linalg::Polynomial sf = linalg::square_free_part(chi);
        const auto distinct = static_cast<std::size_t>(sf.degree());
        const std::size_t real = linalg::sturm_real_root_count(sf);
        if (real < distinct)
            return SolvabilityWitness{v, std::move(chi), distinct, real};
    }
    return std::nullopt;
}

std::vector<RatVector> default_trial_vectors(const LieAlgebra& alg, std::uint64_t seed, std::size_t extra)
{
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        out.push_back(alg.basis_vector(i));
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < extra; ++t) {
        RatVector v(alg.dim());
        for (auto& c : v)
            c = static_cast<long>(rng() % 7) - 3;
        out.push_back(std::move(v));
    }
    return out;
}

namespace builtin {

namespace {

RatVector vec(std::initializer_list<long> xs)
{
    RatVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

}  // namespace

LieAlgebra heisenberg()
{
    LieAlgebra h(3, {"X", "Y", "Z"}, {"alpha", "beta", "gamma"});
    h.set_bracket(0, 1, vec({0, 0, 1}));
    return h;
}

LieAlgebra oscillator()
{
    // ad_T acts on span(X, Y) by the derivative of the rotation at t = 0.
    LieAlgebra g(4, {"T", "X", "Y", "Z"}, {"tau", "alpha", "beta", "gamma"});
    g.set_bracket(0, 1, vec({0, 0, -1, 0}));
    g.set_bracket(0, 2, vec({0, 1, 0, 0}));
    g.set_bracket(1, 2, vec({0, 0, 0, 1}));
    return g;
}

LieAlgebra line_times_heisenberg()
{
    LieAlgebra g(4, {"T", "X", "Y", "Z"}, {"tau", "alpha", "beta", "gamma"});
    g.set_bracket(1, 2, vec({0, 0, 0, 1}));
    return g;
}

LieAlgebra rotation_example(const Rational& scale)
{
    if (scale == 0)
        throw std::invalid_argument("rotation_example: scale must be nonzero");
    LieAlgebra g(3, {"E1", "E2", "E3"}, {"e1", "e2", "e3"});
    g.set_bracket(0, 1, RatVector{0, 0, scale});
    g.set_bracket(0, 2, RatVector{0, -scale, 0});
    return g;
}

LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim, {}, {}); }

LieAlgebra affine_line()
{
    LieAlgebra g(2, {"X", "Y"}, {"x", "y"});
    g.set_bracket(0, 1, vec({0, 1}));
    return g;
}

LieAlgebra by_name(const std::string& name)
{
    if (name == "h3")
        return heisenberg();
    if (name == "oscillator")
        return oscillator();
    if (name == "r_x_h3")
        return line_times_heisenberg();
    if (name == "example_sec3")
        return rotation_example(1);
    if (name == "aff")
        return affine_line();
    if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
        const std::string digits = name.substr(7);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2) {
            const auto n = static_cast<std::size_t>(std::stoul(digits));
            if (n >= 1 && n <= kMaxGenerators)
                return abelian(n);
        }
    }
    throw std::invalid_argument("unknown Lie algebra '" + name + "'");
}

std::vector<std::string> names() { return {"h3", "oscillator", "r_x_h3", "example_sec3", "aff", "abelian<n>"}; }

}  // namespace builtin

}  // namespace kodaira::lie
