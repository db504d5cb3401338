#include "kodaira/geometry.hpp"

#include "kodaira/linalg.hpp"

#include <stdexcept>

namespace kodaira::geom {

namespace {

RatVector add(RatVector a, const RatVector& b, int sign = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += sign > 0 ? b[i] : Rational(-b[i]);
    return a;
}

bool all_zero(const RatVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

void require_matching(const LieAlgebra& alg, const AlmostComplexStructure& j)
{
    if (alg.dim() != j.dim())
        throw std::invalid_argument("almost complex structure has size " + std::to_string(j.dim()) +
                                    " but the algebra has dimension " + std::to_string(alg.dim()));
}

lie::Monomial pair(std::size_t i, std::size_t j) { return (lie::Monomial{1} << i) | (lie::Monomial{1} << j); }

Form combination(const std::vector<Form>& basis, const RatVector& c)
{
    Form out;
    for (std::size_t a = 0; a < basis.size(); ++a)
        out += c[a] * basis[a];
    return out;
}

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(RatMatrix j) : j_(std::move(j))
{
    if (j_.rows() != j_.cols() || j_.rows() % 2 != 0)
        throw std::invalid_argument("almost complex structure must be a square matrix of even size");
    if (j_ * j_ != RatMatrix::identity(j_.rows()).scaled(Rational(-1)))
        throw std::invalid_argument("almost complex structure must satisfy J^2 = -I");
}

AlmostComplexStructure standard_structure()
{
    // Columns: JT = -Z, JX = Y, JY = -X, JZ = T.
    return AlmostComplexStructure(RatMatrix{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
}

AlmostComplexStructure swapped_structure()
{
    // Columns: JT = -Y, JX = Z, JY = T, JZ = -X.
    return AlmostComplexStructure(RatMatrix{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}});
}

RatVector nijenhuis(const LieAlgebra& alg, const AlmostComplexStructure& j, const RatVector& u, const RatVector& v)
{
    require_matching(alg, j);
    const RatVector ju = j(u), jv = j(v);
    RatVector out = alg.bracket(ju, jv);
    out = add(out, j(alg.bracket(ju, v)), -1);
    out = add(out, j(alg.bracket(u, jv)), -1);
    return add(out, alg.bracket(u, v), -1);
}

std::vector<NijenhuisEntry> nijenhuis_table(const LieAlgebra& alg, const AlmostComplexStructure& j)
{
    require_matching(alg, j);
    std::vector<NijenhuisEntry> out;
    for (std::size_t a = 0; a < alg.dim(); ++a)
        for (std::size_t b = a + 1; b < alg.dim(); ++b)
            out.push_back({a, b, nijenhuis(alg, j, alg.basis_vector(a), alg.basis_vector(b))});
    return out;
}

bool is_integrable(const LieAlgebra& alg, const AlmostComplexStructure& j)
{
    for (const auto& e : nijenhuis_table(alg, j))
        if (!all_zero(e.value))
            return false;
    return true;
}

bool is_abelian_cs(const LieAlgebra& alg, const AlmostComplexStructure& j)
{
    require_matching(alg, j);
    for (std::size_t a = 0; a < alg.dim(); ++a)
        for (std::size_t b = a + 1; b < alg.dim(); ++b) {
            const RatVector ea = alg.basis_vector(a), eb = alg.basis_vector(b);
            if (alg.bracket(j(ea), j(eb)) != alg.bracket(ea, eb))
                return false;
        }
    return true;
}

std::vector<Form> closed_two_forms(const LieAlgebra& alg)
{
    const lie::OddAlgebra ce = lie::ce_algebra(alg);
    std::vector<Form> out;
    for (const auto& v : linalg::kernel_basis(ce.differential_matrix(2)))
        out.push_back(ce.from_vector(v, 2));
    return out;
}

bool is_closed(const LieAlgebra& alg, const Form& f) { return lie::ce_algebra(alg).d(f).is_zero(); }

Rational pfaffian(const Form& omega)
{
    for (const auto& [m, c] : omega.terms())
        if (m >= (lie::Monomial{1} << 4) || lie::factors(m).size() != 2)
            throw std::invalid_argument("pfaffian: expected a 2-form on four generators");
    auto w = [&](std::size_t i, std::size_t j) { return omega.coefficient(pair(i, j)); };
    return w(0, 1) * w(2, 3) - w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2);
}

Rational top_coefficient_of_square(const Form& omega) { return wedge(omega, omega).coefficient(0b1111); }

SymplecticSearch invariant_symplectic(const LieAlgebra& alg)
{
    if (alg.dim() != 4)
        throw std::invalid_argument("invariant_symplectic: the algebra must have dimension 4");
    SymplecticSearch out;
    out.closed_basis = closed_two_forms(alg);
    const auto& b = out.closed_basis;
    const std::size_t m = b.size();
    out.pfaffian_form = RatMatrix(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a; c < m; ++c) {
            if (a == c) {
                out.pfaffian_form(a, a) = pfaffian(b[a]);
                continue;
            }
            const Rational cross = pfaffian(b[a] + b[c]) - pfaffian(b[a]) - pfaffian(b[c]);
            out.pfaffian_form(a, c) = cross / 2;
            out.pfaffian_form(c, a) = cross / 2;
        }

    std::optional<RatVector> point;
    for (std::size_t a = 0; a < m && !point; ++a)
        if (out.pfaffian_form(a, a) != 0) {
            point = RatVector(m, Rational(0));
            (*point)[a] = 1;
        }
    for (std::size_t a = 0; a < m && !point; ++a)
        for (std::size_t c = a + 1; c < m && !point; ++c)
            if (out.pfaffian_form(a, c) != 0) {
                // Diagonal entries vanish here, so Pf = 2 Q_ac.
                point = RatVector(m, Rational(0));
                (*point)[a] = 1;
                (*point)[c] = 1;
            }
    if (!point)
        return out;

    SymplecticWitness w;
    w.coefficients = *point;
    w.omega = combination(b, *point);
    w.top_coefficient = top_coefficient_of_square(w.omega);
    if (!is_closed(alg, w.omega) || w.top_coefficient == 0)
        throw std::logic_error("invariant_symplectic: witness failed its certificate");
    out.witness = std::move(w);
    return out;
}

bool pfaffian_vanishes_on_grid(const std::vector<Form>& closed_basis)
{
    const std::size_t m = closed_basis.size();
    std::vector<int> idx(m, 0);
    while (true) {
        RatVector c(m);
        for (std::size_t a = 0; a < m; ++a)
            c[a] = idx[a] - 1;
        if (pfaffian(combination(closed_basis, c)) != 0)
            return false;
        std::size_t a = 0;
        while (a < m && ++idx[a] == 3)
            idx[a++] = 0;
        if (a == m)
            return true;
    }
}

}  // namespace kodaira::geom
