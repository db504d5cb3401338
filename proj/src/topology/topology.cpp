#include "kodaira/topology.hpp"

#include "kodaira/lie_algebra.hpp"
#include "kodaira/linalg.hpp"

#include <stdexcept>

namespace kodaira::topo {

using linalg::RatMatrix;
using lie::Form;

namespace {

std::vector<Form> generator_images(const DeckAction& a)
{
    std::vector<Form> out;
    for (std::size_t j = 0; j < 4; ++j) {
        Form f;
        for (std::size_t i = 0; i < 4; ++i)
            f.add_term(lie::Monomial{1} << i, a.gen_matrix(i, j));
        out.push_back(f);
    }
    return out;
}

}  // namespace

const GradedCohomology& base_cohomology()
{
    static const GradedCohomology h = lie::ce_cohomology(lie::builtin::line_times_heisenberg());
    return h;
}

DeckAction trivial_action() { return {}; }

DeckAction deck_action(osc::Flavor flavor)
{
    if (flavor == osc::Flavor::Zero)
        throw std::invalid_argument("deck_action: Lambda_{k,0} is the base; there is no deck group");
    const int period = osc::angle_period(flavor);
    // Covectors transform by the inverse transpose of the rotation.
    DeckAction a;
    a.order = 4 / period;
    a.gen_matrix = RatMatrix::identity(4);
    const osc::Rotation back = osc::rotation(-period);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            a.gen_matrix(1 + i, 1 + j) = back[j][i];
    return a;
}

bool is_valid_action(const DeckAction& a)
{
    if (a.order < 1 || a.gen_matrix.rows() != 4 || a.gen_matrix.cols() != 4)
        return false;
    RatMatrix p = RatMatrix::identity(4);
    for (int i = 0; i < a.order; ++i)
        p = p * a.gen_matrix;
    if (p != RatMatrix::identity(4))
        return false;
    const auto& h = base_cohomology();
    for (int deg = 0; deg < 4; ++deg)
        if (h.differential(deg) * cochain_action(a, deg) != cochain_action(a, deg + 1) * h.differential(deg))
            return false;
    return true;
}

RatMatrix cochain_action(const DeckAction& a, int p)
{
    const auto& alg = base_cohomology().algebra();
    return lie::induced_map(alg, alg, generator_images(a), p);
}

RatMatrix induced_action(const DeckAction& a, int p)
{
    const auto& h = base_cohomology();
    if (p < 0 || p > h.top_degree())
        throw std::out_of_range("induced_action: degree " + std::to_string(p) + " outside 0..4");
    const RatMatrix c = cochain_action(a, p);
    const auto& reps = h.representatives(p);
    std::vector<RatVector> cols;
    for (const auto& r : reps)
        cols.push_back(h.class_coordinates(p, c.apply(r)));
    return RatMatrix::from_columns(cols, reps.size());
}

RatMatrix averaging_projector(const RatMatrix& m, int order)
{
    if (order < 1 || m.rows() != m.cols())
        throw std::invalid_argument("averaging_projector: need a square matrix and order >= 1");
    RatMatrix sum(m.rows(), m.cols());
    RatMatrix power = RatMatrix::identity(m.rows());
    for (int i = 0; i < order; ++i) {
        sum = sum + power;
        power = power * m;
    }
    return sum.scaled(Rational(1, static_cast<unsigned long>(order)));
}

std::vector<std::size_t> invariant_betti(const DeckAction& a)
{
    std::vector<std::size_t> out;
    for (int p = 0; p <= base_cohomology().top_degree(); ++p)
        out.push_back(linalg::rank(averaging_projector(induced_action(a, p), a.order)));
    return out;
}

std::vector<std::size_t> solvmanifold_betti(const osc::LatticeId& lattice)
{
    if (lattice.flavor == osc::Flavor::Zero)
        return base_cohomology().betti();
    return invariant_betti(deck_action(lattice.flavor));
}

bool duality_checks(const std::vector<std::size_t>& betti)
{
    if (betti.size() != 5)
        throw std::invalid_argument("duality_checks: expected 5 Betti numbers, got " + std::to_string(betti.size()));
    long euler = 0;
    for (std::size_t p = 0; p < 5; ++p) {
        if (betti[p] != betti[4 - p])
            return false;
        euler += (p % 2 == 0 ? 1 : -1) * static_cast<long>(betti[p]);
    }
    return euler == 0;
}

}  // namespace kodaira::topo
