#pragma once

#include "kodaira/cohomology.hpp"
#include "kodaira/oscillator.hpp"

#include <vector>

namespace kodaira::topo {

using lie::GradedCohomology;

/// H*(M_{k,0}) as the Chevalley-Eilenberg cohomology of t x h3, cochains
/// generated by tau, alpha, beta, gamma. Independent of k.
const GradedCohomology& base_cohomology();

/// Action of the deck generator on degree-1 cochains (tau, alpha, beta, gamma);
/// column j is the image of generator j.
struct DeckAction {
    int order = 1;
    linalg::RatMatrix gen_matrix = linalg::RatMatrix::identity(4);
};

DeckAction trivial_action();

/// 1 + (contragredient of the rotation by pi or pi/2 on (alpha, beta)) + 1.
/// Throws std::invalid_argument for Flavor::Zero.
DeckAction deck_action(osc::Flavor flavor);

/// gen_matrix^order = I and the induced algebra automorphism commutes with d in every degree.
bool is_valid_action(const DeckAction& a);

/// The algebra automorphism on A^p (monomial basis), before passing to cohomology.
linalg::RatMatrix cochain_action(const DeckAction& a, int p);

/// Matrix on H^p in the representative basis of base_cohomology().
linalg::RatMatrix induced_action(const DeckAction& a, int p);

/// (1/n) sum_{i<n} m^i.
linalg::RatMatrix averaging_projector(const linalg::RatMatrix& m, int order);

/// Dimensions of the fixed subspaces of H^0 .. H^4.
std::vector<std::size_t> invariant_betti(const DeckAction& a);

/// Betti numbers of M_{k,i}: base cohomology for Zero, deck invariants otherwise.
std::vector<std::size_t> solvmanifold_betti(const osc::LatticeId& lattice);

/// b_p = b_{4-p} and the alternating sum vanishes. Throws std::invalid_argument unless length 5.
bool duality_checks(const std::vector<std::size_t>& betti);

}  // namespace kodaira::topo
