#pragma once

#include "kodaira/cohomology.hpp"
#include "kodaira/oscillator.hpp"

#include <string>
#include <vector>

namespace kodaira::topo {

using lie::Form;
using lie::OddAlgebra;

/// Free CDGA on odd-degree generators. Construction checks d^2 = 0 and throws
/// lie::StructureError otherwise.
class OddCdga {
public:
    OddCdga(std::vector<std::string> names, std::vector<int> degrees, std::vector<Form> differential);

    const OddAlgebra& algebra() const { return cohomology_.algebra(); }
    const lie::GradedCohomology& cohomology() const { return cohomology_; }

private:
    lie::GradedCohomology cohomology_;
};

/// Sum of terms "[coefficient][*]monomial" joined by + or -; monomials are
/// generator names joined by '*'; "0" is the zero form, a bare coefficient a scalar.
Form parse_form(const std::string& text, const std::vector<std::string>& names);

/// Text format:
///   gen x1:1 y1:1 z1:1; d z1 = -x1*y1
/// Statements end at ';' or newline. Generators without a `d` line are closed.
OddCdga parse_cdga(const std::string& text);
std::string format_cdga(const OddCdga& m);

std::vector<std::size_t> cdga_cohomology(const OddCdga& m);

/// Lambda(x1, y1, z1, t1) with dz1 = -x1 y1.
OddCdga model_k0();
/// Lambda(t1, w3) with d = 0; models both the pi and pi/2 quotients.
OddCdga model_kpi();

/// The paper-style assignments into the (tau, alpha, beta, gamma) cochains:
/// t1, x1, y1, z1 -> tau, alpha, beta, gamma and t1, w3 -> tau, alpha beta gamma.
std::vector<Form> default_images(const OddCdga& m);

struct QuasiIsoReport {
    std::vector<std::size_t> model_betti;
    std::vector<std::size_t> target_betti;  // dimensions of the target cohomology (invariants for pi, pi/2)
    std::vector<std::size_t> image_rank;    // rank of H^p(model) -> H^p(target)
    bool images_invariant = true;
    bool passed() const;
};

/// Checks that the algebra map fixed by `images` (forms in the tau, alpha, beta,
/// gamma cochains) is a chain map into the complex computing H*(M_{k,i}) and
/// induces an isomorphism on cohomology. Throws std::domain_error when the map
/// does not commute with d, std::invalid_argument on degree or count mismatch.
QuasiIsoReport quasi_iso_check(const OddCdga& model, const std::vector<Form>& images, osc::Flavor target);

}  // namespace kodaira::topo
