#pragma once

#include "kodaira/geometry.hpp"
#include "kodaira/lie_algebra.hpp"
#include "kodaira/oscillator.hpp"

#include <json.hpp>

#include <string>

namespace kodaira::io {

using nlohmann::json;

/// Rationals travel as "p/q" strings; JSON integers are accepted on input.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vector_to_json(const RatVector& v);
RatVector vector_from_json(const json& j);

/// Row-major list of rows.
json matrix_to_json(const linalg::RatMatrix& m);
linalg::RatMatrix matrix_from_json(const json& j);

/// {"dim": n, "labels": [...], "dual_labels": [...]?, "brackets": [{"i", "j", "coeffs"}]}
json algebra_to_json(const lie::LieAlgebra& alg);
lie::LieAlgebra algebra_from_json(const json& j);

/// A builtin name, or a path to a JSON algebra file.
lie::LieAlgebra load_algebra(const std::string& name_or_path);

/// {"q": int, "x": "p/q", "y": "p/q", "z": "p/q"}
json element_to_json(const osc::OscElement& g);
osc::OscElement element_from_json(const json& j);
/// Parses JSON text, or a bare tuple "q,x,y,z" / "(q,x,y,z)".
osc::OscElement parse_element(const std::string& text);

/// "builtin", "swapped", a JSON matrix literal, or a path to a JSON matrix file.
geom::AlmostComplexStructure load_structure(const std::string& spec);

/// {"monomials": [...], "coefficients": [...], "expression": "..."} in the degree-2 basis.
json two_form_to_json(const lie::OddAlgebra& ce, const lie::Form& f);

/// Reads a whole file; throws std::invalid_argument when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace kodaira::io
