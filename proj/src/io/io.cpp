#include "kodaira/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kodaira::io {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t index_from_json(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw std::invalid_argument(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

std::vector<std::string> strings_from_json(const json& j, const char* what)
{
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument(std::string(what) + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

json parse_json(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + origin + ": " + e.what());
    }
}

}  // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as a \"p/q\" string, got " + j.dump());
}

json vector_to_json(const RatVector& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(rational_to_json(x));
    return out;
}

RatVector vector_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rationals, got " + j.dump());
    RatVector out;
    for (const auto& e : j)
        out.push_back(rational_from_json(e));
    return out;
}

json matrix_to_json(const linalg::RatMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(vector_to_json(m.row(i)));
    return out;
}

linalg::RatMatrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a nonempty array of rows");
    std::vector<RatVector> rows;
    for (const auto& r : j)
        rows.push_back(vector_from_json(r));
    linalg::RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("matrix rows differ in length");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(i, c) = rows[i][c];
    }
    return m;
}

json algebra_to_json(const lie::LieAlgebra& alg)
{
    json brackets = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i + 1; j < alg.dim(); ++j) {
            const RatVector b = alg.bracket(i, j);
            bool zero = true;
            for (const auto& x : b)
                zero = zero && x == 0;
            if (!zero)
                brackets.push_back({{"i", i}, {"j", j}, {"coeffs", vector_to_json(b)}});
        }
    return {{"dim", alg.dim()}, {"labels", alg.labels()}, {"dual_labels", alg.dual_labels()}, {"brackets", brackets}};
}

lie::LieAlgebra algebra_from_json(const json& j)
{
    const std::size_t dim = index_from_json(field(j, "dim"), "dim");
    if (dim == 0 || dim > lie::kMaxGenerators)
        throw std::invalid_argument("dim must be between 1 and " + std::to_string(lie::kMaxGenerators));
    std::vector<std::string> labels, duals;
    if (j.contains("labels"))
        labels = strings_from_json(j.at("labels"), "labels");
    if (j.contains("dual_labels"))
        duals = strings_from_json(j.at("dual_labels"), "dual_labels");
    lie::LieAlgebra alg(dim, labels, duals);
    const json& brackets = j.contains("brackets") ? j.at("brackets") : json::array();
    if (!brackets.is_array())
        throw std::invalid_argument("brackets must be an array");
    std::vector<std::vector<bool>> seen(dim, std::vector<bool>(dim, false));
    for (const auto& b : brackets) {
        const std::size_t i = index_from_json(field(b, "i"), "bracket index i");
        const std::size_t k = index_from_json(field(b, "j"), "bracket index j");
        if (i >= dim || k >= dim)
            throw std::invalid_argument("bracket index out of range");
        if (seen[i][k])
            throw std::invalid_argument("bracket [" + std::to_string(i) + "," + std::to_string(k) + "] given twice");
        seen[i][k] = seen[k][i] = true;
        alg.set_bracket(i, k, vector_from_json(field(b, "coeffs")));
    }
    const auto violations = lie::validate(alg);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw lie::StructureError("Jacobi identity fails on basis triple (" + std::to_string(v.i) + "," +
                                  std::to_string(v.j) + "," + std::to_string(v.k) + ")");
    }
    return alg;
}

lie::LieAlgebra load_algebra(const std::string& name_or_path)
{
    try {
        return lie::builtin::by_name(name_or_path);
    } catch (const std::invalid_argument&) {
        if (!std::filesystem::exists(name_or_path))
            throw;
    }
    return algebra_from_json(parse_json(read_file(name_or_path), name_or_path));
}

json element_to_json(const osc::OscElement& g)
{
    json q = g.q.fits_slong_p() ? json(g.q.get_si()) : json(g.q.get_str());
    return {{"q", q}, {"x", to_string(g.x)}, {"y", to_string(g.y)}, {"z", to_string(g.z)}};
}

osc::OscElement element_from_json(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("element must be a JSON object {q, x, y, z}");
    osc::OscElement g;
    const json& q = field(j, "q");
    if (q.is_number_integer())
        g.q = Integer(std::to_string(q.get<long long>()));
    else if (q.is_string())
        g.q = parse_integer(q.get<std::string>());
    else
        throw std::invalid_argument("q must be an integer number of quarter turns");
    g.x = rational_from_json(field(j, "x"));
    g.y = rational_from_json(field(j, "y"));
    g.z = rational_from_json(field(j, "z"));
    return g;
}

osc::OscElement parse_element(const std::string& text)
{
    std::string t = text;
    const auto first = t.find_first_not_of(" \t");
    if (first != std::string::npos && t[first] == '{')
        return element_from_json(parse_json(t, "element"));
    for (char& ch : t)
        if (ch == '(' || ch == ')')
            ch = ' ';
    std::vector<std::string> parts(1);
    for (char ch : t) {
        if (ch == ',')
            parts.emplace_back();
        else
            parts.back() += ch;
    }
    if (parts.size() != 4)
        throw std::invalid_argument("element must be JSON or a tuple q,x,y,z: '" + text + "'");
    return {parse_integer(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3])};
}

geom::AlmostComplexStructure load_structure(const std::string& spec)
{
    if (spec == "builtin" || spec == "standard")
        return geom::standard_structure();
    if (spec == "swapped")
        return geom::swapped_structure();
    const auto first = spec.find_first_not_of(" \t");
    if (first != std::string::npos && spec[first] == '[')
        return geom::AlmostComplexStructure(matrix_from_json(parse_json(spec, "J")));
    return geom::AlmostComplexStructure(matrix_from_json(parse_json(read_file(spec), spec)));
}

json two_form_to_json(const lie::OddAlgebra& ce, const lie::Form& f)
{
    json monomials = json::array();
    for (auto m : ce.basis(2))
        monomials.push_back(ce.format(m));
    return {{"monomials", monomials}, {"coefficients", vector_to_json(ce.to_vector(f, 2))}, {"expression", ce.format(f)}};
}

}  // namespace kodaira::io
