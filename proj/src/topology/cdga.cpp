#include "kodaira/cdga.hpp"

#include "kodaira/linalg.hpp"
#include "kodaira/topology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kodaira::topo {

using linalg::RatMatrix;
using lie::Monomial;

OddCdga::OddCdga(std::vector<std::string> names, std::vector<int> degrees, std::vector<Form> differential)
    : cohomology_(OddAlgebra(std::move(names), std::move(degrees), std::move(differential)))
{
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& seps)
{
    std::vector<std::string> out(1);
    for (char ch : s) {
        if (seps.find(ch) != std::string::npos)
            out.emplace_back();
        else
            out.back() += ch;
    }
    return out;
}

Form parse_term(const std::string& term, const std::vector<std::string>& names)
{
    Form out = Form::scalar(1);
    bool any = false;
    for (const auto& raw : split(term, "* \t")) {
        const std::string tok = trim(raw);
        if (tok.empty())
            continue;
        any = true;
        if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
            out = parse_rational(tok) * out;
            continue;
        }
        const auto it = std::find(names.begin(), names.end(), tok);
        if (it == names.end())
            throw std::invalid_argument("unknown generator '" + tok + "'");
        out = wedge(out, Form::generator(static_cast<std::size_t>(it - names.begin())));
    }
    if (!any)
        throw std::invalid_argument("empty term in form expression");
    return out;
}

}  // namespace

Form parse_form(const std::string& text, const std::vector<std::string>& names)
{
    const std::string body = trim(text);
    if (body.empty())
        throw std::invalid_argument("empty form expression");
    Form out;
    std::string current;
    int sign = 1;
    bool signed_term = false;  // a sign has been read for `current`
    for (char ch : body) {
        if (ch != '+' && ch != '-') {
            current += ch;
            continue;
        }
        if (!trim(current).empty()) {
            const Form term = parse_term(current, names);
            out += sign > 0 ? term : -term;
        } else if (signed_term) {
            throw std::invalid_argument("repeated sign in '" + body + "'");
        }
        current.clear();
        sign = ch == '-' ? -1 : 1;
        signed_term = true;
    }
    if (trim(current).empty())
        throw std::invalid_argument("dangling sign in '" + body + "'");
    const Form term = parse_term(current, names);
    out += sign > 0 ? term : -term;
    return out;
}

OddCdga parse_cdga(const std::string& text)
{
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::map<std::size_t, Form> diffs;
    bool have_gens = false;
    for (const auto& raw : split(text, ";\n")) {
        std::string stmt = raw;
        if (const auto hash = stmt.find('#'); hash != std::string::npos)
            stmt = stmt.substr(0, hash);
        stmt = trim(stmt);
        if (stmt.empty())
            continue;
        if (stmt.rfind("gen ", 0) == 0 || stmt == "gen") {
            if (have_gens)
                throw std::invalid_argument("cdga: 'gen' given twice");
            have_gens = true;
            std::istringstream in(stmt.substr(3));
            for (std::string tok; in >> tok;) {
                const auto colon = tok.find(':');
                if (colon == std::string::npos || colon == 0)
                    throw std::invalid_argument("cdga: generator '" + tok + "' must be written name:degree");
                const std::string name = tok.substr(0, colon);
                if (!std::isalpha(static_cast<unsigned char>(name[0])) ||
                    !std::all_of(name.begin(), name.end(),
                                 [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
                    throw std::invalid_argument("cdga: bad generator name '" + name + "'");
                if (std::find(names.begin(), names.end(), name) != names.end())
                    throw std::invalid_argument("cdga: duplicate generator '" + name + "'");
                int deg = 0;
                try {
                    std::size_t used = 0;
                    deg = std::stoi(tok.substr(colon + 1), &used);
                    if (used != tok.size() - colon - 1)
                        throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw std::invalid_argument("cdga: bad degree in '" + tok + "'");
                }
                names.push_back(name);
                degrees.push_back(deg);
            }
            continue;
        }
        if (stmt.rfind("d ", 0) == 0) {
            if (!have_gens)
                throw std::invalid_argument("cdga: 'd' before 'gen'");
            const auto eq = stmt.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("cdga: expected 'd name = expression' in '" + stmt + "'");
            const std::string name = trim(stmt.substr(2, eq - 2));
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end())
                throw std::invalid_argument("cdga: unknown generator '" + name + "'");
            const auto idx = static_cast<std::size_t>(it - names.begin());
            if (diffs.count(idx))
                throw std::invalid_argument("cdga: d " + name + " given twice");
            diffs[idx] = parse_form(stmt.substr(eq + 1), names);
            continue;
        }
        throw std::invalid_argument("cdga: unrecognized statement '" + stmt + "'");
    }
    if (!have_gens)
        throw std::invalid_argument("cdga: missing 'gen' statement");
    std::vector<Form> d(names.size());
    for (auto& [i, f] : diffs)
        d[i] = std::move(f);
    return OddCdga(std::move(names), std::move(degrees), std::move(d));
}

std::string format_cdga(const OddCdga& m)
{
    const auto& alg = m.algebra();
    std::string out = "gen";
    for (std::size_t i = 0; i < alg.generator_count(); ++i)
        out += ' ' + alg.names()[i] + ':' + std::to_string(alg.degrees()[i]);
    for (std::size_t i = 0; i < alg.generator_count(); ++i)
        out += "; d " + alg.names()[i] + " = " + alg.format(alg.differential_of(i));
    return out;
}

std::vector<std::size_t> cdga_cohomology(const OddCdga& m) { return m.cohomology().betti(); }

OddCdga model_k0() { return parse_cdga("gen x1:1 y1:1 z1:1 t1:1; d z1 = -x1*y1"); }

OddCdga model_kpi() { return parse_cdga("gen t1:1 w3:3"); }

std::vector<Form> default_images(const OddCdga& m)
{
    const std::vector<std::string> target{"tau", "alpha", "beta", "gamma"};
    const std::map<std::string, std::string> table{
        {"t1", "tau"}, {"x1", "alpha"}, {"y1", "beta"}, {"z1", "gamma"}, {"w3", "alpha*beta*gamma"}};
    std::vector<Form> out;
    for (const auto& n : m.algebra().names()) {
        const auto it = table.find(n);
        if (it == table.end())
            throw std::invalid_argument("default_images: no standard image for generator '" + n + "'");
        out.push_back(parse_form(it->second, target));
    }
    return out;
}

bool QuasiIsoReport::passed() const
{
    return images_invariant && model_betti == target_betti && image_rank == target_betti;
}

QuasiIsoReport quasi_iso_check(const OddCdga& model, const std::vector<Form>& images, osc::Flavor target)
{
    const auto& src = model.algebra();
    const auto& h = base_cohomology();
    const auto& dst = h.algebra();
    if (images.size() != src.generator_count())
        throw std::invalid_argument("quasi_iso_check: one image per model generator required");
    for (std::size_t g = 0; g < images.size(); ++g)
        for (const auto& [mono, c] : images[g].terms())
            if (dst.degree(mono) != src.degrees()[g])
                throw std::invalid_argument("quasi_iso_check: image of " + src.names()[g] + " has the wrong degree");
    for (std::size_t g = 0; g < images.size(); ++g) {
        const Form lhs = dst.d(images[g]);
        const Form rhs = lie::apply_algebra_map(images, src.differential_of(g));
        if (lhs != rhs)
            throw std::domain_error("quasi_iso_check: assignment is not a chain map at " + src.names()[g] + " (d of image " +
                                    dst.format(lhs) + ", image of d " + dst.format(rhs) + ")");
    }

    const bool invariant_target = target != osc::Flavor::Zero;
    const DeckAction action = invariant_target ? deck_action(target) : trivial_action();
    const int top = std::max(src.top_degree(), dst.top_degree());

    QuasiIsoReport rep;
    rep.model_betti = model.cohomology().betti();
    rep.model_betti.resize(static_cast<std::size_t>(top) + 1, 0);
    for (int p = 0; p <= top; ++p) {
        if (p > dst.top_degree()) {
            rep.target_betti.push_back(0);
            rep.image_rank.push_back(0);
            continue;
        }
        const RatMatrix proj = averaging_projector(induced_action(action, p), action.order);
        rep.target_betti.push_back(linalg::rank(proj));
        std::vector<RatVector> classes;
        if (p <= src.top_degree())
            for (const auto& f : model.cohomology().representative_forms(p)) {
                const RatVector c = h.class_coordinates(p, dst.to_vector(lie::apply_algebra_map(images, f), p));
                if (proj.apply(c) != c)
                    rep.images_invariant = false;
                classes.push_back(c);
            }
        rep.image_rank.push_back(classes.empty() ? 0 : linalg::rank(RatMatrix::from_columns(classes, h.betti(p))));
    }
    return rep;
}

}  // namespace kodaira::topo
