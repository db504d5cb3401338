// kodaira-lab: command-line front end. Exit status 0 = every check passed,
// 1 = a property check failed, 2 = usage or input error.

#include "kodaira/cdga.hpp"
#include "kodaira/classification.hpp"
#include "kodaira/geometry.hpp"
#include "kodaira/io.hpp"
#include "kodaira/lie_algebra.hpp"
#include "kodaira/presentation.hpp"
#include "kodaira/topology.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace kodaira;
using io::json;
using osc::Flavor;
using osc::LatticeId;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 20240229;

using Table = std::vector<std::vector<std::string>>;

struct Outcome {
    json inputs = json::object();
    json results = json::object();
    bool pass = true;
    std::string text;
    Table csv;  // header row first; empty means "flatten results"
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::size_t>& v, const std::string& sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string scalar_text(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_array()) {
        std::string out;
        for (const auto& e : j)
            out += (out.empty() ? "" : " ") + scalar_text(e);
        return out;
    }
    return j.dump();
}

void flatten(const json& j, const std::string& prefix, Table& rows)
{
    const bool leaf_array = j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array() && !leaf_array) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "." + std::to_string(i), rows);
    } else {
        rows.push_back({prefix, scalar_text(j)});
    }
}

Flavor flavor_arg(const std::string& s)
{
    try {
        return osc::parse_flavor(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

LatticeId lattice_arg(std::int64_t k, const std::string& flavor) { return LatticeId(k, flavor_arg(flavor)); }

std::uint64_t seed_from_env()
{
    const char* raw = std::getenv("KODAIRA_LAB_SEED");
    if (raw == nullptr || *raw == '\0')
        return kDefaultSeed;
    const std::string s(raw);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 20)
        throw UsageError("KODAIRA_LAB_SEED must be a nonnegative integer, got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw UsageError("KODAIRA_LAB_SEED out of range: '" + s + "'");
    }
}

std::string manifold_name(Flavor f)
{
    switch (f) {
    case Flavor::Zero:
        return "M_{k,0}";
    case Flavor::Pi:
        return "M_{k,pi}";
    default:
        return "M_{k,pi/2}";
    }
}

// ---- betti ---------------------------------------------------------------

Outcome betti_lie(const std::string& target)
{
    Outcome o;
    const auto alg = io::load_algebra(target);
    const auto h = lie::ce_cohomology(alg);
    const auto b = h.betti();
    o.inputs = {{"algebra", target}};
    json reps = json::array();
    for (int p = 0; p <= h.top_degree(); ++p) {
        json row = json::array();
        for (const auto& f : h.representative_forms(p))
            row.push_back(h.algebra().format(f));
        reps.push_back(row);
    }
    long euler = 0;
    for (std::size_t p = 0; p < b.size(); ++p)
        euler += (p % 2 ? -1 : 1) * static_cast<long>(b[p]);
    o.results = {{"betti", b}, {"euler_characteristic", euler}, {"representatives", reps}};
    o.text = join(b) + "\n";
    o.csv = {{"degree", "betti"}};
    for (std::size_t p = 0; p < b.size(); ++p)
        o.csv.push_back({std::to_string(p), std::to_string(b[p])});
    return o;
}

Outcome betti_solvmanifold(std::int64_t k, const std::string& flavor, bool table)
{
    Outcome o;
    const LatticeId id = lattice_arg(k, flavor);
    o.inputs = {{"k", k}, {"flavor", osc::flavor_name(id.flavor)}, {"table", table}};
    const auto b = topo::solvmanifold_betti(id);
    const bool dual = topo::duality_checks(b);
    o.results = {{"lattice", osc::to_string(id)}, {"betti", b}, {"duality", dual}};
    o.pass = dual;
    o.text = join(b) + "\n";
    o.csv = {{"manifold", "b0", "b1", "b2", "b3", "b4"}};
    auto csv_row = [](const std::string& name, const std::vector<std::size_t>& v) {
        std::vector<std::string> row{name};
        for (auto x : v)
            row.push_back(std::to_string(x));
        return row;
    };
    if (!table) {
        o.csv.push_back(csv_row(osc::to_string(id), b));
        return o;
    }
    json rows = json::array();
    std::ostringstream txt;
    txt << "manifold     b0 b1 b2 b3 b4  duality\n";
    for (Flavor f : {Flavor::Zero, Flavor::Pi, Flavor::PiHalf}) {
        const auto row = topo::solvmanifold_betti(LatticeId(k, f));
        const bool ok = topo::duality_checks(row);
        // The table does not depend on k; confirm against k = 1.
        const bool k_independent = row == topo::solvmanifold_betti(LatticeId(1, f));
        o.pass = o.pass && ok && k_independent;
        rows.push_back({{"manifold", manifold_name(f)}, {"betti", row}, {"duality", ok}, {"k_independent", k_independent}});
        std::string name = manifold_name(f);
        name.resize(12, ' ');
        txt << name << ' ';
        for (auto x : row)
            txt << ' ' << x << ' ';
        txt << ' ' << yes_no(ok) << '\n';
        o.csv.push_back(csv_row(manifold_name(f), row));
    }
    o.results["table"] = rows;
    o.text = txt.str();
    return o;
}

// ---- lattice -------------------------------------------------------------

Outcome lattice_verify(std::int64_t k, const std::string& flavor, long bound)
{
    Outcome o;
    const LatticeId id = lattice_arg(k, flavor);
    o.inputs = {{"k", k}, {"flavor", osc::flavor_name(id.flavor)}, {"bound", bound}};
    if (bound < 1)
        throw UsageError("--bound must be >= 1");
    bool gens_in = true;
    json gens = json::array();
    for (const auto& g : osc::generators(id)) {
        gens_in = gens_in && osc::contains(id, g);
        gens.push_back(io::element_to_json(g));
    }
    const bool closed = osc::closure_box_check(id, bound);
    const auto pres = fp::verify_presentation(id, bound);
    o.results = {{"lattice", osc::to_string(id)},
                 {"generators", gens},
                 {"generators_contained", gens_in},
                 {"box_closed", closed},
                 {"presentation", fp::format_presentation(fp::builtin_presentation(id))},
                 {"relators_hold", pres.failing_relators.empty()},
                 {"normal_forms_checked", pres.box_elements_checked},
                 {"normal_form_failures", pres.normal_form_failures}};
    o.pass = gens_in && closed && pres.passed();
    o.text = osc::to_string(id) + ": generators " + yes_no(gens_in) + ", closure " + yes_no(closed) +
             ", relators " + yes_no(pres.failing_relators.empty()) + ", normal forms " +
             std::to_string(pres.box_elements_checked - pres.normal_form_failures) + "/" +
             std::to_string(pres.box_elements_checked) + "\n";
    return o;
}

Outcome lattice_center(std::int64_t k, const std::string& flavor, long bound)
{
    Outcome o;
    const LatticeId id = lattice_arg(k, flavor);
    o.inputs = {{"k", k}, {"flavor", osc::flavor_name(id.flavor)}, {"bound", bound}};
    if (bound < 1)
        throw UsageError("--bound must be >= 1");
    const bool ok = osc::center_box_check(id, bound);
    const auto gens = osc::generators(id);
    const osc::OscElement central = osc::make_element(4, 0, 0, gens[3].z);
    o.results = {{"lattice", osc::to_string(id)},
                 {"center", "{(4m, 0, 0, z)} = Z_k"},
                 {"box_elements", osc::box_elements(id, bound).size()},
                 {"center_matches", ok},
                 {"sample_central", io::element_to_json(central)}};
    o.pass = ok;
    o.text = "center of " + osc::to_string(id) + " on box " + std::to_string(bound) + ": " + (ok ? "pass" : "FAIL") + "\n";
    return o;
}

Outcome lattice_commutator(std::int64_t k, long bound)
{
    Outcome o;
    o.inputs = {{"k", k}, {"bound", bound}};
    if (bound < 1)
        throw UsageError("--bound must be >= 1");
    const LatticeId id(k, Flavor::Zero);
    const auto g = osc::generators(id);
    const auto ab = osc::commutator(g[1], g[2]);
    const bool exact = ab == osc::make_element(0, 0, 0, 1);
    const bool ok = osc::commutator_box_check(k, bound);
    o.results = {{"lattice", osc::to_string(id)}, {"commutator_a_b", io::element_to_json(ab)},
                 {"commutator_a_b_is_unit", exact}, {"commutators_in_C", ok}};
    o.pass = ok && exact;
    o.text = "[a,b] = " + osc::to_string(ab) + "\ncommutators of " + osc::to_string(id) + " on box " +
             std::to_string(bound) + " lie in C and reach (0,0,0,1): " + (ok ? "pass" : "FAIL") + "\n";
    return o;
}

Outcome lattice_index(std::int64_t k, const std::string& from, const std::string& to, long bound)
{
    Outcome o;
    const LatticeId sub = lattice_arg(k, from), super = lattice_arg(k, to);
    o.inputs = {{"k", k}, {"from", osc::flavor_name(sub.flavor)}, {"to", osc::flavor_name(super.flavor)}, {"bound", bound}};
    long index = 0;
    try {
        index = osc::covering_index(sub, super);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bool normal = osc::normality_check(sub, super, bound);
    o.results = {{"sub", osc::to_string(sub)}, {"super", osc::to_string(super)}, {"index", index}, {"normal", normal}};
    o.pass = normal;
    o.text = "[" + osc::to_string(super) + " : " + osc::to_string(sub) + "] = " + std::to_string(index) +
             ", normal: " + yes_no(normal) + "\n";
    return o;
}

Outcome lattice_normal(std::int64_t k, const std::string& flavor, const std::string& element)
{
    Outcome o;
    const LatticeId id = lattice_arg(k, flavor);
    const auto g = io::parse_element(element);
    o.inputs = {{"k", k}, {"flavor", osc::flavor_name(id.flavor)}, {"element", io::element_to_json(g)}};
    const auto nf = osc::normal_form(id, g);
    const bool round_trip = osc::evaluate_normal_form(id, nf) == g;
    o.results = {{"m", nf.m.get_str()}, {"x", nf.x.get_str()}, {"y", nf.y.get_str()}, {"j", nf.j.get_str()},
                 {"word", "s^" + nf.m.get_str() + " a^" + nf.x.get_str() + " b^" + nf.y.get_str() + " c^" + nf.j.get_str()},
                 {"round_trip", round_trip}};
    o.pass = round_trip;
    o.text = "(" + nf.m.get_str() + ", " + nf.x.get_str() + ", " + nf.y.get_str() + ", " + nf.j.get_str() + ")\n";
    return o;
}

std::string reason_name(osc::ClassificationError::Reason r)
{
    switch (r) {
    case osc::ClassificationError::Reason::NotCompact:
        return "not_compact";
    case osc::ClassificationError::Reason::NotALattice:
        return "not_a_lattice";
    default:
        return "scales_must_agree";
    }
}

Outcome lattice_classify(const std::string& l, const std::string& q, const std::string& r, std::int64_t k)
{
    Outcome o;
    const Integer li = parse_integer(l);
    const Rational qr = parse_rational(q), rr = parse_rational(r);
    o.inputs = {{"l", li.get_str()}, {"q", to_string(qr)}, {"r", to_string(rr)}, {"k", k}};
    try {
        const auto c = osc::classify_product_lattice(li, qr, rr, k);
        o.results = {{"lattice", osc::to_string(c.lattice)},
                     {"flavor", osc::flavor_name(c.lattice.flavor)},
                     {"map", c.map_name},
                     {"description", c.description()},
                     {"isomorphism", c.iso.describe()},
                     {"homomorphism_verified", c.homomorphism_verified},
                     {"image_verified", c.image_verified},
                     {"preimage_verified", c.preimage_verified}};
        o.pass = c.verified();
        o.text = c.description() + "\n" + c.iso.describe() + "\n";
    } catch (const osc::ClassificationError& e) {
        throw UsageError(std::string("rejected (") + reason_name(e.reason()) + "): " + e.what());
    }
    return o;
}

Outcome lattice_exotic(long bound)
{
    Outcome o;
    o.inputs = {{"bound", bound}};
    if (bound < 1)
        throw UsageError("--bound must be >= 1");
    const auto rep = osc::exotic_lattice_check(bound);
    json gens = json::array();
    for (const auto& g : osc::exotic_generators())
        gens.push_back(io::element_to_json(g));
    o.results = {{"generators", gens},
                 {"map", osc::exotic_map().describe()},
                 {"target", osc::to_string(LatticeId(2, Flavor::Pi))},
                 {"closed", rep.closed},
                 {"homomorphism", rep.homomorphism},
                 {"injective", rep.injective},
                 {"image_index_lower_bound", rep.image_index_lower_bound}};
    o.pass = rep.passed();
    o.text = "closed " + yes_no(rep.closed) + ", homomorphism " + yes_no(rep.homomorphism) + ", injective " +
             yes_no(rep.injective) + "\nimage meets " + std::to_string(rep.image_index_lower_bound) +
             " coset(s) of the box in " + osc::to_string(LatticeId(2, Flavor::Pi)) + "\n";
    return o;
}

// ---- group ---------------------------------------------------------------

Outcome group_op(const std::string& op, const std::vector<std::string>& args)
{
    Outcome o;
    const std::size_t arity = op == "inv" ? 1 : 2;
    if (args.size() != arity)
        throw UsageError("group " + op + " takes " + std::to_string(arity) + " element(s)");
    std::vector<osc::OscElement> el;
    json in = json::array();
    for (const auto& a : args) {
        el.push_back(io::parse_element(a));
        in.push_back(io::element_to_json(el.back()));
    }
    o.inputs = {{"elements", in}};
    osc::OscElement r;
    if (op == "mul")
        r = osc::mul(el[0], el[1]);
    else if (op == "inv")
        r = osc::inv(el[0]);
    else
        r = osc::commutator(el[0], el[1]);
    o.results = {{"result", io::element_to_json(r)}};
    o.text = io::element_to_json(r).dump() + "\n";
    return o;
}

// ---- invariants ----------------------------------------------------------

Outcome invariants_abelianization(std::optional<std::int64_t> k, const std::string& flavor, const std::string& text)
{
    Outcome o;
    fp::Presentation p;
    if (!text.empty()) {
        o.inputs = {{"presentation", text}};
        std::string body = text;
        if (body.find("gens:") == std::string::npos)
            body = io::read_file(text);
        p = fp::parse_presentation(body);
    } else {
        if (!k)
            throw UsageError("abelianization needs --k and --flavor, or --presentation");
        const LatticeId id = lattice_arg(*k, flavor);
        o.inputs = {{"k", *k}, {"flavor", osc::flavor_name(id.flavor)}};
        p = fp::builtin_presentation(id);
        const auto check = fp::verify_presentation(id, 1);
        o.results["presentation_verified"] = check.passed();
        o.pass = check.passed();
    }
    const auto a = fp::abelianization(p);
    json torsion = json::array();
    for (const auto& t : a.torsion)
        torsion.push_back(t.fits_slong_p() ? json(t.get_si()) : json(t.get_str()));
    o.results["presentation"] = fp::format_presentation(p);
    o.results["free_rank"] = a.free_rank;
    o.results["torsion"] = torsion;
    o.results["group"] = a.to_string();
    o.text = "rank " + std::to_string(a.free_rank) + ", torsion " + scalar_text(torsion) + "  (" + a.to_string() + ")\n";
    return o;
}

Outcome invariants_distinguish(std::int64_t kmax)
{
    Outcome o;
    o.inputs = {{"kmax", kmax}};
    if (kmax < 2)
        throw UsageError("--kmax must be >= 2");
    const auto rep = fp::distinguish_all(kmax);
    json rows = json::array();
    o.csv = {{"lattice", "free_rank", "torsion"}};
    std::ostringstream txt;
    for (const auto& r : rep.rows) {
        json torsion = json::array();
        for (const auto& t : r.invariants.torsion)
            torsion.push_back(t.get_si());
        rows.push_back({{"lattice", osc::to_string(r.lattice)}, {"free_rank", r.invariants.free_rank}, {"torsion", torsion}});
        o.csv.push_back({osc::to_string(r.lattice), std::to_string(r.invariants.free_rank), scalar_text(torsion)});
        txt << osc::to_string(r.lattice) << "  " << r.invariants.to_string() << '\n';
    }
    o.results = {{"rows", rows}, {"count", rep.rows.size()}, {"collisions", rep.collisions.size()},
                 {"pairwise_distinct", rep.pairwise_distinct()}};
    o.pass = rep.pairwise_distinct();
    txt << rep.rows.size() << " lattices, " << (rep.pairwise_distinct() ? "pairwise distinct" : "COLLISIONS FOUND") << '\n';
    o.text = txt.str();
    return o;
}

// ---- geometry ------------------------------------------------------------

Outcome geometry_nijenhuis(const std::string& alg_name, const std::string& j_spec)
{
    Outcome o;
    const auto alg = io::load_algebra(alg_name);
    const auto j = io::load_structure(j_spec);
    o.inputs = {{"alg", alg_name}, {"J", io::matrix_to_json(j.matrix())}};
    json table = json::array();
    std::ostringstream txt;
    bool zero = true;
    for (const auto& e : geom::nijenhuis_table(alg, j)) {
        bool this_zero = std::all_of(e.value.begin(), e.value.end(), [](const Rational& x) { return x == 0; });
        zero = zero && this_zero;
        table.push_back({{"i", alg.labels()[e.i]}, {"j", alg.labels()[e.j]}, {"value", io::vector_to_json(e.value)}});
        if (!this_zero)
            txt << "N(" << alg.labels()[e.i] << ", " << alg.labels()[e.j] << ") = " << scalar_text(io::vector_to_json(e.value)) << '\n';
    }
    o.results = {{"integrable", zero}, {"table", table}};
    txt << "integrable: " << yes_no(zero) << '\n';
    o.text = txt.str();
    return o;
}

Outcome geometry_abelian(const std::string& alg_name, const std::string& j_spec)
{
    Outcome o;
    const auto alg = io::load_algebra(alg_name);
    const auto j = io::load_structure(j_spec);
    o.inputs = {{"alg", alg_name}, {"J", io::matrix_to_json(j.matrix())}};
    const bool abelian = geom::is_abelian_cs(alg, j);
    const bool integrable = geom::is_integrable(alg, j);
    o.results = {{"abelian", abelian}, {"integrable", integrable}};
    // abelian complex structures are integrable
    o.pass = !abelian || integrable;
    o.text = std::string(abelian ? "true" : "false") + "\n";
    return o;
}

Outcome geometry_symplectic(const std::string& alg_name)
{
    Outcome o;
    const auto alg = io::load_algebra(alg_name);
    o.inputs = {{"alg", alg_name}};
    const auto s = geom::invariant_symplectic(alg);
    const auto ce = lie::ce_algebra(alg);
    json basis = json::array();
    for (const auto& f : s.closed_basis)
        basis.push_back(ce.format(f));
    const bool grid_zero = geom::pfaffian_vanishes_on_grid(s.closed_basis);
    const bool agree = grid_zero == !s.witness.has_value();
    o.results = {{"closed_basis", basis}, {"pfaffian_form", io::matrix_to_json(s.pfaffian_form)}, {"grid_cross_check", agree}};
    if (s.witness) {
        const auto& w = *s.witness;
        const bool closed = geom::is_closed(alg, w.omega);
        json wj = io::two_form_to_json(ce, w.omega);
        wj["closed"] = closed;
        wj["top_coefficient_of_square"] = io::rational_to_json(w.top_coefficient);
        o.results["witness"] = wj;
        const auto g = lie::builtin::oscillator();
        if (alg.dim() == 4 && !(alg == g))
            o.results["closed_in_oscillator"] = geom::is_closed(g, w.omega);
        o.pass = agree && closed && w.top_coefficient != 0;
        o.text = ce.format(w.omega) + "\n(d omega = 0, omega^2 = " + to_string(w.top_coefficient) + " * top form)\n";
    } else {
        o.results["witness"] = nullptr;
        o.pass = agree;
        o.text = "none\n";
    }
    return o;
}

// ---- lie info / model ----------------------------------------------------

Outcome lie_info(const std::string& target)
{
    Outcome o;
    const auto alg = io::load_algebra(target);
    const std::uint64_t seed = seed_from_env();
    o.inputs = {{"algebra", target}, {"seed", seed}};
    const auto witness = lie::completely_solvable_witness(alg, lie::default_trial_vectors(alg, seed));
    const bool jacobi = lie::validate(alg).empty();
    o.results = {{"dim", alg.dim()},
                 {"definition", io::algebra_to_json(alg)},
                 {"jacobi", jacobi},
                 {"unimodular", lie::is_unimodular(alg)},
                 {"betti", lie::betti(alg)}};
    std::ostringstream txt;
    txt << "dim " << alg.dim() << ", unimodular " << yes_no(lie::is_unimodular(alg)) << ", betti " << join(lie::betti(alg)) << '\n';
    if (witness) {
        o.results["not_completely_solvable_witness"] = {
            {"vector", io::vector_to_json(witness->vector)},
            {"characteristic_polynomial", witness->characteristic.to_string('t')},
            {"distinct_roots", witness->distinct_roots},
            {"distinct_real_roots", witness->distinct_real_roots}};
        txt << "ad(" << scalar_text(io::vector_to_json(witness->vector)) << ") has characteristic polynomial "
            << witness->characteristic.to_string('t') << " with " << witness->distinct_real_roots << " of "
            << witness->distinct_roots << " distinct roots real: not completely solvable\n";
    } else {
        o.results["not_completely_solvable_witness"] = nullptr;
        txt << "no trial vector has non-real eigenvalues (inconclusive)\n";
    }
    o.pass = jacobi;
    o.text = txt.str();
    return o;
}

std::vector<lie::Form> parse_images(const topo::OddCdga& m, const std::string& text)
{
    const std::vector<std::string> target{"tau", "alpha", "beta", "gamma"};
    const auto& names = m.algebra().names();
    std::vector<std::optional<lie::Form>> images(names.size());
    std::string stmt;
    std::istringstream in(text);
    while (std::getline(in, stmt, ';')) {
        const auto eq = stmt.find('=');
        if (stmt.find_first_not_of(" \t\n") == std::string::npos)
            continue;
        if (eq == std::string::npos)
            throw UsageError("--images expects 'gen = form; ...'");
        std::string name = stmt.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t\n"));
        name.erase(name.find_last_not_of(" \t\n") + 1);
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw UsageError("--images: unknown model generator '" + name + "'");
        images[static_cast<std::size_t>(it - names.begin())] = topo::parse_form(stmt.substr(eq + 1), target);
    }
    std::vector<lie::Form> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!images[i])
            throw UsageError("--images: no image for generator '" + names[i] + "'");
        out.push_back(*images[i]);
    }
    return out;
}

Outcome model_cmd(const std::string& name, const std::string& file, const std::string& target, const std::string& images_text)
{
    Outcome o;
    std::optional<topo::OddCdga> m;
    std::string default_target = "0";
    if (!file.empty()) {
        const std::string body = file.find("gen") != std::string::npos && file.find(':') != std::string::npos
                                     ? file
                                     : io::read_file(file);
        m.emplace(topo::parse_cdga(body));
    } else if (name == "m_k0") {
        m.emplace(topo::model_k0());
    } else if (name == "m_kpi") {
        m.emplace(topo::model_kpi());
        default_target = "pi";
    } else {
        throw UsageError("model: --name must be m_k0 or m_kpi (or give --cdga)");
    }
    const Flavor flavor = flavor_arg(target.empty() ? default_target : target);
    const auto images = images_text.empty() ? topo::default_images(*m) : parse_images(*m, images_text);
    const auto& ce = topo::base_cohomology().algebra();
    json imgs = json::object();
    for (std::size_t i = 0; i < images.size(); ++i)
        imgs[m->algebra().names()[i]] = ce.format(images[i]);
    o.inputs = {{"model", topo::format_cdga(*m)}, {"target", osc::flavor_name(flavor)}, {"images", imgs}};
    const auto rep = topo::quasi_iso_check(*m, images, flavor);
    o.results = {{"model_betti", rep.model_betti},
                 {"target_betti", rep.target_betti},
                 {"image_rank", rep.image_rank},
                 {"images_invariant", rep.images_invariant},
                 {"quasi_isomorphism", rep.passed()}};
    o.pass = rep.passed();
    o.text = "model betti  " + join(rep.model_betti) + "\ntarget betti " + join(rep.target_betti) + "\nimage rank   " +
             join(rep.image_rank) + "\nquasi-isomorphism: " + yes_no(rep.passed()) + "\n";
    return o;
}

// ---- output --------------------------------------------------------------

void emit(const Outcome& o, const std::string& command, const std::vector<std::string>& argv, double ms, bool as_json,
          bool as_csv)
{
    if (as_json) {
        json report = {{"command", command}, {"argv", argv},   {"inputs", o.inputs},
                       {"results", o.results}, {"pass", o.pass}, {"timing_ms", ms}};
        std::cout << report.dump(2) << '\n';
        return;
    }
    if (as_csv) {
        Table rows = o.csv;
        if (rows.empty()) {
            rows.push_back({"key", "value"});
            flatten(o.results, "", rows);
        }
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                std::cout << (i ? "," : "") << csv_escape(r[i]);
            std::cout << '\n';
        }
        return;
    }
    std::cout << o.text;
    if (!o.pass)
        std::cout << "FAIL\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for the oscillator group, its lattices and solvmanifolds"};
    app.require_subcommand(1);
    bool as_json = false, as_csv = false;
    auto* json_flag = app.add_flag("--json", as_json, "Print a JSON report")->configurable(false);
    app.add_flag("--csv", as_csv, "Print CSV (tables, or key,value rows)")->excludes(json_flag);

    std::function<Outcome()> run;
    std::string command;
    auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
        sub->callback([&run, &command, name = std::move(name), fn = std::move(fn)] {
            command = name;
            run = fn;
        });
    };
    // Global flags are accepted after the subcommand too.
    auto globals = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "Print a JSON report");
        sub->add_flag("--csv", as_csv, "Print CSV");
    };

    // betti
    auto* betti = app.add_subcommand("betti", "Betti numbers")->require_subcommand(1);
    std::string alg_target;
    auto* betti_lie_cmd = betti->add_subcommand("lie", "Chevalley-Eilenberg Betti numbers of a Lie algebra");
    betti_lie_cmd->add_option("algebra", alg_target, "Builtin name or JSON file")->required();
    globals(betti_lie_cmd);
    bind(betti_lie_cmd, "betti lie", [&] { return betti_lie(alg_target); });

    std::int64_t k = 1;
    std::string flavor = "0";
    bool table = false;
    auto* betti_solv = betti->add_subcommand("solvmanifold", "Betti numbers of M_{k,i}");
    betti_solv->add_option("--k", k, "Lattice parameter k >= 1")->required();
    betti_solv->add_option("--flavor", flavor, "0, pi or pi2")->required();
    betti_solv->add_flag("--table", table, "Print all three families");
    globals(betti_solv);
    bind(betti_solv, "betti solvmanifold", [&] { return betti_solvmanifold(k, flavor, table); });

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Lattice checks")->require_subcommand(1);
    long verify_bound = 2, center_bound = 4, comm_bound = 4, index_bound = 2, exotic_bound = 3;
    auto* lv = lattice->add_subcommand("verify", "Generators, closure and presentation on a box");
    lv->add_option("--k", k)->required();
    lv->add_option("--flavor", flavor)->required();
    lv->add_option("--bound", verify_bound, "Box bound")->capture_default_str();
    globals(lv);
    bind(lv, "lattice verify", [&] { return lattice_verify(k, flavor, verify_bound); });

    auto* lc = lattice->add_subcommand("center", "Center of the lattice on a box");
    lc->add_option("--k", k)->required();
    lc->add_option("--flavor", flavor)->required();
    lc->add_option("--bound", center_bound, "Box bound")->capture_default_str();
    globals(lc);
    bind(lc, "lattice center", [&] { return lattice_center(k, flavor, center_bound); });

    auto* lcomm = lattice->add_subcommand("commutator", "Commutator subgroup of Lambda_{k,0} on a box");
    lcomm->add_option("--k", k)->required();
    lcomm->add_option("--bound", comm_bound, "Box bound")->capture_default_str();
    globals(lcomm);
    bind(lcomm, "lattice commutator", [&] { return lattice_commutator(k, comm_bound); });

    std::string from = "0", to = "pi";
    auto* lidx = lattice->add_subcommand("index", "Covering index and normality");
    lidx->add_option("--k", k)->required();
    lidx->add_option("--from", from, "Smaller lattice flavor")->capture_default_str();
    lidx->add_option("--to", to, "Larger lattice flavor")->capture_default_str();
    lidx->add_option("--bound", index_bound, "Box bound for normality")->capture_default_str();
    globals(lidx);
    bind(lidx, "lattice index", [&] { return lattice_index(k, from, to, index_bound); });

    std::string element;
    auto* lnf = lattice->add_subcommand("normal", "Normal form s^m a^x b^y c^j");
    lnf->add_option("--k", k)->required();
    lnf->add_option("--flavor", flavor)->required();
    lnf->add_option("--element", element, "JSON element or q,x,y,z")->required();
    globals(lnf);
    bind(lnf, "lattice normal", [&] { return lattice_normal(k, flavor, element); });

    std::string l_text, q_text, r_text;
    auto* lcls = lattice->add_subcommand("classify", "Identify a product lattice");
    lcls->add_option("--l", l_text)->required();
    lcls->add_option("--q", q_text)->required();
    lcls->add_option("--r", r_text)->required();
    lcls->add_option("--k", k)->required();
    globals(lcls);
    bind(lcls, "lattice classify", [&] { return lattice_classify(l_text, q_text, r_text, k); });

    auto* lex = lattice->add_subcommand("exotic", "Non-product lattice check");
    lex->add_option("--bound", exotic_bound, "Box bound")->capture_default_str();
    globals(lex);
    bind(lex, "lattice exotic", [&] { return lattice_exotic(exotic_bound); });

    // group
    auto* group = app.add_subcommand("group", "Exact group arithmetic")->require_subcommand(1);
    std::vector<std::string> elements;
    for (const std::string op : {"mul", "inv", "comm"}) {
        auto* sub = group->add_subcommand(op, op == "mul" ? "Product" : op == "inv" ? "Inverse" : "Commutator g h g^-1 h^-1");
        sub->add_option("elements", elements, "JSON elements or q,x,y,z tuples")->required();
        globals(sub);
        bind(sub, "group " + op, [&, op] { return group_op(op, elements); });
    }

    // invariants
    auto* inv = app.add_subcommand("invariants", "Abelianization invariants")->require_subcommand(1);
    std::optional<std::int64_t> k_opt;
    std::string presentation;
    auto* iab = inv->add_subcommand("abelianization", "Invariant factors of H_1");
    iab->add_option("--k", k_opt);
    iab->add_option("--flavor", flavor);
    iab->add_option("--presentation", presentation, "Presentation text or file");
    globals(iab);
    bind(iab, "invariants abelianization", [&] { return invariants_abelianization(k_opt, flavor, presentation); });

    std::int64_t kmax = 2;
    auto* idist = inv->add_subcommand("distinguish", "Compare all Lambda_{k,i} with k <= kmax");
    idist->add_option("--kmax", kmax)->required();
    globals(idist);
    bind(idist, "invariants distinguish", [&] { return invariants_distinguish(kmax); });

    // geometry
    auto* geo = app.add_subcommand("geometry", "Complex and symplectic structures")->require_subcommand(1);
    std::string geo_alg, j_spec = "builtin";
    auto* gn = geo->add_subcommand("nijenhuis", "Nijenhuis tensor on basis pairs");
    auto* ga = geo->add_subcommand("abelian-cs", "Abelian condition [Ju,Jv] = [u,v]");
    auto* gs = geo->add_subcommand("symplectic", "Invariant symplectic form search");
    for (auto* sub : {gn, ga, gs}) {
        sub->add_option("--alg", geo_alg, "Builtin name or JSON file")->required();
        globals(sub);
    }
    for (auto* sub : {gn, ga})
        sub->add_option("--J", j_spec, "builtin, swapped, JSON matrix or file")->capture_default_str();
    bind(gn, "geometry nijenhuis", [&] { return geometry_nijenhuis(geo_alg, j_spec); });
    bind(ga, "geometry abelian-cs", [&] { return geometry_abelian(geo_alg, j_spec); });
    bind(gs, "geometry symplectic", [&] { return geometry_symplectic(geo_alg); });

    // lie
    auto* lie_cmd = app.add_subcommand("lie", "Lie algebra facts")->require_subcommand(1);
    auto* linfo = lie_cmd->add_subcommand("info", "Unimodularity, Betti numbers, solvability witness");
    linfo->add_option("algebra", alg_target)->required();
    globals(linfo);
    bind(linfo, "lie info", [&] { return lie_info(alg_target); });

    // model
    std::string model_name = "m_k0", model_file, model_target, images_text;
    auto* model = app.add_subcommand("model", "Minimal model cohomology and quasi-isomorphism check");
    model->add_option("--name", model_name, "m_k0 or m_kpi")->capture_default_str();
    model->add_option("--cdga", model_file, "CDGA text or file instead of a builtin model");
    model->add_option("--target", model_target, "Target flavor 0, pi or pi2");
    model->add_option("--images", images_text, "Generator images, e.g. 't1 = tau; w3 = alpha*beta*gamma'");
    globals(model);
    bind(model, "model", [&] { return model_cmd(model_name, model_file, model_target, images_text); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }
    if (as_json && as_csv) {
        std::cerr << "error: --json and --csv are exclusive\n";
        return kExitUsage;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = run();
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(o, command, args, ms, as_json, as_csv);
        return o.pass ? kExitPass : kExitFail;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}
