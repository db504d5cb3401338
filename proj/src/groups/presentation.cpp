#include "kodaira/presentation.hpp"

#include "kodaira/linalg.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kodaira::fp {

using osc::Flavor;
using osc::LatticeId;
using osc::OscElement;

Word reduce(Word w)
{
    Word out;
    for (const auto& s : w) {
        if (s.exponent == 0)
            continue;
        if (!out.empty() && out.back().generator == s.generator) {
            out.back().exponent += s.exponent;
            if (out.back().exponent == 0)
                out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return out;
}

Word inverse(const Word& w)
{
    Word out(w.rbegin(), w.rend());
    for (auto& s : out)
        s.exponent = -s.exponent;
    return out;
}

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce(std::move(out));
}

Word commutator(const Word& a, const Word& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

Word letter(std::size_t generator, long exponent) { return reduce({{generator, exponent}}); }

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators))
{
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("presentation: empty generator name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("presentation: duplicate generator '" + n + "'");
    }
    for (const auto& w : relators_)
        for (const auto& s : w)
            if (s.generator >= names_.size())
                throw std::invalid_argument("presentation: relator uses generator index " +
                                            std::to_string(s.generator) + " out of range");
}

std::size_t Presentation::generator_index(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    throw std::invalid_argument("presentation: unknown generator '" + name + "'");
}

Presentation Presentation::with_relator(Word w) const
{
    auto rels = relators_;
    rels.push_back(std::move(w));
    return Presentation(names_, std::move(rels));
}

Presentation Presentation::with_redundant_generator(const std::string& name, const Word& w) const
{
    auto names = names_;
    names.push_back(name);
    auto rels = relators_;
    rels.push_back(concat(letter(names_.size(), -1), w));
    return Presentation(std::move(names), std::move(rels));
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& seps)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (seps.find(ch) != std::string::npos) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool is_name_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

long read_count(const std::string& text, std::size_t& i)
{
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == start)
        return 1;
    try {
        return std::stol(text.substr(start, i - start));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("presentation: exponent too large in '" + text + "'");
    }
}

Word parse_word(const std::string& raw, const std::vector<std::string>& names)
{
    const std::string text = trim(raw);
    if (text == "1")
        return {};
    if (text.empty())
        throw std::invalid_argument("presentation: empty relator (write 1 for the trivial word)");
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (!is_name_start(text[i]))
            throw std::invalid_argument("presentation: unexpected '" + std::string(1, text[i]) + "' in '" + text + "'");
        const std::size_t start = i;
        while (i < text.size() && is_name_char(text[i]))
            ++i;
        const std::string name = text.substr(start, i - start);
        std::size_t gen = names.size();
        for (std::size_t g = 0; g < names.size(); ++g)
            if (names[g] == name)
                gen = g;
        if (gen == names.size())
            throw std::invalid_argument("presentation: unknown generator '" + name + "'");
        long exponent = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            const long sign = text[i] == '-' ? -1 : 1;
            ++i;
            exponent = sign * read_count(text, i);
        } else if (i < text.size() && text[i] == '^') {
            ++i;
            long sign = 1;
            if (i < text.size() && text[i] == '-') {
                sign = -1;
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("presentation: '^' must be followed by an integer in '" + text + "'");
            exponent = sign * read_count(text, i);
        }
        w.push_back({gen, exponent});
    }
    return reduce(std::move(w));
}

}  // namespace

Presentation parse_presentation(const std::string& text)
{
    std::vector<std::string> names;
    std::vector<std::string> pending;
    bool have_gens = false, in_rel = false;
    for (const auto& raw : split(text, ";\n")) {
        std::string stmt = trim(raw);
        if (const auto hash = stmt.find('#'); hash != std::string::npos)
            stmt = trim(stmt.substr(0, hash));
        if (stmt.empty())
            continue;
        if (stmt.rfind("gens:", 0) == 0) {
            if (have_gens)
                throw std::invalid_argument("presentation: 'gens:' given twice");
            have_gens = true;
            std::istringstream in(stmt.substr(5));
            for (std::string n; in >> n;) {
                if (!is_name_start(n[0]))
                    throw std::invalid_argument("presentation: bad generator name '" + n + "'");
                for (char ch : n)
                    if (!is_name_char(ch))
                        throw std::invalid_argument("presentation: bad generator name '" + n + "'");
                names.push_back(n);
            }
            continue;
        }
        if (stmt.rfind("rel:", 0) == 0) {
            in_rel = true;
            stmt = stmt.substr(4);
        } else if (!in_rel) {
            throw std::invalid_argument("presentation: expected 'gens:' or 'rel:' before '" + stmt + "'");
        }
        for (const auto& w : split(stmt, ","))
            pending.push_back(w);
    }
    if (!have_gens)
        throw std::invalid_argument("presentation: missing 'gens:' statement");
    std::vector<Word> rels;
    for (const auto& w : pending)
        rels.push_back(parse_word(w, names));
    return Presentation(std::move(names), std::move(rels));
}

std::string format_word(const Presentation& p, const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (const auto& s : w) {
        if (!out.empty())
            out += ' ';
        out += p.generators().at(s.generator);
        if (s.exponent == -1)
            out += '-';
        else if (s.exponent < 0)
            out += std::to_string(s.exponent);
        else if (s.exponent > 1)
            out += '^' + std::to_string(s.exponent);
    }
    return out;
}

std::string format_presentation(const Presentation& p)
{
    std::string out = "gens:";
    for (const auto& n : p.generators())
        out += ' ' + n;
    out += "; rel: ";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        if (i)
            out += ", ";
        out += format_word(p, p.relators()[i]);
    }
    return out;
}

Presentation builtin_presentation(const LatticeId& lattice)
{
    enum : std::size_t { s, a, b, c };
    const long two_k = 2 * lattice.k;
    std::vector<Word> rels{
        concat(commutator(letter(a), letter(b)), letter(c, -two_k)),
        commutator(letter(a), letter(c)),
        commutator(letter(b), letter(c)),
    };
    auto conj = [](std::size_t g, std::size_t h) { return Word{{g, 1}, {h, 1}, {g, -1}}; };
    switch (lattice.flavor) {
    case Flavor::Zero:
        rels.push_back(commutator(letter(s), letter(a)));
        rels.push_back(commutator(letter(s), letter(b)));
        break;
    case Flavor::Pi:
        rels.push_back(concat(conj(s, a), letter(a)));
        rels.push_back(concat(conj(s, b), letter(b)));
        break;
    case Flavor::PiHalf:
        rels.push_back(concat(conj(s, a), letter(b)));
        rels.push_back(concat(conj(s, b), letter(a, -1)));
        break;
    }
    rels.push_back(commutator(letter(s), letter(c)));
    return Presentation({"s", "a", "b", "c"}, std::move(rels));
}

OscElement evaluate_word(const Word& w, const std::vector<OscElement>& assignment)
{
    OscElement acc;
    for (const auto& syl : w)
        acc = osc::mul(acc, osc::power(assignment.at(syl.generator), syl.exponent));
    return acc;
}

PresentationCheck verify_presentation(const LatticeId& lattice, long box_bound)
{
    const Presentation p = builtin_presentation(lattice);
    const auto gens = osc::generators(lattice);
    PresentationCheck out;
    for (std::size_t i = 0; i < p.relators().size(); ++i)
        if (evaluate_word(p.relators()[i], gens) != OscElement::identity())
            out.failing_relators.push_back(i);
    for (const auto& g : osc::box_elements(lattice, box_bound)) {
        const osc::NormalForm nf = osc::normal_form(lattice, g);
        const Word w{{0, nf.m.get_si()}, {1, nf.x.get_si()}, {2, nf.y.get_si()}, {3, nf.j.get_si()}};
        ++out.box_elements_checked;
        if (evaluate_word(w, gens) != g)
            ++out.normal_form_failures;
    }
    return out;
}

std::string AbelianInvariants::to_string() const
{
    std::string out = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion)
        out += " + Z/" + t.get_str();
    return out;
}

AbelianInvariants abelianization(const Presentation& p)
{
    const std::size_t n = p.generators().size();
    AbelianInvariants out;
    if (p.relators().empty()) {
        out.free_rank = n;
        return out;
    }
    linalg::IntMatrix rel(p.relators().size(), n);
    for (std::size_t i = 0; i < p.relators().size(); ++i)
        for (const auto& s : p.relators()[i])
            rel(i, s.generator) += s.exponent;
    std::size_t nonzero = 0;
    for (const auto& d : linalg::smith_normal_form(rel).invariant_factors()) {
        if (d == 0)
            continue;
        ++nonzero;
        if (d != 1)
            out.torsion.push_back(d);
    }
    out.free_rank = n - nonzero;
    return out;
}

DistinctionReport distinguish_all(std::int64_t k_max)
{
    if (k_max < 2)
        throw std::invalid_argument("distinguish_all: k_max must be >= 2");
    DistinctionReport rep;
    for (std::int64_t k = 1; k <= k_max; ++k)
        for (Flavor f : {Flavor::Zero, Flavor::Pi, Flavor::PiHalf}) {
            const LatticeId id(k, f);
            rep.rows.push_back({id, abelianization(builtin_presentation(id))});
        }
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
        for (std::size_t j = i + 1; j < rep.rows.size(); ++j)
            if (rep.rows[i].invariants == rep.rows[j].invariants)
                rep.collisions.emplace_back(i, j);
    return rep;
}

}  // namespace kodaira::fp
