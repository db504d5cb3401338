#include "kodaira/exterior.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace kodaira::lie {

int wedge_sign(Monomial a, Monomial b)
{
    if (a & b)
        return 0;
    unsigned inversions = 0;
    for (Monomial rest = b; rest != 0; rest &= rest - 1) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
        const Monomial above = (j + 1 >= 32) ? 0u : ~((Monomial{1} << (j + 1)) - 1);
        inversions += static_cast<unsigned>(std::popcount(a & above));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<std::size_t> factors(Monomial m)
{
    std::vector<std::size_t> out;
    for (; m != 0; m &= m - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

Form Form::generator(std::size_t index) { return monomial(Monomial{1} << index, 1); }

Form Form::monomial(Monomial m, const Rational& coeff)
{
    Form f;
    f.add_term(m, coeff);
    return f;
}

Rational Form::coefficient(Monomial m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(Monomial m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Form& Form::operator+=(const Form& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Form operator*(const Rational& s, const Form& f)
{
    Form out;
    if (s == 0)
        return out;
    for (const auto& [m, c] : f.terms_)
        out.terms_.emplace(m, s * c);
    return out;
}

Form wedge(const Form& a, const Form& b)
{
    Form out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const int s = wedge_sign(ma, mb);
            if (s == 0)
                continue;
            out.add_term(ma | mb, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
        }
    return out;
}

OddAlgebra::OddAlgebra(std::vector<std::string> names, std::vector<int> degrees, std::vector<Form> differential)
    : names_(std::move(names)), degrees_(std::move(degrees)), diff_(std::move(differential))
{
    const std::size_t n = names_.size();
    if (degrees_.size() != n || diff_.size() != n)
        throw std::invalid_argument("OddAlgebra: names, degrees and differential differ in length");
    if (n > kMaxGenerators)
        throw std::invalid_argument("OddAlgebra: too many generators");
    for (int deg : degrees_)
        if (deg <= 0 || deg % 2 == 0)
            throw std::invalid_argument("OddAlgebra: generator degrees must be positive and odd");

    top_degree_ = 0;
    for (int deg : degrees_)
        top_degree_ += deg;
    bases_.assign(static_cast<std::size_t>(top_degree_) + 1, {});
    const Monomial full = n == 0 ? 0 : static_cast<Monomial>((std::uint64_t{1} << n) - 1);
    for (Monomial m = 0;; ++m) {
        bases_[static_cast<std::size_t>(degree(m))].push_back(m);
        if (m == full)
            break;
    }
    for (auto& b : bases_) {
        std::sort(b.begin(), b.end(), [](Monomial x, Monomial y) { return factors(x) < factors(y); });
        for (std::size_t i = 0; i < b.size(); ++i)
            positions_[b[i]] = i;
    }

    for (std::size_t g = 0; g < n; ++g)
        for (const auto& [m, c] : diff_[g].terms()) {
            if (m >= (Monomial{1} << n) && n < 32)
                throw std::invalid_argument("OddAlgebra: differential uses an unknown generator");
            if (degree(m) != degrees_[g] + 1)
                throw std::invalid_argument("OddAlgebra: differential of " + names_[g] + " is not of degree " +
                                            std::to_string(degrees_[g] + 1));
        }
}

int OddAlgebra::degree(Monomial m) const
{
    int d = 0;
    for (auto i : factors(m))
        d += degrees_.at(i);
    return d;
}

const std::vector<Monomial>& OddAlgebra::basis(int p) const
{
    static const std::vector<Monomial> empty;
    if (p < 0 || p > top_degree_)
        return empty;
    return bases_[static_cast<std::size_t>(p)];
}

std::size_t OddAlgebra::position(Monomial m) const { return positions_.at(m); }

Form OddAlgebra::d(const Form& f) const
{
    Form out;
    for (const auto& [m, c] : f.terms()) {
        const auto fs = factors(m);
        Monomial left = 0;
        for (std::size_t s = 0; s < fs.size(); ++s) {
            const Monomial bit = Monomial{1} << fs[s];
            const Monomial right = m & ~left & ~bit;
            Form term = wedge(wedge(Form::monomial(left), diff_[fs[s]]), Form::monomial(right));
            out += (s % 2 == 0 ? c : Rational(-c)) * term;
            left |= bit;
        }
    }
    return out;
}

linalg::RatMatrix OddAlgebra::differential_matrix(int p) const
{
    const auto& src = basis(p);
    const auto& dst = basis(p + 1);
    linalg::RatMatrix mat(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Form image = d(Form::monomial(src[j]));
        for (const auto& [m, c] : image.terms())
            mat(position(m), j) = c;
    }
    return mat;
}

RatVector OddAlgebra::to_vector(const Form& f, int p) const
{
    RatVector v(basis(p).size(), Rational(0));
    for (const auto& [m, c] : f.terms()) {
        if (degree(m) != p)
            throw std::invalid_argument("OddAlgebra::to_vector: form is not homogeneous of degree " +
                                        std::to_string(p));
        v[position(m)] = c;
    }
    return v;
}

Form OddAlgebra::from_vector(const RatVector& v, int p) const
{
    const auto& b = basis(p);
    if (v.size() != b.size())
        throw std::invalid_argument("OddAlgebra::from_vector: length mismatch");
    Form f;
    for (std::size_t i = 0; i < b.size(); ++i)
        f.add_term(b[i], v[i]);
    return f;
}

std::string OddAlgebra::format(Monomial m) const
{
    if (m == 0)
        return "1";
    std::string out;
    for (auto i : factors(m)) {
        if (!out.empty())
            out += '*';
        out += names_[i];
    }
    return out;
}

std::string OddAlgebra::format(const Form& f) const
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Print in basis order rather than mask order.
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) {
        const int da = degree(a.first), db = degree(b.first);
        return da != db ? da < db : factors(a.first) < factors(b.first);
    });
    for (const auto& [m, c] : terms) {
        const Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mag != 1 || m == 0) {
            os << to_string(mag);
            if (m != 0)
                os << '*';
        }
        if (m != 0)
            os << format(m);
    }
    return os.str();
}

Form apply_algebra_map(const std::vector<Form>& generator_images, const Form& f)
{
    Form out;
    for (const auto& [m, c] : f.terms()) {
        Form prod = Form::scalar(1);
        for (auto i : factors(m)) {
            if (i >= generator_images.size())
                throw std::invalid_argument("apply_algebra_map: missing generator image");
            prod = wedge(prod, generator_images[i]);
        }
        out += c * prod;
    }
    return out;
}

linalg::RatMatrix induced_map(const OddAlgebra& source, const OddAlgebra& target,
                              const std::vector<Form>& generator_images, int p)
{
    if (generator_images.size() != source.generator_count())
        throw std::invalid_argument("induced_map: one image per source generator required");
    const auto& src = source.basis(p);
    linalg::RatMatrix mat(target.basis(p).size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Form img = apply_algebra_map(generator_images, Form::monomial(src[j]));
        const RatVector col = target.to_vector(img, p);
        for (std::size_t i = 0; i < col.size(); ++i)
            mat(i, j) = col[i];
    }
    return mat;
}

}  // namespace kodaira::lie
