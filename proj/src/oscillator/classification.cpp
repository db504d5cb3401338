#include "kodaira/classification.hpp"

#include <set>
#include <sstream>

namespace kodaira::osc {

namespace {

std::string linear_term(const Rational& c, const std::string& var)
{
    if (c == 0)
        return "";
    if (c == 1)
        return var;
    if (c == -1)
        return "-" + var;
    return to_string(c) + var;
}

std::string linear_combo(const Rational& a, const std::string& u, const Rational& b, const std::string& v)
{
    std::string s = linear_term(a, u);
    const std::string t = linear_term(b, v);
    if (s.empty())
        return t.empty() ? "0" : t;
    if (t.empty())
        return s;
    return t[0] == '-' ? s + " - " + t.substr(1) : s + " + " + t;
}

std::vector<OscElement> with_inverses(std::vector<OscElement> gens)
{
    const std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(inv(gens[i]));
    return gens;
}

// Strict weak order so elements can be deduplicated.
struct ElementLess {
    bool operator()(const OscElement& a, const OscElement& b) const
    {
        if (a.q != b.q)
            return a.q < b.q;
        if (a.x != b.x)
            return a.x < b.x;
        if (a.y != b.y)
            return a.y < b.y;
        return a.z < b.z;
    }
};

}  // namespace

OscElement CoordinateMap::operator()(const OscElement& g) const
{
    const Rational angle = angle_scale * g.q;
    if (!is_integral(angle))
        throw std::domain_error("coordinate map: image angle is not a whole number of quarter turns");
    return {angle.get_num(), xx * g.x + xy * g.y, yx * g.x + yy * g.y, z_scale * g.z};
}

CoordinateMap CoordinateMap::inverse() const
{
    const Rational det = xx * yy - xy * yx;
    if (det == 0 || angle_scale == 0 || z_scale == 0)
        throw std::domain_error("coordinate map is not invertible");
    CoordinateMap out;
    out.angle_scale = 1 / angle_scale;
    out.xx = yy / det;
    out.xy = -xy / det;
    out.yx = -yx / det;
    out.yy = xx / det;
    out.z_scale = 1 / z_scale;
    return out;
}

std::string CoordinateMap::describe() const
{
    return "(t, x, y, z) -> (" + linear_term(angle_scale, "t") + ", " + linear_combo(xx, "x", xy, "y") + ", " +
           linear_combo(yx, "x", yy, "y") + ", " + linear_combo(z_scale, "z", 0, "") + ")";
}

bool is_homomorphism_on(const CoordinateMap& f, const std::vector<OscElement>& elements)
{
    std::vector<OscElement> images;
    images.reserve(elements.size());
    for (const auto& g : elements)
        images.push_back(f(g));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (f(mul(elements[i], elements[j])) != mul(images[i], images[j]))
                return false;
    return true;
}

bool ProductLattice::contains(const OscElement& g) const
{
    if (g.q % l != 0)
        return false;
    const Rational z_step = q * r / (2 * k);
    return is_integral(Rational(g.x / q)) && is_integral(Rational(g.y / r)) && is_integral(Rational(g.z / z_step));
}

std::vector<OscElement> ProductLattice::generators() const
{
    return {OscElement{l, 0, 0, 0}, OscElement{0, q, 0, 0}, OscElement{0, 0, r, 0},
            OscElement{0, 0, 0, Rational(q * r / (2 * k))}};
}

std::string Classification::description() const
{
    static const char* const greek[] = {"γ₁", "γ₂", "γ₃", "γ₄"};
    const int idx = map_name.back() - '1';
    return to_string(lattice) + " via " + greek[idx];
}

Classification classify_product_lattice(const Integer& l, const Rational& q, const Rational& r, std::int64_t k)
{
    using Reason = ClassificationError::Reason;
    if (l < 0 || q < 0 || r < 0)
        throw std::invalid_argument("classify: l must be a natural number and q, r nonnegative");
    if (l == 0)
        throw ClassificationError(Reason::NotCompact,
                                  "l = 0: the angle factor is trivial, so G/L ≅ R x H3(R)/L' is not compact");
    if (q == 0 || r == 0)
        throw ClassificationError(Reason::NotALattice,
                                  "q = 0 or r = 0: the intersection with H3(R) is not a lattice of H3(R)");

    Integer residue;
    mpz_fdiv_r_ui(residue.get_mpz_t(), l.get_mpz_t(), 4);
    const long res = residue.get_si();
    if (res % 2 == 1 && q != r)
        throw ClassificationError(Reason::ScalesMustAgree,
                                  "odd l: a quarter turn maps qZ x rZ onto rZ x qZ, forcing r | q and q | r, so q = r");

    const Flavor flavor = res == 0 ? Flavor::Zero : res == 2 ? Flavor::Pi : Flavor::PiHalf;
    const LatticeId source(k, flavor);

    CoordinateMap iso;
    iso.angle_scale = Rational(l) / angle_period(flavor);
    iso.xx = q;
    iso.yy = r;
    iso.z_scale = q * r;
    std::string name = res == 0 ? "gamma1" : res == 2 ? "gamma2" : "gamma3";
    if (res == 3) {
        // Three quarter turns act as the inverse rotation; conjugating by the
        // reflection y -> -y (which negates z) turns one into the other.
        iso.yy = -r;
        iso.z_scale = -(q * r);
        name = "gamma4";
    }

    Classification out{source, name, iso};
    const ProductLattice target{l, q, r, k};

    out.homomorphism_verified = is_homomorphism_on(iso, with_inverses(generators(source)));
    out.image_verified = true;
    for (const auto& g : generators(source))
        out.image_verified = out.image_verified && target.contains(iso(g));
    const CoordinateMap back = iso.inverse();
    out.preimage_verified = true;
    for (const auto& g : target.generators()) {
        try {
            out.preimage_verified = out.preimage_verified && contains(source, back(g));
        } catch (const std::domain_error&) {
            out.preimage_verified = false;
        }
    }
    return out;
}

bool in_exotic_lattice(const OscElement& g)
{
    if (!is_integral(g.x) || !is_integral(g.y) || !is_integral(Rational(2 * g.z)))
        return false;
    Integer qr;
    mpz_fdiv_r_ui(qr.get_mpz_t(), g.q.get_mpz_t(), 4);
    const bool x_odd = mpz_odd_p(g.x.get_num_mpz_t()) != 0;
    const bool y_odd = mpz_odd_p(g.y.get_num_mpz_t()) != 0;
    if (qr == 0)
        return !x_odd && !y_odd;
    if (qr == 2)
        return x_odd && y_odd;
    return false;
}

std::vector<OscElement> exotic_generators()
{
    return {make_element(2, 1, 1, 0), make_element(0, 2, 0, 0), make_element(0, 0, 2, 0),
            make_element(0, 0, 0, Rational(1, 2))};
}

std::vector<OscElement> exotic_box(long bound)
{
    std::vector<OscElement> out;
    for (long q = -bound; q <= bound; ++q)
        for (long x = -bound; x <= bound; ++x)
            for (long y = -bound; y <= bound; ++y)
                for (long j = -bound; j <= bound; ++j) {
                    OscElement g = make_element(q, x, y, make_rational(j, 2));
                    if (in_exotic_lattice(g))
                        out.push_back(std::move(g));
                }
    return out;
}

CoordinateMap exotic_map()
{
    CoordinateMap f;
    f.xx = Rational(1, 2);
    f.xy = Rational(-1, 2);
    f.yx = Rational(1, 2);
    f.yy = Rational(1, 2);
    f.z_scale = Rational(1, 2);
    return f;
}

ExoticReport exotic_lattice_check(long bound)
{
    if (bound < 1)
        throw std::invalid_argument("exotic_lattice_check: bound must be >= 1");
    ExoticReport rep;
    rep.bound = bound;
    const auto box = exotic_box(bound);
    const LatticeId target(2, Flavor::Pi);
    const CoordinateMap psi = exotic_map();

    rep.closed = true;
    for (const auto& g : box) {
        rep.closed = rep.closed && in_exotic_lattice(inv(g));
        for (const auto& h : box)
            rep.closed = rep.closed && in_exotic_lattice(mul(g, h));
    }

    rep.homomorphism = is_homomorphism_on(psi, with_inverses(exotic_generators())) && is_homomorphism_on(psi, box);
    for (const auto& g : box)
        rep.homomorphism = rep.homomorphism && contains(target, psi(g));

    std::set<OscElement, ElementLess> images;
    for (const auto& g : box)
        images.insert(psi(g));
    rep.injective = images.size() == box.size();

    const CoordinateMap back = psi.inverse();
    auto in_image = [&](const OscElement& g) { return in_exotic_lattice(back(g)); };
    std::vector<OscElement> coset_reps{OscElement::identity()};
    for (const auto& g : box_elements(target, bound)) {
        bool covered = false;
        for (const auto& r : coset_reps)
            if (in_image(mul(inv(r), g))) {
                covered = true;
                break;
            }
        if (!covered)
            coset_reps.push_back(g);
    }
    rep.image_index_lower_bound = coset_reps.size();
    return rep;
}

}  // namespace kodaira::osc
