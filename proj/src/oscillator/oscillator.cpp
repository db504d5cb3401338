#include "kodaira/oscillator.hpp"

#include <limits>

namespace kodaira::osc {

namespace {

int quarter_turns_mod4(const Integer& q)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), q.get_mpz_t(), 4);
    return static_cast<int>(r.get_si());
}

std::pair<Rational, Rational> rotate(const Integer& q, const Rational& x, const Rational& y)
{
    switch (quarter_turns_mod4(q)) {
    case 0:
        return {x, y};
    case 1:
        return {y, -x};
    case 2:
        return {-x, -y};
    default:
        return {-y, x};
    }
}

bool divisible(const Integer& q, long d)
{
    return mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(d)) != 0;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("lattice coordinate overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("lattice coordinate overflow");
    return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

std::pair<std::int64_t, std::int64_t> rotate(std::int64_t q, std::int64_t x, std::int64_t y)
{
    switch (((q % 4) + 4) % 4) {
    case 0:
        return {x, y};
    case 1:
        return {y, checked_neg(x)};
    case 2:
        return {checked_neg(x), checked_neg(y)};
    default:
        return {checked_neg(y), x};
    }
}

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("lattice coordinate exceeds 64 bits");
    return z.get_si();
}

}  // namespace

LatticeCoords lattice_mul(std::int64_t k, const LatticeCoords& a, const LatticeCoords& b)
{
    const auto [bx, by] = rotate(a.q, b.x, b.y);
    // (xy' - x'y)/2 in units of 1/2k is k (xy' - x'y).
    const std::int64_t cross = checked_add(checked_mul(a.x, by), checked_neg(checked_mul(bx, a.y)));
    return {checked_add(a.q, b.q), checked_add(a.x, bx), checked_add(a.y, by),
            checked_add(checked_add(a.j, b.j), checked_mul(k, cross))};
}

LatticeCoords lattice_inv(const LatticeCoords& a)
{
    const std::int64_t back = checked_neg(a.q);
    const auto [x, y] = rotate(back, checked_neg(a.x), checked_neg(a.y));
    return {back, x, y, checked_neg(a.j)};
}

OscElement to_element(std::int64_t k, const LatticeCoords& c)
{
    return {Integer(static_cast<long>(c.q)), Rational(static_cast<long>(c.x)), Rational(static_cast<long>(c.y)),
            make_rational(c.j, 2 * k)};
}

LatticeCoords to_coords(const LatticeId& lattice, const OscElement& g)
{
    if (!contains(lattice, g))
        throw NotAMember(to_string(g) + " is not in " + to_string(lattice));
    const Rational j = g.z * (2 * lattice.k);
    return {to_int64(g.q), to_int64(g.x.get_num()), to_int64(g.y.get_num()), to_int64(j.get_num())};
}

OscElement make_element(long q, const Rational& x, const Rational& y, const Rational& z)
{
    return {Integer(q), x, y, z};
}

std::string to_string(const OscElement& g)
{
    return "(" + g.q.get_str() + ", " + to_string(g.x) + ", " + to_string(g.y) + ", " + to_string(g.z) + ")";
}

Rotation rotation(const Integer& q)
{
    switch (quarter_turns_mod4(q)) {
    case 0:
        return {{{1, 0}, {0, 1}}};
    case 1:
        return {{{0, 1}, {-1, 0}}};
    case 2:
        return {{{-1, 0}, {0, -1}}};
    default:
        return {{{0, -1}, {1, 0}}};
    }
}

Rotation compose(const Rotation& a, const Rotation& b)
{
    Rotation c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

OscElement mul(const OscElement& a, const OscElement& b)
{
    const auto [bx, by] = rotate(a.q, b.x, b.y);
    OscElement out;
    out.q = a.q + b.q;
    out.x = a.x + bx;
    out.y = a.y + by;
    out.z = a.z + b.z + (a.x * by - bx * a.y) / 2;
    return out;
}

OscElement inv(const OscElement& a)
{
    // (q, h)^-1 = (-q, alpha(-q)(h^-1)); h^-1 = (-x, -y, -z) in H3.
    const Integer back = -a.q;
    const auto [x, y] = rotate(back, Rational(-a.x), Rational(-a.y));
    return {back, x, y, Rational(-a.z)};
}

OscElement commutator(const OscElement& a, const OscElement& b)
{
    return mul(mul(a, b), mul(inv(a), inv(b)));
}

OscElement conjugate(const OscElement& g, const OscElement& h) { return mul(mul(g, h), inv(g)); }

OscElement power(const OscElement& g, long n)
{
    OscElement base = n < 0 ? inv(g) : g;
    unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    OscElement acc;
    while (e != 0) {
        if (e & 1UL)
            acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::Zero:
        return "0";
    case Flavor::Pi:
        return "pi";
    default:
        return "pi2";
    }
}

Flavor parse_flavor(const std::string& text)
{
    if (text == "0" || text == "zero")
        return Flavor::Zero;
    if (text == "pi")
        return Flavor::Pi;
    if (text == "pi2" || text == "pi/2")
        return Flavor::PiHalf;
    throw std::invalid_argument("unknown flavor '" + text + "' (expected 0, pi or pi2)");
}

int angle_period(Flavor f)
{
    switch (f) {
    case Flavor::Zero:
        return 4;
    case Flavor::Pi:
        return 2;
    default:
        return 1;
    }
}

LatticeId::LatticeId(std::int64_t k_, Flavor f) : k(k_), flavor(f)
{
    if (k < 1 || k > (std::int64_t{1} << 40))
        throw std::invalid_argument("lattice parameter k must satisfy 1 <= k <= 2^40");
}

std::string to_string(const LatticeId& id)
{
    static const char* const names[] = {"0", "π", "π/2"};
    return "Λ_{" + std::to_string(id.k) + "," + names[static_cast<int>(id.flavor)] + "}";
}

bool contains(const LatticeId& lattice, const OscElement& g)
{
    if (!divisible(g.q, angle_period(lattice.flavor)))
        return false;
    if (!is_integral(g.x) || !is_integral(g.y))
        return false;
    const Rational scaled = g.z * (2 * lattice.k);
    return is_integral(scaled);
}

std::vector<OscElement> generators(const LatticeId& lattice)
{
    return {make_element(angle_period(lattice.flavor), 0, 0, 0), make_element(0, 1, 0, 0), make_element(0, 0, 1, 0),
            make_element(0, 0, 0, Rational(1, static_cast<unsigned long>(2 * lattice.k)))};
}

std::vector<OscElement> box_elements(const LatticeId& lattice, long bound)
{
    if (bound < 0)
        throw std::invalid_argument("box bound must be nonnegative");
    const long period = angle_period(lattice.flavor);
    const long q_max = bound / period;
    const Rational z_step(1, static_cast<unsigned long>(2 * lattice.k));
    std::vector<OscElement> out;
    for (long m = -q_max; m <= q_max; ++m)
        for (long x = -bound; x <= bound; ++x)
            for (long y = -bound; y <= bound; ++y)
                for (long j = -bound; j <= bound; ++j)
                    out.push_back(make_element(m * period, x, y, Rational(z_step * j)));
    return out;
}

bool is_central(const LatticeId& lattice, const OscElement& g)
{
    if (!contains(lattice, g))
        throw NotAMember(to_string(g) + " is not in " + to_string(lattice));
    for (const auto& s : generators(lattice))
        if (mul(g, s) != mul(s, g))
            return false;
    return true;
}

bool closure_box_check(const LatticeId& lattice, long bound)
{
    const auto box = box_elements(lattice, bound);
    for (const auto& g : box) {
        if (!contains(lattice, inv(g)))
            return false;
        for (const auto& h : box)
            if (!contains(lattice, mul(g, h)))
                return false;
    }
    return true;
}

bool center_box_check(const LatticeId& lattice, long bound)
{
    if (bound < 1)
        throw std::invalid_argument("center_box_check: bound must be >= 1");
    for (const auto& g : box_elements(lattice, bound)) {
        const bool in_zk = divisible(g.q, 4) && g.x == 0 && g.y == 0;
        if (is_central(lattice, g) != in_zk)
            return false;
    }
    return true;
}

bool commutator_box_check(std::int64_t k, long bound)
{
    if (bound < 1)
        throw std::invalid_argument("commutator_box_check: bound must be >= 1");
    const LatticeId lattice(k, Flavor::Zero);
    // Exact integer coordinates; the rational law is slower by two orders of magnitude.
    std::vector<LatticeCoords> box;
    for (const auto& g : box_elements(lattice, bound))
        box.push_back(to_coords(lattice, g));
    std::vector<LatticeCoords> inverses;
    for (const auto& g : box)
        inverses.push_back(lattice_inv(g));
    const std::int64_t two_k = 2 * k;
    bool attained = false;
    for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = 0; j < box.size(); ++j) {
            const LatticeCoords c =
                lattice_mul(k, lattice_mul(k, box[i], box[j]), lattice_mul(k, inverses[i], inverses[j]));
            if (c.q != 0 || c.x != 0 || c.y != 0 || c.j % two_k != 0)
                return false;
            attained = attained || c.j == two_k;
        }
    return attained;
}

long covering_index(const LatticeId& sub, const LatticeId& super)
{
    if (sub.k != super.k)
        throw std::invalid_argument("covering_index: lattices have different k");
    const int ps = angle_period(sub.flavor), pl = angle_period(super.flavor);
    if (ps % pl != 0)
        throw std::invalid_argument("covering_index: " + to_string(sub) + " is not contained in " + to_string(super));
    return ps / pl;
}

bool normality_check(const LatticeId& sub, const LatticeId& super, long bound)
{
    covering_index(sub, super);  // validates inclusion
    auto with_inverses = [](std::vector<OscElement> gens) {
        const std::size_t n = gens.size();
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back(inv(gens[i]));
        return gens;
    };
    const auto sub_gens = with_inverses(generators(sub));
    auto conjugators = with_inverses(generators(super));
    const auto box = box_elements(super, bound);
    conjugators.insert(conjugators.end(), box.begin(), box.end());
    for (const auto& g : conjugators)
        for (const auto& h : sub_gens)
            if (!contains(sub, conjugate(g, h)))
                return false;
    return true;
}

NormalForm normal_form(const LatticeId& lattice, const OscElement& g)
{
    if (!contains(lattice, g))
        throw NotAMember(to_string(g) + " is not in " + to_string(lattice));
    NormalForm nf;
    nf.m = g.q / angle_period(lattice.flavor);
    // s^m h = (q, alpha(q) h), and rotations fix z.
    const auto [hx, hy] = rotate(Integer(-g.q), g.x, g.y);
    nf.x = hx.get_num();
    nf.y = hy.get_num();
    // a^x b^y contributes xy/2 to z; c^j contributes j/2k.
    const Rational j = (g.z - hx * hy / 2) * (2 * lattice.k);
    nf.j = j.get_num();
    return nf;
}

OscElement evaluate_normal_form(const LatticeId& lattice, const NormalForm& nf)
{
    const auto gens = generators(lattice);
    auto pow = [](const OscElement& g, const Integer& e) {
        if (!e.fits_slong_p())
            throw std::overflow_error("normal form exponent too large");
        return power(g, e.get_si());
    };
    return mul(mul(pow(gens[0], nf.m), pow(gens[1], nf.x)), mul(pow(gens[2], nf.y), pow(gens[3], nf.j)));
}

}  // namespace kodaira::osc
