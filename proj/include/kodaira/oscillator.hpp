#pragma once

#include "kodaira/rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kodaira::osc {

/// Element (theta, x, y, z) of R ⋉ H3(R) with theta = q * pi/2.
///
/// Angles are kept as integer quarter turns, so every rotation has entries in
/// {-1, 0, 1} and the whole group law stays in Q.
struct OscElement {
    Integer q = 0;
    Rational x = 0, y = 0, z = 0;

    static OscElement identity() { return {}; }
    friend bool operator==(const OscElement&, const OscElement&) = default;
};

OscElement make_element(long q, const Rational& x, const Rational& y, const Rational& z);

using kodaira::to_string;
std::string to_string(const OscElement& g);

using Rotation = std::array<std::array<int, 2>, 2>;

/// Matrix of alpha(q pi/2) = [[cos, sin], [-sin, cos]] acting on (x, y).
Rotation rotation(const Integer& q);
Rotation compose(const Rotation& a, const Rotation& b);

/// (q_a + q_b, h_a * alpha(q_a)(h_b)) with the Heisenberg law
/// (x,y,z)(x',y',z') = (x+x', y+y', z+z' + (xy' - x'y)/2).
OscElement mul(const OscElement& a, const OscElement& b);
OscElement inv(const OscElement& a);
OscElement commutator(const OscElement& a, const OscElement& b);
/// g h g^-1
OscElement conjugate(const OscElement& g, const OscElement& h);
OscElement power(const OscElement& g, long n);

enum class Flavor { Zero, Pi, PiHalf };

std::string flavor_name(Flavor f);  // "0", "pi", "pi2"
Flavor parse_flavor(const std::string& text);

/// Rotation period in quarter turns: 4, 2, 1.
int angle_period(Flavor f);

/// Names one of the lattices Lambda_{k,0}, Lambda_{k,pi}, Lambda_{k,pi/2}:
/// angle in period * Z, x and y in Z, z in (1/2k) Z.
struct LatticeId {
    std::int64_t k;
    Flavor flavor;

    LatticeId(std::int64_t k_, Flavor f);
    friend bool operator==(const LatticeId&, const LatticeId&) = default;
};

std::string to_string(const LatticeId& id);

class NotAMember : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool contains(const LatticeId& lattice, const OscElement& g);

/// Canonical generators s, a, b, c: the angle generator (period,0,0,0),
/// a = (0,1,0,0), b = (0,0,1,0), c = (0,0,0,1/2k).
std::vector<OscElement> generators(const LatticeId& lattice);

/// Coordinates (q, x, y, j) of (q, x, y, j/2k), all machine integers. Products
/// stay in this form for every Lambda_{k,i}; arithmetic throws
/// std::overflow_error rather than wrapping.
struct LatticeCoords {
    std::int64_t q = 0, x = 0, y = 0, j = 0;
    friend bool operator==(const LatticeCoords&, const LatticeCoords&) = default;
};

LatticeCoords lattice_mul(std::int64_t k, const LatticeCoords& a, const LatticeCoords& b);
LatticeCoords lattice_inv(const LatticeCoords& a);
OscElement to_element(std::int64_t k, const LatticeCoords& c);
/// Throws NotAMember, or std::overflow_error when a coordinate exceeds 64 bits.
LatticeCoords to_coords(const LatticeId& lattice, const OscElement& g);

/// Lattice elements with |q|, |x|, |y|, |2kz| <= bound.
std::vector<OscElement> box_elements(const LatticeId& lattice, long bound);

/// True iff g commutes with every canonical generator. Throws NotAMember.
bool is_central(const LatticeId& lattice, const OscElement& g);

/// Products and inverses of box elements stay in the lattice.
bool closure_box_check(const LatticeId& lattice, long bound);

/// Over the box, is_central holds exactly on Z_k = {q in 4Z, x = y = 0}.
bool center_box_check(const LatticeId& lattice, long bound);

/// Every commutator of two box elements of Lambda_{k,0} lies in
/// C = 0 x 0 x 0 x Z, and (0,0,0,1) occurs.
bool commutator_box_check(std::int64_t k, long bound);

/// [super : sub] for sub ⊆ super in the chain Zero ⊆ Pi ⊆ PiHalf.
/// Throws std::invalid_argument on differing k or non-inclusion.
long covering_index(const LatticeId& sub, const LatticeId& super);

/// Conjugates of sub's generators (and inverses) by super's generators (and
/// inverses), and by every box element of super, stay inside sub.
bool normality_check(const LatticeId& sub, const LatticeId& super, long bound);

/// Exponents with g = s^m a^x b^y c^j.
struct NormalForm {
    Integer m, x, y, j;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const LatticeId& lattice, const OscElement& g);
OscElement evaluate_normal_form(const LatticeId& lattice, const NormalForm& nf);

}  // namespace kodaira::osc
