#pragma once

#include "kodaira/oscillator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodaira::osc {

/// Coordinate map (t, x, y, z) -> (angle_scale t, A (x, y), z_scale z).
/// When z_scale = det A and A commutes with the relevant rotations this is a
/// group homomorphism; callers verify that by exact multiplication.
struct CoordinateMap {
    Rational angle_scale = 1;
    Rational xx = 1, xy = 0, yx = 0, yy = 1;
    Rational z_scale = 1;

    /// Throws std::domain_error if the image angle is not an integer number of quarter turns.
    OscElement operator()(const OscElement& g) const;
    CoordinateMap inverse() const;
    std::string describe() const;
};

/// Checks f(g h) = f(g) f(h) for every ordered pair drawn from `elements`.
bool is_homomorphism_on(const CoordinateMap& f, const std::vector<OscElement>& elements);

/// (pi/2) l Z x q Z x r Z x (q r / 2k) Z, angle in quarter turns.
struct ProductLattice {
    Integer l;
    Rational q, r;
    std::int64_t k;

    bool contains(const OscElement& g) const;
    std::vector<OscElement> generators() const;
};

class ClassificationError : public std::invalid_argument {
public:
    enum class Reason { NotCompact, NotALattice, ScalesMustAgree };
    ClassificationError(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

struct Classification {
    LatticeId lattice;
    std::string map_name;  // gamma1 .. gamma4
    CoordinateMap iso;     // from `lattice` onto the product set
    bool homomorphism_verified = false;
    bool image_verified = false;     // generators land in the product set
    bool preimage_verified = false;  // product-set generators pull back into `lattice`

    bool verified() const { return homomorphism_verified && image_verified && preimage_verified; }
    std::string description() const;
};

/// Identifies which Lambda_{k,i} the product set is isomorphic to, by the
/// residue of l mod 4, and returns the verified coordinate isomorphism.
///
/// l = 0 is rejected (quotient not compact); q = 0 or r = 0 is not a lattice;
/// odd l forces q = r because a quarter turn exchanges the x and y factors.
/// For l = 3 mod 4 the map reflects (x, y, z) -> (x, -y, -z) so that the
/// quarter turn of Lambda_{k,pi/2} matches a three-quarter turn.
Classification classify_product_lattice(const Integer& l, const Rational& q, const Rational& r, std::int64_t k);

/// The union of the cosets {(4l, 2x, 2y, z/2)} and {(4l+2, 2x+1, 2y+1, z/2)}.
bool in_exotic_lattice(const OscElement& g);
std::vector<OscElement> exotic_generators();
std::vector<OscElement> exotic_box(long bound);

/// (t, x, y, z) -> (t, (x - y)/2, (x + y)/2, z/2), taking the exotic lattice into Lambda_{2,pi}.
CoordinateMap exotic_map();

struct ExoticReport {
    long bound = 0;
    bool closed = false;        // box products and inverses stay in the set
    bool homomorphism = false;  // exotic_map is multiplicative on generators and the box, lands in Lambda_{2,pi}
    bool injective = false;     // distinct box elements have distinct images
    /// Number of cosets of the image met by the Lambda_{2,pi} box (1 would mean onto).
    std::size_t image_index_lower_bound = 0;

    bool passed() const { return closed && homomorphism && injective; }
};

ExoticReport exotic_lattice_check(long bound = 3);

}  // namespace kodaira::osc
