#include "simps/space.hpp"

#include <cmath>

namespace simps {

Vec2 displacement(const SpaceTopology& space, Vec2 from, Vec2 to) {
    Vec2 d = to - from;
    if (space.kind == SpaceKind::PeriodicSquare) {
        // std::remainder is the IEEE round-to-nearest residue, i.e. exactly
        // the minimal image in [-L/2, L/2]. It is also odd, which gives the
        // antisymmetry displacement(p,q) == -displacement(q,p) bit for bit.
        d.x = std::remainder(d.x, space.side_length);
        d.y = std::remainder(d.y, space.side_length);
    }
    return d;
}

namespace {

double wrap_coord(double v, double side) {
    double c = v - side * std::floor(v / side);
    // floor() rounding can land exactly on the side for tiny negative v.
    if (c >= side) c -= side;
    return c;
}

}  // namespace

Vec2 wrap(const SpaceTopology& space, Vec2 p) {
    if (space.kind == SpaceKind::Infinite) return p;
    return {wrap_coord(p.x, space.side_length), wrap_coord(p.y, space.side_length)};
}

}  // namespace simps
