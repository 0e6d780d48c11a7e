#pragma once

#include <stdexcept>

#include "simps/vec2.hpp"

namespace simps {

enum class SpaceKind { Infinite, PeriodicSquare };

// Geometry individuals move in: an unbounded plane or an L x L square
// with opposite borders identified (torus). Canonical torus positions
// live in [0, L) x [0, L).
struct SpaceTopology {
    SpaceKind kind = SpaceKind::Infinite;
    double side_length = 0.0;  // L, meaningful only for PeriodicSquare

    static SpaceTopology infinite() { return {SpaceKind::Infinite, 0.0}; }

    static SpaceTopology periodic(double side) {
        if (!(side > 0.0))
            throw std::invalid_argument("space.l: periodic side length must be > 0");
        return {SpaceKind::PeriodicSquare, side};
    }
};

// Minimal-image vector from `from` to `to`. On the torus each component
// magnitude is at most L/2; on the infinite plane it is the plain difference.
Vec2 displacement(const SpaceTopology& space, Vec2 from, Vec2 to);

// Canonicalizes a position: identity on the infinite plane, component-wise
// modulo L on the torus.
Vec2 wrap(const SpaceTopology& space, Vec2 p);

inline double distance(const SpaceTopology& space, Vec2 a, Vec2 b) {
    return displacement(space, a, b).norm();
}

}  // namespace simps
