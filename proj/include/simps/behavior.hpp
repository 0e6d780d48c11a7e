#pragma once

#include <cstddef>
#include <vector>

#include "simps/social_graph.hpp"
#include "simps/space.hpp"
#include "simps/vec2.hpp"

namespace simps {

enum class Mode { Socialize, Isolate };

// Control-loop state of one individual.
struct BehaviorState {
    Mode mode = Mode::Socialize;
    double perceived_surround = 0.0;  // u, persons
};

struct PerceptionParams {
    double social_radius = 3.5;         // m
    double half_perception_time = 4.0;  // s, the u-mixing period
    double distance_fading_exponent = 1.0;

    void validate() const;  // throws std::invalid_argument
};

// How many others sit within distance r of individual i (boundary inclusive).
std::size_t count_surround(const std::vector<Vec2>& positions, const SpaceTopology& space,
                           std::size_t i, double r);

// The perceived surround relaxes halfway toward the fresh count each time it
// is refreshed: u' = (U + u) / 2.
inline double update_perceived_surround(double u, double fresh_count) {
    return (fresh_count + u) / 2.0;
}

// Sharp hysteresis: switch only when u leaves the comfort band [s(1-t),
// s(1+t)] strictly; on the boundary the previous mode is kept.
Mode decide_behavior(Mode prev, double u, double s, double t);

// How far u sits outside the comfort radius s*t, normalized and capped at 1.
// Zero exactly at u == s. For a degenerate band (s*t == 0) any mismatch is
// full excitation.
double excitation(double u, double s, double t);

// Net directional pull on i from everyone else. Socialize: attraction toward
// each acquaintance, scaled by the tie weight over distance^lambda. Isolate:
// repulsion from everyone, scaled by (1 - tie weight). Distances are clamped
// below by a small epsilon so coincident agents stay finite.
Vec2 social_tension(const std::vector<Vec2>& positions, const SocialGraph& graph,
                    const SpaceTopology& space, std::size_t i, double lambda, Mode mode);

// Tension direction scaled by excitation; zero tension means no movement
// urge at all.
inline Vec2 willingness(Vec2 tension, double e) { return e * unit_or_zero(tension); }

// Distance clamp used inside the tension sum.
inline constexpr double kMinTensionDistance = 0.01;  // m

}  // namespace simps
