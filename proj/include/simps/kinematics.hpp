#pragma once

#include "simps/space.hpp"
#include "simps/vec2.hpp"

namespace simps {

struct KinematicState {
    Vec2 position;
    Vec2 velocity;
};

// Raw acceleration request: the willingness vector scaled to the
// individual's acceleration budget.
inline Vec2 acceleration_request(Vec2 willingness, double a_max) { return a_max * willingness; }

// Largest acceleration magnitude along `direction` (unit length) that keeps
// the post-step speed at or below v_max:
//   a_lim = [ sqrt(v_max^2 - (|v| sin θ)^2) - |v| cos θ ] / dt
// with θ the angle between direction and the previous velocity. Nonnegative
// whenever |v| <= v_max.
double limit_acceleration(Vec2 v_prev, Vec2 direction, double v_max, double dt);

// One Euler step: apply the request capped by the speed limiter, advance
// velocity then position, wrap into the space. A zero request leaves the
// velocity untouched (nothing ever brakes an unmotivated individual).
KinematicState integrate(const KinematicState& state, Vec2 accel_request, double v_max, double dt,
                         const SpaceTopology& space);

}  // namespace simps
