#include "simps/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace simps {

double limit_acceleration(Vec2 v_prev, Vec2 direction, double v_max, double dt) {
    // Signed speed component along the request direction, |v| cos θ.
    const double along = v_prev.dot(direction);
    // v_max^2 - (|v| sin θ)^2 = v_max^2 - (|v|^2 - along^2); clamp guards
    // against |v| sitting a rounding error above v_max.
    const double radicand = std::max(0.0, v_max * v_max - (v_prev.norm_sq() - along * along));
    // Nonnegative whenever |v_prev| <= v_max; the outer clamp only swallows
    // the last-ulp noise of that precondition.
    return std::max(0.0, (std::sqrt(radicand) - along) / dt);
}

KinematicState integrate(const KinematicState& state, Vec2 accel_request, double v_max, double dt,
                         const SpaceTopology& space) {
    KinematicState next = state;
    const double req = accel_request.norm();
    if (req > 0.0) {
        const Vec2 dir = (1.0 / req) * accel_request;
        const double a_lim = limit_acceleration(state.velocity, dir, v_max, dt);
        next.velocity += (std::min(req, a_lim) * dt) * dir;
        // The limiter is exact in real arithmetic; renormalize away the
        // rounding drift so the speed bound holds for the next step too.
        const double speed = next.velocity.norm();
        if (speed > v_max) next.velocity = (v_max / speed) * next.velocity;
    }
    next.position = wrap(space, next.position + dt * next.velocity);
    return next;
}

}  // namespace simps
