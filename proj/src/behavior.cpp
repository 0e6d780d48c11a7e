#include "simps/behavior.hpp"

#include <cmath>
#include <stdexcept>

namespace simps {

void PerceptionParams::validate() const {
    if (!(social_radius >= 0.0)) throw std::invalid_argument("r_soc: must be >= 0");
    if (!(half_perception_time > 0.0)) throw std::invalid_argument("tau_r: must be > 0");
    if (!(distance_fading_exponent >= 0.0 && distance_fading_exponent <= 3.0))
        throw std::invalid_argument("lambda: must be in [0,3]");
}

std::size_t count_surround(const std::vector<Vec2>& positions, const SpaceTopology& space,
                           std::size_t i, double r) {
    const double r2 = r * r;
    std::size_t count = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j == i) continue;
        if (displacement(space, positions[i], positions[j]).norm_sq() <= r2) ++count;
    }
    return count;
}

Mode decide_behavior(Mode prev, double u, double s, double t) {
    if (u > s * (1.0 + t)) return Mode::Isolate;
    if (u < s * (1.0 - t)) return Mode::Socialize;
    return prev;
}

double excitation(double u, double s, double t) {
    const double band = s * t;
    if (band == 0.0) return u == s ? 0.0 : 1.0;
    return std::min(std::abs(u - s) / band, 1.0);
}

namespace {

// 1 / r^lambda with fast paths for the integer exponents the sweeps use.
double inverse_power(double r, double lambda) {
    if (lambda == 0.0) return 1.0;
    if (lambda == 1.0) return 1.0 / r;
    if (lambda == 2.0) return 1.0 / (r * r);
    if (lambda == 3.0) return 1.0 / (r * r * r);
    return std::pow(r, -lambda);
}

}  // namespace

Vec2 social_tension(const std::vector<Vec2>& positions, const SocialGraph& graph,
                    const SpaceTopology& space, std::size_t i, double lambda, Mode mode) {
    const auto& out = graph.out_edges(static_cast<NodeId>(i));
    Vec2 total;

    // The direction comes from the true displacement (zero when coincident,
    // where no direction exists); only the magnitude denominator is clamped.
    auto pull = [&](std::size_t j) {
        Vec2 d = displacement(space, positions[i], positions[j]);
        return inverse_power(std::max(d.norm(), kMinTensionDistance), lambda) * unit_or_zero(d);
    };

    if (mode == Mode::Socialize) {
        // Only acquaintances pull; strangers have weight zero.
        for (const auto& e : out) {
            if (e.dest == i || e.weight == 0.0) continue;
            total += e.weight * pull(e.dest);
        }
        return total;
    }

    // Isolate: every other individual pushes with weight (1 - acquaintance).
    // Walk all j with a cursor into the sorted out-edge row to pick up the
    // tie weights without per-j lookups.
    std::size_t cursor = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (j == i) continue;
        while (cursor < out.size() && out[cursor].dest < j) ++cursor;
        double w = (cursor < out.size() && out[cursor].dest == j) ? out[cursor].weight : 0.0;
        if (w == 1.0) continue;  // full acquaintance: no repulsion
        total += -(1.0 - w) * pull(j);
    }
    return total;
}

}  // namespace simps
