#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "simps/social_graph.hpp"

namespace simps {

// Per-individual traits, fixed for the whole run.
struct Individual {
    NodeId id = 0;
    double s = 0.0;      // target sociability, persons
    double t = 0.0;      // tolerance, fraction of s
    double v_max = 0.0;  // m/s
    double a_max = 0.0;  // m/s^2

    // Comfort band around the sociability target.
    double comfort_low() const { return s * (1.0 - t); }
    double comfort_high() const { return s * (1.0 + t); }
};

struct PopulationParams {
    std::size_t n = 100;
    double sociability_mean = 2.5;
    double sociability_variance = 1.0;
    double tolerance_low = 0.1;
    double tolerance_high = 0.7;
    double v_max_mean = 1.34;
    double v_max_variance = 0.26;
    double a_max_mean = 1.3;
    double a_max_variance = 0.4;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// Draws n individuals. Normal draws for s are resampled until >= 0, and for
// v_max / a_max until > 0; tolerance is uniform on [low, high]. Same seed,
// same population.
std::vector<Individual> sample_population(const PopulationParams& params);

// Audit dump, one row per individual: id,s,t,v_max,a_max
void write_population_csv(const std::vector<Individual>& pop, std::ostream& out);

}  // namespace simps
