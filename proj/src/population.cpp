#include "simps/population.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "simps/rng.hpp"

namespace simps {

void PopulationParams::validate() const {
    if (n < 1) throw std::invalid_argument("n: population size must be >= 1");
    if (!(sociability_mean >= 0.0))
        throw std::invalid_argument("s.mean: sociability mean must be >= 0");
    if (!(sociability_variance >= 0.0) || !(v_max_variance >= 0.0) || !(a_max_variance >= 0.0))
        throw std::invalid_argument("variance parameters must be >= 0");
    if (!(tolerance_low > 0.0 && tolerance_low <= tolerance_high && tolerance_high < 1.0))
        throw std::invalid_argument("t.low/t.high: need 0 < low <= high < 1");
    if (!(v_max_mean > 0.0)) throw std::invalid_argument("vmax.mean: must be > 0");
    if (!(a_max_mean > 0.0)) throw std::invalid_argument("amax.mean: must be > 0");
}

namespace {

// Normal draw rejected until it clears `floor`. With zero variance the mean
// is returned directly (the degenerate case must stay usable: variance 0
// with mean 0 is how the everyone-isolates setting is expressed).
double positive_normal(std::mt19937_64& rng, double mean, double variance, double floor,
                       bool strict) {
    if (variance == 0.0) return mean;
    std::normal_distribution<double> dist(mean, std::sqrt(variance));
    for (;;) {
        double x = dist(rng);
        if (strict ? x > floor : x >= floor) return x;
    }
}

}  // namespace

std::vector<Individual> sample_population(const PopulationParams& params) {
    params.validate();
    std::mt19937_64 rng = make_stream(params.seed, StreamPurpose::Population);
    std::uniform_real_distribution<double> tol(params.tolerance_low, params.tolerance_high);

    std::vector<Individual> pop;
    pop.reserve(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        Individual ind;
        ind.id = static_cast<NodeId>(i);
        ind.s = positive_normal(rng, params.sociability_mean, params.sociability_variance, 0.0,
                                /*strict=*/false);
        ind.t = tol(rng);
        ind.v_max = positive_normal(rng, params.v_max_mean, params.v_max_variance, 0.0,
                                    /*strict=*/true);
        ind.a_max = positive_normal(rng, params.a_max_mean, params.a_max_variance, 0.0,
                                    /*strict=*/true);
        pop.push_back(ind);
    }
    return pop;
}

void write_population_csv(const std::vector<Individual>& pop, std::ostream& out) {
    out << "id,s,t,v_max,a_max\n";
    for (const Individual& ind : pop)
        out << ind.id << "," << ind.s << "," << ind.t << "," << ind.v_max << "," << ind.a_max
            << "\n";
}

}  // namespace simps
