#include "simps/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "simps/rng.hpp"

namespace simps {

long TimeSpec::step_count() const {
    return static_cast<long>(std::ceil(t_max / dt - 1e-9));
}

SpaceTopology Scenario::topology() const {
    return space_kind == SpaceKind::PeriodicSquare ? SpaceTopology::periodic(space_side)
                                                   : SpaceTopology::infinite();
}

long Scenario::perception_period() const {
    const double ratio = perception.half_perception_time / time.dt;
    const long period = std::lround(ratio);
    if (period < 1 ||
        std::abs(period * time.dt - perception.half_perception_time) >
            1e-9 * std::max(1.0, perception.half_perception_time))
        throw std::invalid_argument("tau_r not a multiple of dt");
    return period;
}

void Scenario::validate() const {
    population.validate();
    perception.validate();
    if (!(time.dt > 0.0)) throw std::invalid_argument("dt: must be > 0");
    if (!(time.t_max >= time.dt)) throw std::invalid_argument("t_max: must be >= dt");
    if (!(space_side > 0.0)) throw std::invalid_argument("space.l: must be > 0");
    if (!(contact.range > 0.0)) throw std::invalid_argument("contact.range: must be > 0");
    if (contact.debounce < 1) throw std::invalid_argument("contact.debounce: must be >= 1");
    if (graph.type == GraphSpec::Type::File && graph.file.empty())
        throw std::invalid_argument("graph.file: required when graph.type = file");
    perception_period();  // throws when tau_r is not an integer number of steps
}

namespace {

SocialGraph build_graph(const Scenario& sc) {
    const std::size_t n = sc.population.n;
    switch (sc.graph.type) {
        case GraphSpec::Type::ScaleFree:
            return generate_scale_free(n, sc.graph.avg_degree, sc.seed, sc.graph.weights);
        case GraphSpec::Type::Random:
            return generate_random(n, sc.graph.avg_degree, sc.seed, sc.graph.weights);
        case GraphSpec::Type::File:
            return load_graph_file(sc.graph.file);
    }
    throw std::logic_error("unreachable graph type");
}

}  // namespace

Simulator::Simulator(const Scenario& scenario) : Simulator(scenario, build_graph(scenario)) {}

Simulator::Simulator(const Scenario& scenario, SocialGraph graph)
    : scenario_(scenario), space_(scenario.topology()), graph_(std::move(graph)) {
    scenario_.validate();
    if (graph_.node_count() != scenario_.population.n)
        throw std::invalid_argument("graph node count does not match n");
    initialize();
}

void Simulator::initialize() {
    const std::size_t n = scenario_.population.n;
    perception_period_ = scenario_.perception_period();

    PopulationParams pop_params = scenario_.population;
    pop_params.seed = scenario_.seed;
    population_ = sample_population(pop_params);

    state_.positions.resize(n);
    state_.velocities.assign(n, Vec2{});
    state_.modes.resize(n);
    state_.perceived.resize(n);
    state_.step_index = 0;

    std::mt19937_64 placement = make_stream(scenario_.seed, StreamPurpose::Placement);
    std::uniform_real_distribution<double> coord(0.0, scenario_.space_side);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = coord(placement);
        const double y = coord(placement);
        state_.positions[i] = {x, y};
    }

    perception_phase_.assign(n, 0);
    if (scenario_.stagger_perception && perception_period_ > 1) {
        std::mt19937_64 phases = make_stream(scenario_.seed, StreamPurpose::PerceptionPhase);
        std::uniform_int_distribution<long> phase(0, perception_period_ - 1);
        for (std::size_t i = 0; i < n; ++i) perception_phase_[i] = phase(phases);
    }

    // The perceived surround starts at the true count, and the initial mode
    // follows from comparing it with the sociability target (the hysteresis
    // has no earlier state to hold).
    for (std::size_t i = 0; i < n; ++i) {
        state_.perceived[i] = static_cast<double>(
            count_surround(state_.positions, space_, i, scenario_.perception.social_radius));
        state_.modes[i] =
            state_.perceived[i] <= population_[i].s ? Mode::Socialize : Mode::Isolate;
    }

    scratch_ = state_;
}

bool Simulator::perception_due(long step_index, std::size_t i) const {
    return (step_index + perception_phase_[i]) % perception_period_ == 0;
}

std::size_t Simulator::surround_count(const SimulationState& snapshot, std::size_t i) const {
    if (grid_ && &snapshot.positions == &state_.positions)
        return grid_->count_within(i, scenario_.perception.social_radius);
    return count_surround(snapshot.positions, space_, i, scenario_.perception.social_radius);
}

AgentStep Simulator::compute_agent_step(const SimulationState& snapshot, std::size_t i,
                                        bool refresh_perception) const {
    const Individual& ind = population_[i];

    double u = snapshot.perceived[i];
    if (refresh_perception)
        u = update_perceived_surround(u, static_cast<double>(surround_count(snapshot, i)));

    const Mode mode = decide_behavior(snapshot.modes[i], u, ind.s, ind.t);
    const double e = excitation(u, ind.s, ind.t);
    const Vec2 tension = social_tension(snapshot.positions, graph_, space_, i,
                                        scenario_.perception.distance_fading_exponent, mode);
    const Vec2 w = willingness(tension, e);
    const Vec2 request = acceleration_request(w, ind.a_max);

    AgentStep out;
    out.mode = mode;
    out.perceived = u;
    out.willingness_norm = w.norm();

    KinematicState kin{snapshot.positions[i], snapshot.velocities[i]};
    if (request.norm_sq() > 0.0)
        out.accel_limit = limit_acceleration(kin.velocity, (1.0 / request.norm()) * request,
                                             ind.v_max, scenario_.time.dt);
    const KinematicState next = integrate(kin, request, ind.v_max, scenario_.time.dt, space_);
    out.position = next.position;
    out.velocity = next.velocity;
    return out;
}

void Simulator::add_observer(Observer* obs) { observers_.push_back(obs); }

void Simulator::step() {
    const std::size_t n = scenario_.population.n;

    if (scenario_.use_grid) {
        // contact.range > 0 is validated, so the cell edge is always positive
        const double cell =
            std::max(scenario_.perception.social_radius, scenario_.contact.range);
        grid_ = std::make_unique<UniformGrid>(state_.positions, space_, cell);
    }

    last_transitions_.clear();
    const double next_time = (state_.step_index + 1) * scenario_.time.dt;

    for (std::size_t i = 0; i < n; ++i) {
        const AgentStep a =
            compute_agent_step(state_, i, perception_due(state_.step_index, i));
        scratch_.positions[i] = a.position;
        scratch_.velocities[i] = a.velocity;
        scratch_.modes[i] = a.mode;
        scratch_.perceived[i] = a.perceived;

        if (a.mode != state_.modes[i])
            last_transitions_.push_back(
                {next_time, static_cast<NodeId>(i), state_.modes[i], a.mode});

        diagnostics_.min_accel_limit = std::min(diagnostics_.min_accel_limit, a.accel_limit);
        diagnostics_.max_willingness_norm =
            std::max(diagnostics_.max_willingness_norm, a.willingness_norm);
        diagnostics_.max_speed_ratio =
            std::max(diagnostics_.max_speed_ratio, a.velocity.norm() / population_[i].v_max);
        diagnostics_.agent_updates += 1;
    }

    grid_.reset();
    scratch_.step_index = state_.step_index + 1;
    std::swap(state_, scratch_);
}

void Simulator::run() {
    for (Observer* obs : observers_) obs->on_sample(*this);
    const long steps = scenario_.time.step_count();
    for (long k = 0; k < steps; ++k) {
        step();
        for (Observer* obs : observers_) obs->on_sample(*this);
    }
}

}  // namespace simps
