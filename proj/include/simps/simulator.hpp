#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "simps/behavior.hpp"
#include "simps/kinematics.hpp"
#include "simps/neighbor_grid.hpp"
#include "simps/population.hpp"
#include "simps/social_graph.hpp"
#include "simps/space.hpp"
#include "simps/vec2.hpp"

namespace simps {

struct GraphSpec {
    enum class Type { ScaleFree, Random, File };
    Type type = Type::ScaleFree;
    double avg_degree = 5.0;
    std::string file;  // only for Type::File
    EdgeWeightSpec weights;
};

struct TimeSpec {
    double dt = 1.0;        // s
    double t_max = 3600.0;  // s

    // Number of steps covering [0, t_max]; tolerant of t_max/dt sitting a
    // rounding error below an integer.
    long step_count() const;
};

struct ContactSpec {
    double range = 6.0;  // m
    int debounce = 2;    // consecutive out-of-range samples that end a session
};

struct Scenario {
    PopulationParams population;  // .seed is overridden by the master seed below
    GraphSpec graph;
    PerceptionParams perception;
    SpaceKind space_kind = SpaceKind::PeriodicSquare;
    // Torus side; in infinite space, the side of the initial placement square.
    double space_side = 200.0;
    TimeSpec time;
    ContactSpec contact;
    std::uint64_t seed = 0;
    // Give every individual a random phase within the perception period
    // instead of refreshing everyone simultaneously. Off by default.
    bool stagger_perception = false;
    // Accelerate the surround counting with the bucket index. Results are
    // identical either way; default off (exact pairwise scan).
    bool use_grid = false;

    SpaceTopology topology() const;
    long perception_period() const;  // steps between perceived-surround refreshes
    void validate() const;           // throws std::invalid_argument
};

struct SimulationState {
    long step_index = 0;
    std::vector<Vec2> positions;
    std::vector<Vec2> velocities;
    std::vector<Mode> modes;
    std::vector<double> perceived;  // u, persons
};

struct ModeChange {
    double time_s;
    NodeId node;
    Mode from;
    Mode to;
};

// Run-wide extrema, checked by tests instead of asserts so they also guard
// optimized builds.
struct StepDiagnostics {
    double min_accel_limit = std::numeric_limits<double>::infinity();
    double max_willingness_norm = 0.0;
    double max_speed_ratio = 0.0;  // |v| / v_max, after each update
    std::uint64_t agent_updates = 0;
};

// Everything one individual's synchronous update produces.
struct AgentStep {
    Vec2 position;
    Vec2 velocity;
    Mode mode;
    double perceived;
    double accel_limit = std::numeric_limits<double>::infinity();  // +inf if nothing requested
    double willingness_norm = 0.0;
};

class Simulator;

// Sampled with the initial state and then after every step.
class Observer {
public:
    virtual ~Observer() = default;
    virtual void on_sample(Simulator& sim) = 0;
};

class Simulator {
public:
    // Builds graph and population from the scenario's master seed.
    explicit Simulator(const Scenario& scenario);
    // Uses the supplied graph (file-loaded or handcrafted) instead.
    Simulator(const Scenario& scenario, SocialGraph graph);

    const Scenario& scenario() const { return scenario_; }
    const SocialGraph& graph() const { return graph_; }
    const std::vector<Individual>& population() const { return population_; }
    const SpaceTopology& space() const { return space_; }
    const SimulationState& state() const { return state_; }
    double time() const { return state_.step_index * scenario_.time.dt; }
    const std::vector<ModeChange>& last_transitions() const { return last_transitions_; }
    const StepDiagnostics& diagnostics() const { return diagnostics_; }

    // Whether individual i refreshes its perceived surround during the step
    // that starts at step_index.
    bool perception_due(long step_index, std::size_t i) const;

    // Pure synchronous update of one individual: reads only the snapshot,
    // so evaluation order across individuals cannot matter.
    AgentStep compute_agent_step(const SimulationState& snapshot, std::size_t i,
                                 bool refresh_perception) const;

    void add_observer(Observer* obs);  // non-owning
    void step();
    void run();  // step_count() steps, observers sampled at t=0 and after each step

private:
    void initialize();
    std::size_t surround_count(const SimulationState& snapshot, std::size_t i) const;

    Scenario scenario_;
    SpaceTopology space_;
    SocialGraph graph_;
    std::vector<Individual> population_;
    std::vector<long> perception_phase_;  // per-individual offset in steps (0 unless staggered)
    long perception_period_ = 1;

    SimulationState state_;
    SimulationState scratch_;  // swap target for the synchronous update
    std::vector<ModeChange> last_transitions_;
    StepDiagnostics diagnostics_;
    std::vector<Observer*> observers_;
    std::unique_ptr<UniformGrid> grid_;  // rebuilt per step when use_grid is on
};

}  // namespace simps
