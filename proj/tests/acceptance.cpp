// Acceptance battery: nine numbered end-to-end checks, each printing one
// PASS/FAIL line. Run with a criterion number (1-9) to check just that one,
// or with no arguments to run the whole battery. The exit code is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "simps/analysis.hpp"
#include "simps/behavior.hpp"
#include "simps/contact.hpp"
#include "simps/neighbor_grid.hpp"
#include "simps/simulator.hpp"
#include "simps/social_graph.hpp"
#include "simps/space.hpp"
#include "simps/trace.hpp"

namespace {

using namespace simps;

struct Outcome {
    bool pass = false;
    std::string detail;
};

constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5};
constexpr double kFitLow = 10.0;
constexpr double kFitHigh = 300.0;

Scenario base_scenario(std::uint64_t seed) {
    Scenario sc;  // stock setup: 100 agents, heavy-hub graph, 3600 s horizon
    sc.seed = seed;
    return sc;
}

ContactDurations run_collect(const Scenario& sc) {
    Simulator sim(sc);
    ContactTracker tracker(sc);
    sim.add_observer(&tracker);
    sim.run();
    return tracker.ledger().durations();
}

// Contact-length power-law exponent and fit quality for one run.
TailFit contact_fit(const Scenario& sc) {
    const ContactDurations d = run_collect(sc);
    return fit_power_law(ccdf(d.contact), kFitLow, kFitHigh);
}

struct SeedSummary {
    double alpha_mean = 0.0;
    double r2_mean = 0.0;
};

SeedSummary per_seed_contact_fit(Scenario sc) {
    SeedSummary out;
    for (std::uint64_t s : kSeeds) {
        sc.seed = s;
        const TailFit f = contact_fit(sc);
        out.alpha_mean += f.exponent;
        out.r2_mean += f.r2;
    }
    out.alpha_mean /= std::size(kSeeds);
    out.r2_mean /= std::size(kSeeds);
    return out;
}

ContactDurations pooled_durations(Scenario sc) {
    ContactDurations pooled;
    for (std::uint64_t s : kSeeds) {
        sc.seed = s;
        const ContactDurations d = run_collect(sc);
        pooled.contact.insert(pooled.contact.end(), d.contact.begin(), d.contact.end());
        pooled.intercontact.insert(pooled.intercontact.end(), d.intercontact.begin(),
                                   d.intercontact.end());
    }
    return pooled;
}

std::string num(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

// 1. Contact lengths from the stock setup follow a heavy tail: exponent near
//    1.2, straight on log-log axes, and the whole check stays under a minute.
Outcome criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const SeedSummary sum = per_seed_contact_fit(base_scenario(0));
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const bool pass = sum.alpha_mean >= 0.9 && sum.alpha_mean <= 1.5 && sum.r2_mean >= 0.95 &&
                      elapsed <= 60.0;
    return {pass, "alpha_mean=" + num(sum.alpha_mean) + " (want 1.2 +/- 0.3), r2_mean=" +
                      num(sum.r2_mean) + " (want >= 0.95), elapsed_s=" + num(elapsed) +
                      " (budget 60)"};
}

// 2. The tail exponent barely moves when the heavy-hub relationship graph is
//    swapped for a degree-matched flat random one.
Outcome criterion_2() {
    Scenario hubs = base_scenario(0);
    Scenario flat = base_scenario(0);
    flat.graph.type = GraphSpec::Type::Random;

    const SeedSummary a = per_seed_contact_fit(hubs);
    const SeedSummary b = per_seed_contact_fit(flat);
    const double gap = std::abs(a.alpha_mean - b.alpha_mean);
    return {gap < 0.3, "alpha(hub graph)=" + num(a.alpha_mean) + ", alpha(flat graph)=" +
                           num(b.alpha_mean) + ", |gap|=" + num(gap) + " (want < 0.3)"};
}

// 3. The bend where the contact tail falls off tracks the observation window:
//    longer horizons push it out, monotonically.
Outcome criterion_3() {
    std::vector<double> cutoffs;
    std::string detail = "cutoff_s:";
    bool all_found = true;
    for (double horizon : {600.0, 3600.0, 36000.0}) {
        Scenario sc = base_scenario(0);
        sc.time.t_max = horizon;
        const ContactDurations pooled = pooled_durations(sc);
        const std::optional<double> c = detect_cutoff(ccdf(pooled.contact));
        detail += " t_max=" + num(horizon) + " -> " + (c ? num(*c) : std::string("none"));
        if (c)
            cutoffs.push_back(*c);
        else
            all_found = false;
    }
    bool increasing = all_found && cutoffs.size() == 3;
    for (std::size_t i = 1; increasing && i < cutoffs.size(); ++i)
        increasing = cutoffs[i] > cutoffs[i - 1];
    return {increasing, detail + (increasing ? " (strictly increasing)" : " (not increasing)")};
}

// 4. Switching off distance fading flips the better tail model for the pauses
//    between meetings: flat attention favors a stretched-exponential tail,
//    distance-weighted attention favors a straight power law. Contact lengths
//    themselves stay power-law.
Outcome criterion_4() {
    Scenario flat_attention = base_scenario(0);
    flat_attention.perception.distance_fading_exponent = 0.0;
    Scenario faded_attention = base_scenario(0);
    faded_attention.perception.distance_fading_exponent = 1.0;

    const ContactDurations flat = pooled_durations(flat_attention);
    const ContactDurations faded = pooled_durations(faded_attention);

    const EmpiricalCcdf flat_gap = ccdf(flat.intercontact);
    const EmpiricalCcdf faded_gap = ccdf(faded.intercontact);
    const EmpiricalCcdf faded_len = ccdf(faded.contact);

    const double flat_pl = fit_power_law(flat_gap, kFitLow, kFitHigh).r2;
    const double flat_wb = fit_weibull_tail(flat_gap, kFitLow, kFitHigh).r2;
    const double faded_pl = fit_power_law(faded_gap, kFitLow, kFitHigh).r2;
    const double faded_wb = fit_weibull_tail(faded_gap, kFitLow, kFitHigh).r2;
    const double len_pl = fit_power_law(faded_len, kFitLow, kFitHigh).r2;
    const double len_wb = fit_weibull_tail(faded_len, kFitLow, kFitHigh).r2;

    const bool pass = flat_wb > flat_pl && faded_pl > faded_wb && len_pl > len_wb;
    return {pass,
            "gaps, fading off: weibull r2 " + num(flat_wb) + " vs powerlaw " + num(flat_pl) +
                " (want weibull ahead); gaps, fading on: powerlaw " + num(faded_pl) +
                " vs weibull " + num(faded_wb) + " (want powerlaw ahead); lengths, fading on: " +
                "powerlaw " + num(len_pl) + " vs weibull " + num(len_wb) +
                " (want powerlaw ahead)"};
}

// 5. Shrinking the integration step by 10x leaves the pooled contact-tail
//    exponent essentially unchanged.
Outcome criterion_5() {
    Scenario coarse = base_scenario(0);
    Scenario fine = base_scenario(0);
    fine.time.dt = 0.1;

    const double a_coarse =
        fit_power_law(ccdf(pooled_durations(coarse).contact), kFitLow, kFitHigh).exponent;
    const double a_fine =
        fit_power_law(ccdf(pooled_durations(fine).contact), kFitLow, kFitHigh).exponent;
    const double gap = std::abs(a_coarse - a_fine);
    return {gap <= 0.2, "alpha(dt=1)=" + num(a_coarse) + ", alpha(dt=0.1)=" + num(a_fine) +
                            ", |gap|=" + num(gap) + " (want <= 0.2)"};
}

// 6. Hard invariants hold over a full run: speed and drive stay capped, the
//    braking headroom never goes negative, familiarity and strangeness are
//    exact complements, the comfort band is sticky from both sides, and
//    shortest-path displacement on the torus is exactly antisymmetric.
Outcome criterion_6() {
    std::string why;

    Scenario sc = base_scenario(11);
    Simulator sim(sc);
    sim.run();
    const StepDiagnostics& d = sim.diagnostics();
    if (!(d.max_speed_ratio <= 1.0 + 1e-9)) why += " speed ratio " + num(d.max_speed_ratio) + ";";
    if (!(d.min_accel_limit >= 0.0)) why += " accel headroom " + num(d.min_accel_limit) + ";";
    if (!(d.max_willingness_norm <= 1.0 + 1e-9))
        why += " drive norm " + num(d.max_willingness_norm) + ";";
    const std::uint64_t expected_updates = 100ull * 3600ull;
    if (d.agent_updates != expected_updates) why += " update count " + num(double(d.agent_updates)) + ";";

    const SocialGraph& g = sim.graph();
    for (NodeId i = 0; i < g.node_count(); i += 7)
        for (NodeId j = 0; j < g.node_count(); j += 3)
            if (i != j && g.acquaintance(i, j) + g.strangeness(i, j) != 1.0) {
                why += " familiarity complement broke at (" + num(i) + "," + num(j) + ");";
                goto complement_done;
            }
complement_done:

    // Inside the comfort band the previous mode wins, from either side.
    if (decide_behavior(Mode::Socialize, 2.5, 2.5, 0.2) != Mode::Socialize ||
        decide_behavior(Mode::Isolate, 2.5, 2.5, 0.2) != Mode::Isolate ||
        decide_behavior(Mode::Socialize, 2.0, 2.5, 0.2) != Mode::Socialize ||  // exact low edge
        decide_behavior(Mode::Isolate, 3.0, 2.5, 0.2) != Mode::Isolate ||      // exact high edge
        decide_behavior(Mode::Isolate, 1.9, 2.5, 0.2) != Mode::Socialize ||
        decide_behavior(Mode::Socialize, 3.1, 2.5, 0.2) != Mode::Isolate)
        why += " sticky comfort band broke;";

    const SpaceTopology torus = SpaceTopology::periodic(200.0);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coord(0.0, 200.0);
    for (int k = 0; k < 10000; ++k) {
        const Vec2 a{coord(rng), coord(rng)};
        const Vec2 b{coord(rng), coord(rng)};
        const Vec2 fwd = displacement(torus, a, b);
        const Vec2 bwd = displacement(torus, b, a);
        if (fwd.x != -bwd.x || fwd.y != -bwd.y) {
            why += " wraparound displacement not antisymmetric;";
            break;
        }
    }

    if (why.empty()) return {true, "caps, complements, sticky band, and wraparound all exact"};
    return {false, "violated:" + why};
}

// 7. The same seed gives byte-identical outputs, twice over, in two setups.
Outcome criterion_7() {
    auto fingerprint = [](const Scenario& sc) {
        std::ostringstream trace;
        Simulator sim(sc);
        TraceWriter writer(trace);
        ContactTracker tracker(sc);
        sim.add_observer(&writer);
        sim.add_observer(&tracker);
        sim.run();
        std::ostringstream events;
        tracker.ledger().write_events_csv(events);
        return trace.str() + "\x1f" + events.str();
    };

    Scenario stock = base_scenario(42);
    stock.time.t_max = 600.0;

    Scenario variant = stock;
    variant.seed = 43;
    variant.space_kind = SpaceKind::Infinite;
    variant.stagger_perception = true;
    variant.use_grid = true;

    const bool stock_same = fingerprint(stock) == fingerprint(stock);
    const bool variant_same = fingerprint(variant) == fingerprint(variant);
    return {stock_same && variant_same,
            std::string("stock rerun ") + (stock_same ? "identical" : "DIVERGED") +
                ", staggered open-space rerun " + (variant_same ? "identical" : "DIVERGED")};
}

// 8. The measuring instruments agree with independent references: the tail
//    fitters recover known synthetic distributions, and the bucket index
//    returns exactly what a full pairwise scan returns.
Outcome criterion_8() {
    std::string why;

    {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        std::vector<double> samples(100000);
        for (double& x : samples) x = std::pow(1.0 - uni(rng), -1.0 / 1.5);
        const TailFit f = fit_power_law(ccdf(std::move(samples)), 1.0, 30.0);
        if (std::abs(f.exponent - 1.5) > 0.1)
            why += " straight-tail exponent " + num(f.exponent) + " (want 1.5 +/- 0.1);";
    }
    {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        std::vector<double> samples(100000);
        for (double& x : samples) x = 10.0 * std::pow(-std::log(1.0 - uni(rng)), 1.0 / 0.8);
        const TailFit f = fit_weibull_tail(ccdf(std::move(samples)), 2.0, 60.0);
        if (std::abs(f.exponent - 0.8) > 0.1)
            why += " stretched-tail shape " + num(f.exponent) + " (want 0.8 +/- 0.1);";
    }
    {
        std::mt19937_64 rng(8);
        int mismatches = 0;
        for (int state = 0; state < 100; ++state) {
            const bool wrapped = state % 2 == 0;
            const SpaceTopology space =
                wrapped ? SpaceTopology::periodic(50.0) : SpaceTopology::infinite();
            std::uniform_real_distribution<double> coord(wrapped ? 0.0 : -60.0,
                                                         wrapped ? 50.0 : 60.0);
            std::vector<Vec2> pos(80);
            for (Vec2& p : pos) p = {coord(rng), coord(rng)};
            const double cell = wrapped ? 3.0 : 4.0;
            std::uniform_real_distribution<double> rad(0.1, cell);
            const double r = rad(rng);

            const UniformGrid grid(pos, space, cell);
            for (std::size_t i = 0; i < pos.size(); ++i) {
                std::size_t brute = 0;
                for (std::size_t j = 0; j < pos.size(); ++j)
                    if (j != i && distance(space, pos[i], pos[j]) <= r) ++brute;
                if (grid.count_within(i, r) != brute) ++mismatches;
            }
        }
        if (mismatches > 0)
            why += " bucket index disagreed with the pairwise scan " + num(mismatches) + "x;";
    }

    if (why.empty())
        return {true, "fitters recover planted exponents; bucket index matches pairwise scan"};
    return {false, "violated:" + why};
}

// 9. Two-body closed form: a mutually bonded pair at rest accelerates
//    straight at each other at the hardware cap and closes monotonically;
//    an overcrowded unacquainted pair pushes straight apart. First-step
//    kinematics match hand-computed values.
Outcome criterion_9() {
    std::string why;

    Scenario sc;
    sc.population.n = 2;
    sc.population.sociability_variance = 0.0;   // s = 2.5 exactly
    sc.population.tolerance_low = 0.5;          // t = 0.5 exactly
    sc.population.tolerance_high = 0.5;
    sc.population.v_max_variance = 0.0;         // v_max = 1.34 exactly
    sc.population.a_max_variance = 0.0;         // a_max = 1.3 exactly
    sc.space_kind = SpaceKind::Infinite;
    sc.seed = 1;

    auto make_state = [](Vec2 p0, Vec2 p1, Mode mode, double u) {
        SimulationState st;
        st.step_index = 0;
        st.positions = {p0, p1};
        st.velocities = {{0.0, 0.0}, {0.0, 0.0}};
        st.modes = {mode, mode};
        st.perceived = {u, u};
        return st;
    };
    auto advance = [](SimulationState st, const Simulator& sim) {
        const AgentStep a = sim.compute_agent_step(st, 0, false);
        const AgentStep b = sim.compute_agent_step(st, 1, false);
        st.positions = {a.position, b.position};
        st.velocities = {a.velocity, b.velocity};
        st.modes = {a.mode, b.mode};
        st.perceived = {a.perceived, b.perceived};
        ++st.step_index;
        return st;
    };
    const SpaceTopology open = SpaceTopology::infinite();

    {  // Bonded pair, 30 m apart, starving for company (u = 0).
        std::vector<SocialGraph::Edge> edges = {{0, 1, 1.0}, {1, 0, 1.0}};
        Simulator sim(sc, SocialGraph(2, std::move(edges)));
        SimulationState st = make_state({0.0, 0.0}, {30.0, 0.0}, Mode::Socialize, 0.0);

        // Hand-computed first step: full drive toward the partner, capped by
        // a_max = 1.3 (braking headroom from rest is v_max/dt = 1.34), so
        // v = 1.3 m/s head-on and each covers 1.3 m.
        const SimulationState first = advance(st, sim);
        if (std::abs(first.velocities[0].x - 1.3) > 1e-12 ||
            std::abs(first.velocities[0].y) > 1e-12 ||
            std::abs(first.velocities[1].x + 1.3) > 1e-12 ||
            std::abs(first.positions[0].x - 1.3) > 1e-12 ||
            std::abs(first.positions[1].x - 28.7) > 1e-12)
            why += " bonded first step off the closed form;";

        double prev = distance(open, st.positions[0], st.positions[1]);
        st = first;
        bool reached = false;
        for (int k = 0; k < 50; ++k) {
            const double now = distance(open, st.positions[0], st.positions[1]);
            if (now >= prev) {
                why += " bonded pair stopped closing at " + num(now) + " m;";
                break;
            }
            prev = now;
            if (now <= 3.5) {
                reached = true;
                break;
            }
            st = advance(st, sim);
        }
        if (!reached && why.empty()) why += " bonded pair never reached arm's length;";
    }

    {  // Unacquainted pair, 5 m apart, overcrowded (u = 5 > comfort top 3.75).
        Simulator sim(sc, SocialGraph(2));
        SimulationState st = make_state({0.0, 0.0}, {5.0, 0.0}, Mode::Isolate, 5.0);

        const SimulationState first = advance(st, sim);
        if (std::abs(first.velocities[0].x + 1.3) > 1e-12 ||
            std::abs(first.velocities[1].x - 1.3) > 1e-12 ||
            std::abs(first.positions[0].x + 1.3) > 1e-12 ||
            std::abs(first.positions[1].x - 6.3) > 1e-12)
            why += " crowded first step off the closed form;";
        if (first.modes[0] != Mode::Isolate || first.modes[1] != Mode::Isolate)
            why += " crowded pair flipped mode;";

        double prev = 5.0;
        st = first;
        for (int k = 0; k < 10; ++k) {
            const double now = distance(open, st.positions[0], st.positions[1]);
            if (now <= prev) {
                why += " crowded pair stopped separating at " + num(now) + " m;";
                break;
            }
            prev = now;
            st = advance(st, sim);
        }
    }

    if (why.empty())
        return {true, "first-step kinematics exact; approach and retreat both monotone"};
    return {false, "violated:" + why};
}

}  // namespace

int main(int argc, char** argv) {
    using Criterion = Outcome (*)();
    const Criterion criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                  criterion_6, criterion_7, criterion_8, criterion_9};

    int lo = 1, hi = 9;
    if (argc > 1) {
        const int k = std::atoi(argv[1]);
        if (k < 1 || k > 9) {
            std::cerr << "usage: " << argv[0] << " [criterion 1-9]\n";
            return 64;
        }
        lo = hi = k;
    }

    int failures = 0;
    for (int k = lo; k <= hi; ++k) {
        const Outcome out = criteria[k - 1]();
        std::cout << "ACCEPTANCE " << k << (out.pass ? " PASS: " : " FAIL: ") << out.detail
                  << std::endl;
        if (!out.pass) ++failures;
    }
    return failures;
}
