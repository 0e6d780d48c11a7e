#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "simps/simulator.hpp"
#include "simps/social_graph.hpp"
#include "simps/space.hpp"
#include "simps/vec2.hpp"

namespace simps {

struct ContactEvent {
    NodeId a;  // a < b
    NodeId b;
    double start_s;
    double end_s;
};

struct ContactDurations {
    std::vector<double> contact;       // seconds, all > 0
    std::vector<double> intercontact;  // seconds, all > 0
};

// Range-sensing emulation over unordered pairs. Feed it one position sample
// per time step, in order; a pair within `range` opens or continues a
// session, and a session closes only after `debounce` consecutive
// out-of-range samples, ending at its last in-range sample. Gaps between
// successive sessions of a pair become inter-contact samples. Sessions and
// gaps still open when sampling stops are censored: they never appear in the
// outputs.
class ContactLedger {
public:
    ContactLedger(std::size_t node_count, double range, int debounce, double dt);

    void observe(const std::vector<Vec2>& positions, const SpaceTopology& space);

    long samples_seen() const { return samples_; }

    // Closed sessions so far, sorted by (start, a, b). Single-sample
    // sessions appear here with start == end.
    std::vector<ContactEvent> events() const;

    // Positive-length closed sessions and gaps, in seconds.
    ContactDurations durations() const;

    void write_events_csv(std::ostream& out) const;
    void write_durations_csv(std::ostream& out) const;

private:
    struct PairTrack {
        long session_start = -1;  // sample index; -1 = no active session
        long last_in = -1;        // last in-range sample of the active session
        int misses = 0;
        long prev_end = -1;  // end of the last closed session, anchors the next gap
    };

    std::size_t pair_index(std::size_t i, std::size_t j) const;  // i < j
    void close_session(std::size_t i, std::size_t j, PairTrack& track);

    std::size_t n_;
    double range_;
    int debounce_;
    double dt_;
    long samples_ = 0;

    std::vector<PairTrack> tracks_;               // n*(n-1)/2, row-major over i < j
    std::vector<ContactEvent> closed_;            // in close order; sorted copies on demand
    std::vector<double> contact_durations_;       // > 0 only
    std::vector<double> intercontact_durations_;  // > 0 only
};

// Observer adapter: samples the simulator's positions every time it fires.
class ContactTracker : public Observer {
public:
    explicit ContactTracker(const Scenario& scenario)
        : ledger_(scenario.population.n, scenario.contact.range, scenario.contact.debounce,
                  scenario.time.dt) {}

    void on_sample(Simulator& sim) override {
        ledger_.observe(sim.state().positions, sim.space());
    }

    ContactLedger& ledger() { return ledger_; }
    const ContactLedger& ledger() const { return ledger_; }

private:
    ContactLedger ledger_;
};

}  // namespace simps
