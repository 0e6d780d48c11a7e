#include "simps/contact.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "simps/format.hpp"

namespace simps {

ContactLedger::ContactLedger(std::size_t node_count, double range, int debounce, double dt)
    : n_(node_count), range_(range), debounce_(debounce), dt_(dt) {
    if (node_count < 1) throw std::invalid_argument("contact: node count must be >= 1");
    if (!(range > 0.0)) throw std::invalid_argument("contact.range: must be > 0");
    if (debounce < 1) throw std::invalid_argument("contact.debounce: must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("dt: must be > 0");
    tracks_.resize(n_ * (n_ - 1) / 2);
}

std::size_t ContactLedger::pair_index(std::size_t i, std::size_t j) const {
    // row-major over the strict upper triangle
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void ContactLedger::close_session(std::size_t i, std::size_t j, PairTrack& track) {
    closed_.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j),
                       track.session_start * dt_, track.last_in * dt_});
    if (track.last_in > track.session_start)
        contact_durations_.push_back((track.last_in - track.session_start) * dt_);
    track.prev_end = track.last_in;
    track.session_start = -1;
    track.last_in = -1;
    track.misses = 0;
}

void ContactLedger::observe(const std::vector<Vec2>& positions, const SpaceTopology& space) {
    if (positions.size() != n_)
        throw std::invalid_argument("contact: position count does not match node count");
    const long k = samples_++;
    const double r2 = range_ * range_;

    for (std::size_t i = 0; i + 1 < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            PairTrack& track = tracks_[pair_index(i, j)];
            const bool in_range =
                displacement(space, positions[i], positions[j]).norm_sq() <= r2;

            if (track.session_start >= 0) {
                if (in_range) {
                    track.last_in = k;
                    track.misses = 0;
                } else if (++track.misses >= debounce_) {
                    close_session(i, j, track);
                }
            } else if (in_range) {
                if (track.prev_end >= 0)
                    intercontact_durations_.push_back((k - track.prev_end) * dt_);
                track.session_start = k;
                track.last_in = k;
                track.misses = 0;
            }
        }
    }
}

std::vector<ContactEvent> ContactLedger::events() const {
    std::vector<ContactEvent> out = closed_;
    std::sort(out.begin(), out.end(), [](const ContactEvent& x, const ContactEvent& y) {
        if (x.start_s != y.start_s) return x.start_s < y.start_s;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

ContactDurations ContactLedger::durations() const {
    return {contact_durations_, intercontact_durations_};
}

void ContactLedger::write_events_csv(std::ostream& out) const {
    out << "node_a,node_b,start_s,end_s\n";
    for (const ContactEvent& e : events())
        out << e.a << "," << e.b << "," << fmt_g(e.start_s) << "," << fmt_g(e.end_s) << "\n";
}

void ContactLedger::write_durations_csv(std::ostream& out) const {
    out << "kind,duration_s\n";
    for (double d : contact_durations_) out << "contact," << fmt_g(d) << "\n";
    for (double d : intercontact_durations_) out << "intercontact," << fmt_g(d) << "\n";
}

}  // namespace simps
