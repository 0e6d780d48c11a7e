#include "simps/trace.hpp"

#include <stdexcept>

#include "simps/format.hpp"

namespace simps {

const char* mode_name(Mode m) { return m == Mode::Socialize ? "socialize" : "isolate"; }

TraceWriter::TraceWriter(std::ostream& out, long decimate) : out_(out), decimate_(decimate) {
    if (decimate < 1) throw std::invalid_argument("decimate: must be >= 1");
    out_ << "time_s,node_id,x_m,y_m,vx,vy,mode\n";
}

void TraceWriter::on_sample(Simulator& sim) {
    const long k = sample_++;
    if (k % decimate_ != 0) return;
    const SimulationState& st = sim.state();
    const std::string t = fmt_g(sim.time());
    for (std::size_t i = 0; i < st.positions.size(); ++i) {
        out_ << t << "," << i << "," << fmt_g(st.positions[i].x) << ","
             << fmt_g(st.positions[i].y) << "," << fmt_g(st.velocities[i].x) << ","
             << fmt_g(st.velocities[i].y) << "," << mode_name(st.modes[i]) << "\n";
    }
}

TransitionWriter::TransitionWriter(std::ostream& out) : out_(out) {
    out_ << "time_s,node_id,old_mode,new_mode\n";
}

void TransitionWriter::on_sample(Simulator& sim) {
    for (const ModeChange& c : sim.last_transitions())
        out_ << fmt_g(c.time_s) << "," << c.node << "," << mode_name(c.from) << ","
             << mode_name(c.to) << "\n";
}

}  // namespace simps
