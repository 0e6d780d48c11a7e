#pragma once

#include <ostream>

#include "simps/simulator.hpp"

namespace simps {

// Emits `time_s,node_id,x_m,y_m,vx,vy,mode` rows for every individual, one
// block per retained sample. `decimate` keeps every k-th sample (the initial
// state is always sample 0 and therefore always kept).
class TraceWriter : public Observer {
public:
    explicit TraceWriter(std::ostream& out, long decimate = 1);
    void on_sample(Simulator& sim) override;

private:
    std::ostream& out_;
    long decimate_;
    long sample_ = 0;
};

// Emits `time_s,node_id,old_mode,new_mode` rows for every behavior switch.
class TransitionWriter : public Observer {
public:
    explicit TransitionWriter(std::ostream& out);
    void on_sample(Simulator& sim) override;

private:
    std::ostream& out_;
};

const char* mode_name(Mode m);

}  // namespace simps
