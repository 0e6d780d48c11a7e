#pragma once

#include <iosfwd>
#include <string>

#include "simps/simulator.hpp"

namespace simps {

// Plain-text scenario document: one `key = value` per line, `#` comments.
// Every key is optional (defaults reproduce the standard setup); unknown and
// duplicate keys are errors. Recognized keys:
//   n, graph.type, graph.d, graph.file, s.mean, s.var, t.low, t.high,
//   vmax.mean, vmax.var, amax.mean, amax.var, r_soc, tau_r, tau_r.stagger,
//   lambda, space.kind, space.l, dt, t_max, contact.range, contact.debounce,
//   seed, edge_weight
// graph.type: scale_free | random | file. space.kind: periodic | infinite.
// edge_weight: uniform | constant:<w>. tau_r.stagger: on | off.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);

// Full resolved echo: every effective parameter, parseable right back into
// the identical scenario.
void write_scenario(const Scenario& sc, std::ostream& out);

}  // namespace simps
