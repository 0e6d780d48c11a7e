#include "simps/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "simps/analysis.hpp"
#include "simps/contact.hpp"
#include "simps/format.hpp"
#include "simps/scenario_io.hpp"
#include "simps/simulator.hpp"
#include "simps/trace.hpp"

namespace simps::cli {

namespace fs = std::filesystem;

std::string default_output_dir() {
    const char* env = std::getenv("SIMPS_OUTPUT_DIR");
    return env && *env ? env : "out";
}

namespace {

fs::path prepare_out_dir(const std::string& requested) {
    const fs::path dir = requested.empty() ? default_output_dir() : requested;
    fs::create_directories(dir);
    return dir;
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    return f;
}

Scenario load_or_default(const std::string& path) {
    if (path.empty()) {
        Scenario sc;
        sc.validate();
        return sc;
    }
    return load_scenario_file(path);
}

// Reads `kind,duration_s` rows into per-kind sample lists.
void read_durations(const std::string& path, std::map<std::string, std::vector<double>>& into) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "kind,duration_s")
        throw std::runtime_error(path + ": expected header 'kind,duration_s'");
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": expected kind,duration_s");
        const std::string kind = line.substr(0, comma);
        const std::string value = line.substr(comma + 1);
        try {
            into[kind].push_back(std::stod(value));
        } catch (const std::exception&) {
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": bad duration '" + value + "'");
        }
    }
}

struct Moments {
    double mean = std::nan("");
    double stddev = std::nan("");
    std::size_t count = 0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    m.count = xs.size();
    if (xs.empty()) return m;
    double s = 0.0;
    for (double x : xs) s += x;
    m.mean = s / xs.size();
    if (xs.size() < 2) {
        m.stddev = 0.0;
        return m;
    }
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(ss / (xs.size() - 1));
    return m;
}

}  // namespace

int run_simulate(const SimulateOptions& opts) {
    try {
        Scenario sc = load_or_default(opts.scenario_path);
        if (opts.seed) sc.seed = *opts.seed;
        sc.use_grid = opts.grid;
        sc.validate();

        const fs::path dir = prepare_out_dir(opts.out_dir);

        Simulator sim(sc);

        {
            auto f = open_out(dir / "scenario_resolved.txt");
            write_scenario(sc, f);
        }
        {
            auto f = open_out(dir / "population.csv");
            write_population_csv(sim.population(), f);
        }

        ContactTracker tracker(sc);
        sim.add_observer(&tracker);

        auto transitions = open_out(dir / "transitions.csv");
        TransitionWriter transition_writer(transitions);
        sim.add_observer(&transition_writer);

        std::ofstream trace_file;
        std::unique_ptr<TraceWriter> trace_writer;
        if (opts.trace) {
            trace_file = open_out(dir / "trace.csv");
            trace_writer = std::make_unique<TraceWriter>(trace_file, opts.decimate);
            sim.add_observer(trace_writer.get());
        }

        sim.run();

        {
            auto f = open_out(dir / "contacts.csv");
            tracker.ledger().write_events_csv(f);
        }
        {
            auto f = open_out(dir / "durations.csv");
            tracker.ledger().write_durations_csv(f);
        }

        const ContactDurations durations = tracker.ledger().durations();
        const StepDiagnostics& diag = sim.diagnostics();
        std::cout << "simulated " << sc.population.n << " individuals, "
                  << sc.time.step_count() << " steps of " << fmt_g(sc.time.dt) << " s (seed "
                  << sc.seed << ")\n";
        std::cout << "contact events: " << tracker.ledger().events().size()
                  << ", contact samples: " << durations.contact.size()
                  << ", intercontact samples: " << durations.intercontact.size() << "\n";
        std::cout << "max |v|/v_max: " << fmt_g(diag.max_speed_ratio, 6)
                  << ", max |w|: " << fmt_g(diag.max_willingness_norm, 6)
                  << ", min accel limit: " << fmt_g(diag.min_accel_limit, 6) << "\n";
        std::cout << "wrote " << dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_analyze(const AnalyzeOptions& opts) {
    try {
        if (opts.duration_files.empty()) {
            std::cerr << "error: no duration files given\n";
            return 1;
        }
        std::map<std::string, std::vector<double>> by_kind;
        for (const std::string& path : opts.duration_files) read_durations(path, by_kind);

        const fs::path dir = prepare_out_dir(opts.out_dir);
        bool analyzed_any = false;
        bool all_feasible = true;

        for (auto& [kind, samples] : by_kind) {
            if (samples.empty()) {
                std::cerr << kind << ": no samples\n";
                continue;
            }
            const EmpiricalCcdf c = ccdf(samples);
            {
                auto f = open_out(dir / ("ccdf_" + kind + ".csv"));
                write_ccdf_csv(c, f);
            }
            for (const TailModel model : {TailModel::PowerLaw, TailModel::Weibull}) {
                const char* name = model == TailModel::PowerLaw ? "powerlaw" : "weibull";
                try {
                    const TailFit fit = model == TailModel::PowerLaw
                                            ? fit_power_law(c, opts.x_min, opts.x_max)
                                            : fit_weibull_tail(c, opts.x_min, opts.x_max);
                    auto f = open_out(dir / ("fit_" + kind + "_" + name + ".txt"));
                    write_fit_report(fit, f);
                    std::cout << kind << " " << name << ": exponent "
                              << fmt_g(fit.exponent, 6) << ", r2 " << fmt_g(fit.r2, 6) << " ("
                              << fit.points_used << " points in [" << fmt_g(opts.x_min) << ","
                              << fmt_g(opts.x_max) << "])\n";
                } catch (const std::exception& e) {
                    std::cerr << kind << " " << name << ": " << e.what() << "\n";
                    all_feasible = false;
                }
            }
            try {
                const auto cut = detect_cutoff(c);
                std::cout << kind << " cutoff_s: " << (cut ? fmt_g(*cut, 6) : "none") << "\n";
            } catch (const std::exception& e) {
                std::cout << kind << " cutoff_s: " << e.what() << "\n";
            }
            analyzed_any = true;
        }

        if (!analyzed_any) {
            std::cerr << "error: no samples in any input\n";
            return 1;
        }
        return all_feasible ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

struct SweepVariant {
    std::string name;
    Scenario scenario;
    std::string note;
};

// The canonical experiment grid: every aspect varies one knob against the
// standard setup.
std::vector<SweepVariant> make_variants(const std::string& aspect, const Scenario& base) {
    std::vector<SweepVariant> out;
    auto add = [&](const std::string& name, auto&& mutate, const std::string& note = "") {
        SweepVariant v{name, base, note};
        mutate(v.scenario);
        out.push_back(std::move(v));
    };

    if (aspect == "graph_type") {
        add("scale_free", [](Scenario& s) { s.graph.type = GraphSpec::Type::ScaleFree; });
        add("random", [](Scenario& s) { s.graph.type = GraphSpec::Type::Random; });
    } else if (aspect == "node_degree") {
        for (double d : {2.0, 5.0, 15.0, 50.0})
            add("d_" + fmt_g(d), [d](Scenario& s) { s.graph.avg_degree = d; });
    } else if (aspect == "sociability") {
        for (double m : {1.0, 2.5, 10.0})
            add("s_" + fmt_g(m), [m](Scenario& s) { s.population.sociability_mean = m; });
    } else if (aspect == "socialize_only") {
        add("r_soc_0", [](Scenario& s) { s.perception.social_radius = 0.0; },
            "surround always 0; everyone socializes");
    } else if (aspect == "isolate_only") {
        add("s_0_r_soc_full",
            [](Scenario& s) {
                s.population.sociability_mean = 0.0;
                s.population.sociability_variance = 0.0;
                s.perception.social_radius = std::sqrt(2.0) * s.space_side + 1.0;
            },
            "zero sociability; surround covers the whole torus");
    } else if (aspect == "social_distance") {
        for (double r : {1.0, 3.5, 15.0})
            add("r_soc_" + fmt_g(r), [r](Scenario& s) { s.perception.social_radius = r; });
    } else if (aspect == "reaction_time") {
        for (double t : {1.0, 4.0, 20.0})
            add("tau_r_" + fmt_g(t),
                [t](Scenario& s) { s.perception.half_perception_time = t; });
    } else if (aspect == "distance_cost") {
        for (double l : {0.0, 1.0, 2.0, 3.0})
            add("lambda_" + fmt_g(l),
                [l](Scenario& s) { s.perception.distance_fading_exponent = l; });
    } else if (aspect == "space") {
        add("infinite", [](Scenario& s) { s.space_kind = SpaceKind::Infinite; });
        for (double l : {20.0, 200.0, 2000.0})
            add("periodic_" + fmt_g(l), [l](Scenario& s) {
                s.space_kind = SpaceKind::PeriodicSquare;
                s.space_side = l;
            });
    } else if (aspect == "duration") {
        for (double t : {600.0, 3600.0, 36000.0})
            add("t_max_" + fmt_g(t), [t](Scenario& s) { s.time.t_max = t; });
    } else if (aspect == "quantization") {
        for (double dt : {0.1, 1.0, 10.0}) {
            // The perception period cannot be shorter than one step: raise
            // tau_r to the next step multiple when dt exceeds it.
            const double tau_r = base.perception.half_perception_time;
            const double adjusted = std::max(1.0, std::ceil(tau_r / dt)) * dt;
            add("dt_" + fmt_g(dt),
                [dt, adjusted](Scenario& s) {
                    s.time.dt = dt;
                    s.perception.half_perception_time = adjusted;
                },
                adjusted != tau_r ? "tau_r raised to " + fmt_g(adjusted) + " s" : "");
        }
    } else {
        throw std::invalid_argument(
            "unknown sweep aspect '" + aspect +
            "' (expected graph_type, node_degree, sociability, socialize_only, isolate_only, "
            "social_distance, reaction_time, distance_cost, space, duration, quantization)");
    }
    return out;
}

}  // namespace

int run_sweep(const SweepOptions& opts) {
    try {
        if (opts.seeds < 1) {
            std::cerr << "error: seeds must be >= 1\n";
            return 1;
        }
        const Scenario base = load_or_default(opts.scenario_path);
        const std::vector<SweepVariant> variants = make_variants(opts.aspect, base);
        const fs::path dir = prepare_out_dir(opts.out_dir);

        auto table = open_out(dir / ("sweep_" + opts.aspect + ".csv"));
        table << "aspect,variant,seeds_ok,alpha_mean,alpha_std,pl_r2_mean,k_mean,k_std,"
                 "wb_r2_mean,notes\n";

        for (const SweepVariant& variant : variants) {
            std::vector<double> alphas, pl_r2s, ks, wb_r2s;
            for (int s = 0; s < opts.seeds; ++s) {
                Scenario sc = variant.scenario;
                sc.seed = opts.seed_base + static_cast<std::uint64_t>(s);
                sc.validate();

                Simulator sim(sc);
                ContactTracker tracker(sc);
                sim.add_observer(&tracker);
                sim.run();

                const std::vector<double>& contact = tracker.ledger().durations().contact;
                if (contact.empty()) continue;
                try {
                    const EmpiricalCcdf c = ccdf(contact);
                    const TailFit pl = fit_power_law(c, opts.x_min, opts.x_max);
                    const TailFit wb = fit_weibull_tail(c, opts.x_min, opts.x_max);
                    alphas.push_back(pl.exponent);
                    pl_r2s.push_back(pl.r2);
                    ks.push_back(wb.exponent);
                    wb_r2s.push_back(wb.r2);
                } catch (const std::exception&) {
                    // too few points in range for this seed; skip it
                }
            }
            const Moments a = moments(alphas), k = moments(ks);
            const Moments pr = moments(pl_r2s), wr = moments(wb_r2s);
            table << opts.aspect << "," << variant.name << "," << a.count << ","
                  << fmt_g(a.mean, 6) << "," << fmt_g(a.stddev, 6) << "," << fmt_g(pr.mean, 6)
                  << "," << fmt_g(k.mean, 6) << "," << fmt_g(k.stddev, 6) << ","
                  << fmt_g(wr.mean, 6) << "," << variant.note << "\n";
            std::cout << opts.aspect << "/" << variant.name << ": " << a.count << "/"
                      << opts.seeds << " seeds, alpha " << fmt_g(a.mean, 4) << " +- "
                      << fmt_g(a.stddev, 4) << ", pl r2 " << fmt_g(pr.mean, 4) << ", k "
                      << fmt_g(k.mean, 4) << ", wb r2 " << fmt_g(wr.mean, 4)
                      << (variant.note.empty() ? "" : " [" + variant.note + "]") << "\n";
        }
        std::cout << "wrote " << (dir / ("sweep_" + opts.aspect + ".csv")).string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_graph(const GraphOptions& opts) {
    try {
        EdgeWeightSpec weights = EdgeWeightSpec::uniform();
        if (opts.edge_weight.rfind("constant:", 0) == 0)
            weights = EdgeWeightSpec::constant(std::stod(opts.edge_weight.substr(9)));
        else if (opts.edge_weight != "uniform")
            throw std::invalid_argument("edge_weight: expected uniform or constant:<w>");

        SocialGraph g = opts.type == "random"
                            ? generate_random(opts.n, opts.d, opts.seed, weights)
                        : opts.type == "scale_free"
                            ? generate_scale_free(opts.n, opts.d, opts.seed, weights)
                            : throw std::invalid_argument(
                                  "type: expected scale_free or random, got '" + opts.type +
                                  "'");

        if (opts.output.empty()) {
            write_edge_list(g, std::cout);
        } else {
            auto f = open_out(opts.output);
            write_edge_list(g, f);
        }
        std::cerr << "nodes " << g.node_count() << ", directed edges " << g.edge_count()
                  << ", mean out-degree " << fmt_g(g.mean_out_degree(), 4) << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace simps::cli
