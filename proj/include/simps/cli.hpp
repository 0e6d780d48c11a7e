#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simps::cli {

// Output directory fallback chain: explicit option, $SIMPS_OUTPUT_DIR, "out".
std::string default_output_dir();

struct SimulateOptions {
    std::string scenario_path;  // empty = built-in defaults
    std::string out_dir;
    std::optional<std::uint64_t> seed;  // overrides the scenario's seed
    bool trace = false;                 // also write the full position trace
    long decimate = 1;                  // keep every k-th trace sample
    bool grid = false;                  // bucket-index neighbor search
};

struct AnalyzeOptions {
    std::vector<std::string> duration_files;
    std::string out_dir;
    double x_min = 10.0;
    double x_max = 300.0;
};

struct SweepOptions {
    std::string aspect;
    std::string scenario_path;  // optional baseline (defaults otherwise)
    std::string out_dir;
    int seeds = 5;
    std::uint64_t seed_base = 1;
    double x_min = 10.0;
    double x_max = 300.0;
};

struct GraphOptions {
    std::string type = "scale_free";  // scale_free | random
    std::size_t n = 100;
    double d = 5.0;
    std::uint64_t seed = 0;
    std::string edge_weight = "uniform";  // uniform | constant:<w>
    std::string output;                   // empty = stdout
};

// Each returns a process exit code and reports problems on stderr.
int run_simulate(const SimulateOptions& opts);
int run_analyze(const AnalyzeOptions& opts);
int run_sweep(const SweepOptions& opts);
int run_graph(const GraphOptions& opts);

}  // namespace simps::cli
