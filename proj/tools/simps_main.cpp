#include <CLI11.hpp>

#include "simps/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"simps: social-behavior mobility simulator and contact-trace analyzer"};
    app.require_subcommand(1);

    simps::cli::SimulateOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "run one simulation and record contacts");
    simulate->add_option("scenario", sim_opts.scenario_path,
                         "scenario file (key = value; omit for defaults)");
    simulate->add_option("-o,--out", sim_opts.out_dir,
                         "output directory (default $SIMPS_OUTPUT_DIR or ./out)");
    std::uint64_t seed_value = 0;
    auto* seed_flag =
        simulate->add_option("--seed", seed_value, "override the scenario's master seed");
    simulate->add_flag("--trace", sim_opts.trace, "write the full position trace");
    simulate->add_option("--decimate", sim_opts.decimate, "keep every k-th trace sample")
        ->check(CLI::PositiveNumber);
    simulate->add_flag("--grid", sim_opts.grid,
                       "use the bucket index for neighbor search (identical results)");

    simps::cli::AnalyzeOptions an_opts;
    auto* analyze =
        app.add_subcommand("analyze", "fit tail models to duration samples (kind,duration_s)");
    analyze->add_option("files", an_opts.duration_files, "duration CSV files")
        ->required()
        ->expected(-1);
    analyze->add_option("-o,--out", an_opts.out_dir, "output directory");
    analyze->add_option("--x-min", an_opts.x_min, "fit range lower bound, seconds");
    analyze->add_option("--x-max", an_opts.x_max, "fit range upper bound, seconds");

    simps::cli::SweepOptions sw_opts;
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and tabulate exponents");
    sweep
        ->add_option("aspect", sw_opts.aspect,
                     "one of: graph_type node_degree sociability socialize_only isolate_only "
                     "social_distance reaction_time distance_cost space duration quantization")
        ->required();
    sweep->add_option("--scenario", sw_opts.scenario_path, "baseline scenario file");
    sweep->add_option("-o,--out", sw_opts.out_dir, "output directory");
    sweep->add_option("--seeds", sw_opts.seeds, "seeds per variant")->check(CLI::PositiveNumber);
    sweep->add_option("--seed-base", sw_opts.seed_base, "first seed value");
    sweep->add_option("--x-min", sw_opts.x_min, "fit range lower bound, seconds");
    sweep->add_option("--x-max", sw_opts.x_max, "fit range upper bound, seconds");

    simps::cli::GraphOptions gr_opts;
    auto* graph = app.add_subcommand("graph", "emit a generated social graph as an edge list");
    graph->add_option("--type", gr_opts.type, "scale_free | random");
    graph->add_option("-n", gr_opts.n, "node count");
    graph->add_option("-d", gr_opts.d, "target average out-degree");
    graph->add_option("--seed", gr_opts.seed, "generator seed");
    graph->add_option("--edge-weight", gr_opts.edge_weight, "uniform | constant:<w>");
    graph->add_option("-o,--out", gr_opts.output, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) {
        if (seed_flag->count() > 0) sim_opts.seed = seed_value;
        return simps::cli::run_simulate(sim_opts);
    }
    if (analyze->parsed()) return simps::cli::run_analyze(an_opts);
    if (sweep->parsed()) return simps::cli::run_sweep(sw_opts);
    if (graph->parsed()) return simps::cli::run_graph(gr_opts);
    return 1;
}
