#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "harness.hpp"

namespace swarmcluster {

namespace detail {

/// SWARMCLUSTER_SEED provides the seed when --seed is absent.
inline std::uint64_t seed_from_environment() {
    const char* env = std::getenv("SWARMCLUSTER_SEED");
    if (!env) return 0;
    try {
        std::size_t consumed = 0;
        const auto value = std::stoull(env, &consumed);
        if (consumed != std::string(env).size())
            throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error(
            std::string("SWARMCLUSTER_SEED is not a non-negative integer: '") +
            env + "'");
    }
}

inline ReportFormat parse_format(const std::string& text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    if (text == "table") return ReportFormat::Table;
    throw std::runtime_error("unknown output format: " + text);
}

}  // namespace detail

/// Entry point behind main(); returns the process exit status.
inline int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Particle-swarm optimization and clustering toolkit"};
    app.require_subcommand(1);

    // ---- optimize -------------------------------------------------------
    auto* optimize_cmd =
        app.add_subcommand("optimize", "Optimize a benchmark function");
    std::string function_name = "sphere";
    std::size_t dimension = 10;
    std::string sense_name = "max";
    std::string topology_name = "gbest";
    std::size_t opt_particles = 10;
    std::size_t opt_iters = 1000;
    std::size_t opt_runs = 30;
    std::uint64_t opt_seed = 0;
    std::string opt_format = "table";
    optimize_cmd
        ->add_option("--function", function_name, "Benchmark function")
        ->check(CLI::IsMember({"sphere", "rosenbrock", "rastrigin"}));
    optimize_cmd->add_option("--dim", dimension, "Problem dimensionality")
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--sense", sense_name, "Optimization direction")
        ->check(CLI::IsMember({"min", "max"}));
    optimize_cmd->add_option("--topology", topology_name, "Swarm topology")
        ->check(CLI::IsMember({"gbest", "ring", "vonneumann"}));
    optimize_cmd->add_option("--particles", opt_particles, "Swarm size")
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--iters", opt_iters, "Iterations per run")
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--runs", opt_runs, "Independent runs")
        ->check(CLI::PositiveNumber);
    auto* opt_seed_opt = optimize_cmd->add_option("--seed", opt_seed, "Base seed");
    optimize_cmd->add_option("--out", opt_format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    // ---- cluster --------------------------------------------------------
    auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a dataset");
    std::string data_path;
    bool artificial = false;
    std::size_t num_clusters = 2;
    std::string algo_name = "gbest";
    std::size_t budget = 1000;
    std::size_t clu_particles = 10;
    std::size_t clu_runs = 30;
    std::uint64_t clu_seed = 0;
    bool normalize = false;
    std::string clu_format = "table";
    std::string delimiter = ",";
    std::string label_column = "last";
    bool has_header = false;
    auto* data_opt =
        cluster_cmd->add_option("--data", data_path, "Delimited dataset file");
    auto* artificial_opt = cluster_cmd->add_flag(
        "--artificial", artificial, "Use the generated two-class dataset");
    data_opt->excludes(artificial_opt);
    artificial_opt->excludes(data_opt);
    cluster_cmd->add_option("--clusters", num_clusters, "Number of clusters")
        ->required()
        ->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--algo", algo_name, "Clustering algorithm")
        ->check(CLI::IsMember({"kmeans", "gbest", "ring", "vonneumann", "hybrid"}));
    cluster_cmd->add_option("--budget", budget, "Objective evaluations per run")
        ->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--particles", clu_particles, "Swarm size")
        ->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--runs", clu_runs, "Independent runs")
        ->check(CLI::PositiveNumber);
    auto* clu_seed_opt = cluster_cmd->add_option("--seed", clu_seed, "Base seed");
    cluster_cmd->add_flag("--normalize", normalize,
                          "Min-max rescale features to [0,1]");
    cluster_cmd->add_option("--out", clu_format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cluster_cmd->add_option("--delimiter", delimiter, "Field delimiter");
    cluster_cmd
        ->add_option("--label-column", label_column, "Label column position")
        ->check(CLI::IsMember({"none", "first", "last"}));
    cluster_cmd->add_flag("--header", has_header, "Skip the first line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        ExperimentSpec spec;
        ReportFormat format = ReportFormat::Table;

        if (optimize_cmd->parsed()) {
            spec.task = TaskKind::FunctionOptimization;
            spec.algorithm = topology_name == "ring"
                                 ? AlgorithmKind::PsoLbestRing
                                 : topology_name == "vonneumann"
                                       ? AlgorithmKind::PsoLbestVonNeumann
                                       : AlgorithmKind::PsoGbest;
            BenchmarkFunction function = BenchmarkFunction::Sphere;
            if (function_name == "rosenbrock")
                function = BenchmarkFunction::Rosenbrock;
            else if (function_name == "rastrigin")
                function = BenchmarkFunction::Rastrigin;
            spec.benchmark = BenchmarkSpec::standard(function, dimension);
            spec.sense = sense_name == "min" ? ObjectiveSense::Minimize
                                             : ObjectiveSense::Maximize;
            spec.swarm_size = opt_particles;
            spec.evaluation_budget = opt_iters * opt_particles;
            spec.runs = opt_runs;
            spec.base_seed = opt_seed_opt->count() > 0
                                 ? opt_seed
                                 : detail::seed_from_environment();
            format = detail::parse_format(opt_format);
        } else {
            spec.task = TaskKind::Clustering;
            spec.sense = ObjectiveSense::Minimize;
            if (algo_name == "kmeans")
                spec.algorithm = AlgorithmKind::KMeans;
            else if (algo_name == "ring")
                spec.algorithm = AlgorithmKind::PsoLbestRing;
            else if (algo_name == "vonneumann")
                spec.algorithm = AlgorithmKind::PsoLbestVonNeumann;
            else if (algo_name == "hybrid")
                spec.algorithm = AlgorithmKind::PsoHybrid;
            else
                spec.algorithm = AlgorithmKind::PsoGbest;
            spec.base_seed = clu_seed_opt->count() > 0
                                 ? clu_seed
                                 : detail::seed_from_environment();
            if (!artificial && data_path.empty())
                throw std::runtime_error("either --data or --artificial is required");
            if (delimiter.size() != 1)
                throw std::runtime_error("--delimiter must be a single character");
            Dataset dataset;
            if (artificial) {
                dataset = generate_artificial(400, spec.base_seed);
            } else {
                LoadOptions options;
                options.delimiter = delimiter.front();
                options.has_header = has_header;
                options.label_column = label_column == "none"
                                           ? LabelColumn::None
                                           : label_column == "first"
                                                 ? LabelColumn::First
                                                 : LabelColumn::Last;
                dataset = load_delimited(data_path, options);
            }
            if (normalize) dataset = min_max_normalize(dataset);
            spec.dataset = std::move(dataset);
            spec.num_clusters = num_clusters;
            spec.evaluation_budget = budget;
            spec.swarm_size = clu_particles;
            spec.runs = clu_runs;
            format = detail::parse_format(clu_format);
        }

        const ExperimentReport report = run_experiment(spec);
        std::cout << emit_report(report, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace swarmcluster
