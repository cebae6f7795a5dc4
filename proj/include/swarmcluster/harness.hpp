#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "clustering.hpp"
#include "data.hpp"
#include "numerics.hpp"
#include "objectives.hpp"
#include "swarm.hpp"

namespace swarmcluster {

enum class TaskKind { FunctionOptimization, Clustering };

enum class AlgorithmKind { KMeans, PsoGbest, PsoLbestRing, PsoLbestVonNeumann, PsoHybrid };

inline std::string name_of(TaskKind task) {
    return task == TaskKind::FunctionOptimization ? "function-optimization"
                                                  : "clustering";
}

inline std::string name_of(AlgorithmKind algorithm) {
    switch (algorithm) {
        case AlgorithmKind::KMeans: return "kmeans";
        case AlgorithmKind::PsoGbest: return "pso-gbest";
        case AlgorithmKind::PsoLbestRing: return "pso-lbest-ring";
        case AlgorithmKind::PsoLbestVonNeumann: return "pso-lbest-vn";
        case AlgorithmKind::PsoHybrid: return "pso-hybrid";
    }
    throw std::invalid_argument("unknown algorithm kind");
}

/// One experiment: `runs` independent repetitions of a single
/// algorithm/target pairing, seeded base_seed, base_seed + 1, ...
struct ExperimentSpec {
    TaskKind task = TaskKind::Clustering;
    AlgorithmKind algorithm = AlgorithmKind::PsoGbest;
    std::optional<BenchmarkSpec> benchmark;  // function-optimization target
    std::optional<Dataset> dataset;          // clustering target
    std::size_t num_clusters = 2;
    std::size_t runs = 30;
    std::size_t evaluation_budget = 1000;
    std::size_t swarm_size = 10;
    std::uint64_t base_seed = 0;
    ObjectiveSense sense = ObjectiveSense::Minimize;

    void validate() const {
        if (runs < 1) throw std::invalid_argument("runs must be >= 1");
        const bool uses_swarm = algorithm != AlgorithmKind::KMeans;
        if (uses_swarm && evaluation_budget < swarm_size)
            throw std::invalid_argument(
                "evaluation budget must be >= swarm size for PSO algorithms");
        if (task == TaskKind::FunctionOptimization) {
            if (algorithm == AlgorithmKind::KMeans ||
                algorithm == AlgorithmKind::PsoHybrid)
                throw std::invalid_argument(
                    name_of(algorithm) +
                    " requires a dataset; it cannot optimize a benchmark function");
            if (!benchmark)
                throw std::invalid_argument("function optimization needs a benchmark");
            benchmark->validate();
        } else {
            if (!dataset || dataset->vectors.empty())
                throw std::invalid_argument("clustering needs a dataset");
            if (sense != ObjectiveSense::Minimize)
                throw std::invalid_argument("clustering minimizes quantization error");
        }
    }
};

struct RunRecord {
    std::uint64_t seed = 0;
    double fitness = 0.0;
    std::optional<double> inter_cluster_distance;
    double runtime_seconds = 0.0;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<RunRecord> records;
    SummaryStats fitness_stats;
    std::optional<SummaryStats> inter_cluster_stats;
};

namespace detail {

inline Topology topology_for(AlgorithmKind algorithm, std::size_t swarm_size) {
    switch (algorithm) {
        case AlgorithmKind::PsoGbest:
        case AlgorithmKind::PsoHybrid: return Topology::gbest();
        case AlgorithmKind::PsoLbestRing: return Topology::lbest_ring();
        case AlgorithmKind::PsoLbestVonNeumann:
            return Topology::von_neumann_for(swarm_size);
        case AlgorithmKind::KMeans: break;
    }
    throw std::invalid_argument("k-means has no swarm topology");
}

inline SwarmConfig swarm_config_for(const ExperimentSpec& spec) {
    SwarmConfig config;
    config.swarm_size = spec.swarm_size;
    config.iterations = spec.evaluation_budget / spec.swarm_size;
    config.sense = spec.sense;
    config.topology = topology_for(spec.algorithm, spec.swarm_size);
    return config;
}

inline std::size_t kmeans_iterations_for(const ExperimentSpec& spec) {
    return std::min<std::size_t>(spec.evaluation_budget, 1000);
}

inline RunRecord execute_run(const ExperimentSpec& spec,
                             const ClusteringProblem* problem,
                             std::uint64_t seed) {
    RunRecord record;
    record.seed = seed;
    const auto started = std::chrono::steady_clock::now();

    if (spec.task == TaskKind::FunctionOptimization) {
        const BenchmarkSpec& bench = *spec.benchmark;
        SwarmConfig config = swarm_config_for(spec);
        SearchSpace space = SearchSpace::box(bench.dimension, bench.lower_bound,
                                             bench.upper_bound);
        space.velocity_limit = DataVector(
            std::vector<double>(bench.dimension, bench.max_velocity));
        const auto result = optimize(
            [&bench](const DataVector& x) { return evaluate(bench, x); }, space,
            config, seed);
        record.fitness = result.best_fitness;
    } else {
        ClusteringResult result = [&] {
            switch (spec.algorithm) {
                case AlgorithmKind::KMeans:
                    return kmeans(*problem, kmeans_iterations_for(spec), seed);
                case AlgorithmKind::PsoHybrid:
                    return hybrid_pso_cluster(*problem, swarm_config_for(spec),
                                              kmeans_iterations_for(spec), seed);
                default:
                    return pso_cluster(*problem, swarm_config_for(spec), seed);
            }
        }();
        record.fitness = result.quantization_error;
        record.inter_cluster_distance = result.inter_cluster_distance;
    }

    record.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return record;
}

}  // namespace detail

inline ExperimentReport run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::optional<ClusteringProblem> problem;
    if (spec.task == TaskKind::Clustering)
        problem = ClusteringProblem::from_data(spec.dataset->vectors,
                                               spec.num_clusters);

    ExperimentReport report;
    report.spec = spec;
    report.records.reserve(spec.runs);
    for (std::size_t r = 0; r < spec.runs; ++r)
        report.records.push_back(detail::execute_run(
            spec, problem ? &*problem : nullptr, spec.base_seed + r));

    std::vector<double> fitnesses;
    fitnesses.reserve(spec.runs);
    for (const auto& record : report.records) fitnesses.push_back(record.fitness);
    report.fitness_stats = summarize(fitnesses, spec.sense);

    if (spec.task == TaskKind::Clustering) {
        std::vector<double> distances;
        distances.reserve(spec.runs);
        for (const auto& record : report.records)
            distances.push_back(*record.inter_cluster_distance);
        // Larger separation is better, so "best" is the max.
        report.inter_cluster_stats = summarize(distances, ObjectiveSense::Maximize);
    }
    return report;
}

enum class ReportFormat { Json, Csv, Table };

namespace detail {

/// Shortest decimal that parses back to the same double.
inline std::string exact_decimal(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline nlohmann::ordered_json spec_to_json(const ExperimentSpec& spec) {
    nlohmann::ordered_json j;
    j["task"] = name_of(spec.task);
    j["algorithm"] = name_of(spec.algorithm);
    if (spec.benchmark) {
        j["function"] = name_of(spec.benchmark->function);
        j["dimension"] = spec.benchmark->dimension;
        j["lower_bound"] = spec.benchmark->lower_bound;
        j["upper_bound"] = spec.benchmark->upper_bound;
        j["max_velocity"] = spec.benchmark->max_velocity;
    }
    if (spec.dataset) {
        j["dataset"] = spec.dataset->name;
        j["observations"] = spec.dataset->vectors.size();
        j["features"] = spec.dataset->n_features;
        j["clusters"] = spec.num_clusters;
    }
    j["runs"] = spec.runs;
    j["evaluation_budget"] = spec.evaluation_budget;
    j["swarm_size"] = spec.swarm_size;
    j["base_seed"] = spec.base_seed;
    j["sense"] = spec.sense == ObjectiveSense::Minimize ? "minimize" : "maximize";
    return j;
}

inline nlohmann::ordered_json stats_to_json(const SummaryStats& stats) {
    return {{"best", stats.best},
            {"mean", stats.mean},
            {"std", stats.std},
            {"n", stats.n}};
}

inline std::string emit_json(const ExperimentReport& report) {
    nlohmann::ordered_json j;
    j["spec"] = spec_to_json(report.spec);
    j["runs"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < report.records.size(); ++r) {
        const auto& record = report.records[r];
        nlohmann::ordered_json row;
        row["run"] = r;
        row["seed"] = record.seed;
        row["fitness"] = record.fitness;
        if (record.inter_cluster_distance)
            row["inter_cluster_distance"] = *record.inter_cluster_distance;
        row["runtime_seconds"] = record.runtime_seconds;
        j["runs"].push_back(std::move(row));
    }
    j["aggregates"]["fitness"] = stats_to_json(report.fitness_stats);
    if (report.inter_cluster_stats)
        j["aggregates"]["inter_cluster_distance"] =
            stats_to_json(*report.inter_cluster_stats);
    return j.dump(2) + "\n";
}

inline std::string emit_csv(const ExperimentReport& report) {
    const bool clustering = report.spec.task == TaskKind::Clustering;
    std::ostringstream out;
    out << "run,seed,fitness";
    if (clustering) out << ",inter_cluster_distance";
    out << ",runtime_seconds\n";
    for (std::size_t r = 0; r < report.records.size(); ++r) {
        const auto& record = report.records[r];
        out << r << ',' << record.seed << ',' << exact_decimal(record.fitness);
        if (clustering)
            out << ',' << exact_decimal(*record.inter_cluster_distance);
        out << ',' << exact_decimal(record.runtime_seconds) << '\n';
    }
    double total_runtime = 0.0;
    for (const auto& record : report.records)
        total_runtime += record.runtime_seconds;
    out << "mean,," << exact_decimal(report.fitness_stats.mean);
    if (clustering)
        out << ',' << exact_decimal(report.inter_cluster_stats->mean);
    out << ',' << exact_decimal(total_runtime / report.records.size()) << '\n';
    return out.str();
}

inline std::string format_mean_std(const SummaryStats& stats) {
    std::ostringstream out;
    out.precision(6);
    out << stats.mean << " ± " << stats.std;
    return out.str();
}

inline std::string emit_table(const ExperimentReport& report) {
    const ExperimentSpec& spec = report.spec;
    std::ostringstream out;
    out << "algorithm: " << name_of(spec.algorithm);
    if (spec.benchmark)
        out << "  function: " << name_of(spec.benchmark->function) << " (dim "
            << spec.benchmark->dimension << ")";
    if (spec.dataset)
        out << "  dataset: " << spec.dataset->name << " (clusters "
            << spec.num_clusters << ")";
    out << "\nruns: " << spec.runs << "  budget: " << spec.evaluation_budget
        << "  seed: " << spec.base_seed << "\n";
    const char* fitness_label =
        spec.task == TaskKind::Clustering ? "quantization error" : "best fitness";
    out << fitness_label << ": " << format_mean_std(report.fitness_stats) << "\n";
    if (report.inter_cluster_stats)
        out << "inter-cluster distance: "
            << format_mean_std(*report.inter_cluster_stats) << "\n";
    std::ostringstream best;
    best.precision(10);
    best << report.fitness_stats.best;
    out << "best run: " << best.str() << "\n";
    return out.str();
}

}  // namespace detail

inline std::string emit_report(const ExperimentReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return detail::emit_json(report);
        case ReportFormat::Csv: return detail::emit_csv(report);
        case ReportFormat::Table: return detail::emit_table(report);
    }
    throw std::invalid_argument("unknown report format");
}

}  // namespace swarmcluster
