#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numerics.hpp"
#include "swarm.hpp"

namespace swarmcluster {

/// A clustering instance: the data, the requested cluster count, and the
/// per-dimension feature bounds computed from the data.
struct ClusteringProblem {
    std::vector<DataVector> data;
    std::size_t num_clusters;
    DataVector feature_min;
    DataVector feature_max;

    static ClusteringProblem from_data(std::vector<DataVector> data,
                                       std::size_t num_clusters) {
        if (data.empty())
            throw std::invalid_argument("ClusteringProblem: no data vectors");
        if (num_clusters < 1 || num_clusters > data.size())
            throw std::invalid_argument(
                "ClusteringProblem: need 1 <= clusters <= " +
                std::to_string(data.size()) + ", got " +
                std::to_string(num_clusters));
        std::vector<double> lo(data.front().values());
        std::vector<double> hi(data.front().values());
        for (const auto& v : data) {
            require_same_length(data.front(), v, "ClusteringProblem");
            for (std::size_t k = 0; k < v.size(); ++k) {
                lo[k] = std::min(lo[k], v[k]);
                hi[k] = std::max(hi[k], v[k]);
            }
        }
        return {std::move(data), num_clusters, DataVector(std::move(lo)),
                DataVector(std::move(hi))};
    }

    std::size_t dimension() const { return feature_min.size(); }
    std::size_t size() const { return data.size(); }
};

struct CentroidSet {
    std::vector<DataVector> centroids;

    std::size_t size() const { return centroids.size(); }
    const DataVector& operator[](std::size_t j) const { return centroids[j]; }

    friend bool operator==(const CentroidSet&, const CentroidSet&) = default;
};

/// Cluster index per data vector, always the argmin of Euclidean distance to
/// the centroids that produced it (ties toward the lowest cluster index).
using Assignment = std::vector<std::size_t>;

struct ClusteringResult {
    CentroidSet centroids;
    Assignment assignment;
    double quantization_error;
    double inter_cluster_distance;
    std::size_t iterations_run;
    /// K-means: SSE after each assignment step (non-increasing).
    /// PSO: best quantization error so far, per iteration (non-increasing).
    std::vector<double> trace;
};

/// Maps each data vector to its nearest centroid; ties break toward the
/// lowest cluster index.
inline Assignment assign_to_nearest(const std::vector<DataVector>& data,
                                    const CentroidSet& centroids) {
    if (centroids.size() == 0)
        throw std::invalid_argument("assign_to_nearest: no centroids");
    Assignment cluster_of(data.size());
    for (std::size_t p = 0; p < data.size(); ++p) {
        std::size_t best = 0;
        double best_d = euclidean_distance(data[p], centroids[0]);
        for (std::size_t j = 1; j < centroids.size(); ++j) {
            const double d = euclidean_distance(data[p], centroids[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        cluster_of[p] = best;
    }
    return cluster_of;
}

/// Mean of each non-empty cluster; an empty cluster's centroid is
/// reinitialized to a uniformly random data point.
inline CentroidSet recompute_centroids(const std::vector<DataVector>& data,
                                       const Assignment& assignment,
                                       std::size_t num_clusters, RngStream& rng) {
    if (assignment.size() != data.size())
        throw std::invalid_argument("recompute_centroids: assignment does not cover data");
    const std::size_t dim = data.front().size();
    std::vector<std::vector<double>> sums(num_clusters,
                                          std::vector<double>(dim, 0.0));
    std::vector<std::size_t> counts(num_clusters, 0);
    for (std::size_t p = 0; p < data.size(); ++p) {
        const std::size_t j = assignment[p];
        if (j >= num_clusters)
            throw std::invalid_argument("recompute_centroids: cluster index out of range");
        for (std::size_t k = 0; k < dim; ++k) sums[j][k] += data[p][k];
        ++counts[j];
    }
    std::vector<DataVector> centroids;
    centroids.reserve(num_clusters);
    for (std::size_t j = 0; j < num_clusters; ++j) {
        if (counts[j] == 0) {
            centroids.push_back(data[rng.uniform_index(data.size())]);
            continue;
        }
        for (double& s : sums[j]) s /= static_cast<double>(counts[j]);
        centroids.emplace_back(std::move(sums[j]));
    }
    return CentroidSet{std::move(centroids)};
}

/// Quantization error: mean over the clusters of the mean member-to-centroid
/// distance. An empty cluster contributes 0 while the denominator stays the
/// cluster count.
inline double quantization_error(const std::vector<DataVector>& data,
                                 const CentroidSet& centroids,
                                 const Assignment& assignment) {
    if (assignment.size() != data.size())
        throw std::invalid_argument("quantization_error: assignment does not cover data");
    std::vector<double> dist_sum(centroids.size(), 0.0);
    std::vector<std::size_t> counts(centroids.size(), 0);
    for (std::size_t p = 0; p < data.size(); ++p) {
        const std::size_t j = assignment[p];
        dist_sum[j] += euclidean_distance(data[p], centroids[j]);
        ++counts[j];
    }
    double total = 0.0;
    for (std::size_t j = 0; j < centroids.size(); ++j)
        if (counts[j] > 0) total += dist_sum[j] / static_cast<double>(counts[j]);
    return total / static_cast<double>(centroids.size());
}

/// Sum of squared member-to-centroid distances; the quantity K-means descends.
inline double sum_squared_error(const std::vector<DataVector>& data,
                                const CentroidSet& centroids,
                                const Assignment& assignment) {
    double total = 0.0;
    for (std::size_t p = 0; p < data.size(); ++p) {
        const double d = euclidean_distance(data[p], centroids[assignment[p]]);
        total += d * d;
    }
    return total;
}

/// Mean distance over all unordered centroid pairs; 0 for a single centroid.
inline double inter_cluster_distance(const CentroidSet& centroids) {
    const std::size_t n = centroids.size();
    if (n < 2) return 0.0;
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += euclidean_distance(centroids[i], centroids[j]);
            ++pairs;
        }
    return sum / static_cast<double>(pairs);
}

/// Flattens a centroid set into one particle position, in cluster order.
inline DataVector encode(const CentroidSet& centroids) {
    if (centroids.size() == 0)
        throw std::invalid_argument("encode: empty centroid set");
    std::vector<double> flat;
    flat.reserve(centroids.size() * centroids[0].size());
    for (const auto& c : centroids.centroids) {
        require_same_length(centroids[0], c, "encode");
        flat.insert(flat.end(), c.begin(), c.end());
    }
    return DataVector(std::move(flat));
}

/// Inverse of encode; the position length must be exactly num_clusters * dim.
inline CentroidSet decode(const DataVector& position, std::size_t num_clusters,
                          std::size_t dim) {
    if (num_clusters == 0 || dim == 0 || position.size() != num_clusters * dim)
        throw std::invalid_argument("decode: position length " +
                                    std::to_string(position.size()) +
                                    " is not " + std::to_string(num_clusters) +
                                    " x " + std::to_string(dim));
    std::vector<DataVector> centroids;
    centroids.reserve(num_clusters);
    for (std::size_t j = 0; j < num_clusters; ++j) {
        std::vector<double> c(position.begin() + static_cast<std::ptrdiff_t>(j * dim),
                              position.begin() + static_cast<std::ptrdiff_t>((j + 1) * dim));
        centroids.emplace_back(std::move(c));
    }
    return CentroidSet{std::move(centroids)};
}

namespace detail {

inline ClusteringResult finalize_result(const ClusteringProblem& problem,
                                        CentroidSet centroids,
                                        std::size_t iterations_run,
                                        std::vector<double> trace) {
    Assignment a = assign_to_nearest(problem.data, centroids);
    const double je = quantization_error(problem.data, centroids, a);
    const double icd = inter_cluster_distance(centroids);
    return ClusteringResult{std::move(centroids), std::move(a), je, icd,
                            iterations_run, std::move(trace)};
}

inline CentroidSet sample_data_centroids(const ClusteringProblem& problem,
                                         RngStream& rng) {
    const auto idx = rng.sample_indices(problem.size(), problem.num_clusters);
    std::vector<DataVector> centroids;
    centroids.reserve(idx.size());
    for (std::size_t i : idx) centroids.push_back(problem.data[i]);
    return CentroidSet{std::move(centroids)};
}

inline ClusteringResult kmeans_impl(const ClusteringProblem& problem,
                                    std::size_t max_iterations, RngStream& rng) {
    CentroidSet centroids = sample_data_centroids(problem, rng);
    std::vector<double> sse_trace;
    std::optional<Assignment> previous;
    std::size_t iterations = 0;
    bool converged = false;
    while (iterations < max_iterations) {
        Assignment a = assign_to_nearest(problem.data, centroids);
        sse_trace.push_back(sum_squared_error(problem.data, centroids, a));
        ++iterations;
        if (previous && a == *previous) {
            converged = true;
            break;
        }
        CentroidSet updated =
            recompute_centroids(problem.data, a, problem.num_clusters, rng);
        previous = std::move(a);
        centroids = std::move(updated);
    }
    if (!converged && max_iterations > 0) {
        // Budget exhausted mid-cycle: close with one consistent assignment.
        Assignment a = assign_to_nearest(problem.data, centroids);
        sse_trace.push_back(sum_squared_error(problem.data, centroids, a));
    }
    return finalize_result(problem, std::move(centroids), iterations,
                           std::move(sse_trace));
}

/// Search space for centroid-encoded particles: the feature box tiled once
/// per cluster, velocity capped at the per-dimension data range. Dimensions
/// with zero range are widened so the box stays valid.
inline SearchSpace clustering_space(const ClusteringProblem& problem) {
    const std::size_t dim = problem.dimension();
    std::vector<double> lo, hi, vmax;
    lo.reserve(problem.num_clusters * dim);
    hi.reserve(problem.num_clusters * dim);
    vmax.reserve(problem.num_clusters * dim);
    for (std::size_t j = 0; j < problem.num_clusters; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            const double range = problem.feature_max[k] - problem.feature_min[k];
            if (range > 0.0) {
                lo.push_back(problem.feature_min[k]);
                hi.push_back(problem.feature_max[k]);
                vmax.push_back(range);
            } else {
                lo.push_back(problem.feature_min[k] - 0.5);
                hi.push_back(problem.feature_max[k] + 0.5);
                vmax.push_back(1.0);
            }
        }
    return SearchSpace{DataVector(std::move(lo)), DataVector(std::move(hi)),
                       DataVector(std::move(vmax))};
}

inline ClusteringResult pso_cluster_impl(const ClusteringProblem& problem,
                                         const SwarmConfig& config,
                                         RngStream& rng,
                                         std::optional<CentroidSet> seed_particle) {
    if (config.sense != ObjectiveSense::Minimize)
        throw std::invalid_argument("pso_cluster: sense must be Minimize");
    const std::size_t dim = problem.dimension();

    std::vector<DataVector> initial;
    initial.reserve(config.swarm_size);
    if (seed_particle) initial.push_back(encode(*seed_particle));
    while (initial.size() < config.swarm_size)
        initial.push_back(encode(sample_data_centroids(problem, rng)));

    const Objective fitness = [&](const DataVector& position) {
        const CentroidSet c = decode(position, problem.num_clusters, dim);
        const Assignment a = assign_to_nearest(problem.data, c);
        return quantization_error(problem.data, c, a);
    };

    OptimizationResult best = optimize_with(fitness, clustering_space(problem),
                                            config, rng, std::move(initial));
    return finalize_result(problem,
                           decode(best.best_position, problem.num_clusters, dim),
                           config.iterations, std::move(best.fitness_trace));
}

}  // namespace detail

/// Standard K-means: centroids start at distinct random data points, then
/// assignment and mean updates alternate until the iteration budget is spent
/// or no membership changes.
inline ClusteringResult kmeans(const ClusteringProblem& problem,
                               std::size_t max_iterations, std::uint64_t seed) {
    RngStream rng(seed);
    return detail::kmeans_impl(problem, max_iterations, rng);
}

/// PSO clustering: each particle is a flattened centroid set, initialized
/// from data points sampled without replacement, with fitness the
/// quantization error of the induced nearest-centroid assignment.
inline ClusteringResult pso_cluster(const ClusteringProblem& problem,
                                    const SwarmConfig& config,
                                    std::uint64_t seed) {
    RngStream rng(seed);
    return detail::pso_cluster_impl(problem, config, rng, std::nullopt);
}

/// K-means-seeded PSO: particle 0 starts at the K-means solution (personal
/// best included), the rest as in pso_cluster. With a zero-iteration PSO
/// budget the K-means result is returned unchanged.
inline ClusteringResult hybrid_pso_cluster(const ClusteringProblem& problem,
                                           const SwarmConfig& config,
                                           std::size_t kmeans_iterations,
                                           std::uint64_t seed) {
    RngStream rng(seed);
    ClusteringResult km = detail::kmeans_impl(problem, kmeans_iterations, rng);
    if (config.iterations == 0) return km;
    return detail::pso_cluster_impl(problem, config, rng,
                                    std::move(km.centroids));
}

}  // namespace swarmcluster
