#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numerics.hpp"

namespace swarmcluster {

/// One swarm member. pbest_fitness always equals the objective evaluated at
/// pbest_position and never worsens over a run.
struct Particle {
    DataVector position;
    DataVector velocity;
    DataVector pbest_position;
    double pbest_fitness;
};

/// Neighborhood structure used for the social term. Every particle's
/// neighborhood includes itself.
struct Topology {
    enum class Kind { Gbest, LbestRing, LbestVonNeumann };

    Kind kind = Kind::Gbest;
    std::size_t rows = 0;  // von Neumann grid only
    std::size_t cols = 0;

    static Topology gbest() { return {Kind::Gbest, 0, 0}; }
    static Topology lbest_ring() { return {Kind::LbestRing, 0, 0}; }
    static Topology lbest_von_neumann(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Topology: grid sides must be positive");
        return {Kind::LbestVonNeumann, rows, cols};
    }

    /// Von Neumann grid for a given swarm size, with the factorization
    /// closest to square (10 particles -> 2x5).
    static Topology von_neumann_for(std::size_t swarm_size) {
        if (swarm_size == 0)
            throw std::invalid_argument("Topology: swarm size must be positive");
        std::size_t rows = 1;
        for (std::size_t d = 1; d * d <= swarm_size; ++d)
            if (swarm_size % d == 0) rows = d;
        return lbest_von_neumann(rows, swarm_size / rows);
    }

    void validate(std::size_t swarm_size) const {
        if (kind == Kind::LbestVonNeumann && rows * cols != swarm_size)
            throw std::invalid_argument(
                "Topology: von Neumann grid " + std::to_string(rows) + "x" +
                std::to_string(cols) + " does not match swarm size " +
                std::to_string(swarm_size));
    }
};

/// PSO hyperparameters. The inertia weight decreases linearly from w_start to
/// w_end over the run; c1/c2 weight the cognitive and social pulls.
struct SwarmConfig {
    std::size_t swarm_size = 10;
    std::size_t iterations = 1000;
    double w_start = 0.9;
    double w_end = 0.4;
    double c1 = 1.042;
    double c2 = 1.042;
    double max_velocity = 1.0;
    ObjectiveSense sense = ObjectiveSense::Minimize;
    Topology topology = Topology::gbest();
    /// Keep positions inside the search box by reflecting the overshoot at the
    /// wall (and turning that velocity component around). Without it,
    /// maximize-mode runs on the benchmark boxes diverge outward — an
    /// out-of-box point always beats the interior — and the published
    /// best-fitness values are unreachable; a hard clamp instead makes the
    /// wall a trap that Rastrigin runs never leave.
    bool confine_positions = true;

    void validate() const {
        if (swarm_size < 2)
            throw std::invalid_argument("SwarmConfig: swarm_size must be >= 2");
        if (iterations < 1)
            throw std::invalid_argument("SwarmConfig: iterations must be >= 1");
        if (!(w_start >= w_end) || !(w_end >= 0.0))
            throw std::invalid_argument("SwarmConfig: need w_start >= w_end >= 0");
        if (c1 < 0.0 || c2 < 0.0)
            throw std::invalid_argument("SwarmConfig: c1 and c2 must be >= 0");
        if (!(max_velocity > 0.0))
            throw std::invalid_argument("SwarmConfig: max_velocity must be > 0");
        topology.validate(swarm_size);
    }
};

/// Per-dimension search box. Initial positions are drawn uniformly inside it,
/// and SwarmConfig::confine_positions decides whether later moves may leave it.
/// `velocity_limit`, when set, caps each dimension separately and overrides
/// SwarmConfig::max_velocity.
struct SearchSpace {
    DataVector lower;
    DataVector upper;
    std::optional<DataVector> velocity_limit;

    static SearchSpace box(std::size_t dimension, double lo, double hi) {
        return {DataVector(std::vector<double>(dimension, lo)),
                DataVector(std::vector<double>(dimension, hi)), std::nullopt};
    }

    std::size_t dimension() const { return lower.size(); }

    void validate() const {
        require_same_length(lower, upper, "SearchSpace");
        for (std::size_t k = 0; k < lower.size(); ++k)
            if (!(lower[k] < upper[k]))
                throw std::invalid_argument("SearchSpace: empty box in dimension " +
                                            std::to_string(k));
        if (velocity_limit) {
            require_same_length(lower, *velocity_limit, "SearchSpace");
            for (double v : *velocity_limit)
                if (!(v > 0.0))
                    throw std::invalid_argument("SearchSpace: velocity limit must be > 0");
        }
    }
};

struct OptimizationResult {
    DataVector best_position;
    double best_fitness;
    std::vector<double> fitness_trace;  // best-so-far after each iteration
    std::size_t evaluations_used;
};

/// Linearly decreasing inertia weight; w_start at t = 0, w_end at the final
/// iteration, w_start when the run has a single iteration.
inline double inertia_weight(std::size_t t, std::size_t t_max, double w_start,
                             double w_end) {
    if (t_max == 0 || t >= t_max)
        throw std::invalid_argument("inertia_weight: iteration index out of range");
    if (t_max == 1) return w_start;
    return w_start + (w_end - w_start) * static_cast<double>(t) /
                         static_cast<double>(t_max - 1);
}

namespace detail {

/// Neighborhood index set, ascending and deduplicated so that scanning in
/// order breaks fitness ties toward the lowest particle index.
inline std::vector<std::size_t> neighborhood_indices(const Topology& topology,
                                                     std::size_t swarm_size,
                                                     std::size_t i) {
    std::vector<std::size_t> idx;
    switch (topology.kind) {
        case Topology::Kind::Gbest:
            idx.resize(swarm_size);
            for (std::size_t j = 0; j < swarm_size; ++j) idx[j] = j;
            return idx;
        case Topology::Kind::LbestRing:
            idx = {(i + swarm_size - 1) % swarm_size, i, (i + 1) % swarm_size};
            break;
        case Topology::Kind::LbestVonNeumann: {
            const std::size_t r = i / topology.cols;
            const std::size_t c = i % topology.cols;
            auto at = [&](std::size_t rr, std::size_t cc) {
                return rr * topology.cols + cc;
            };
            idx = {i,
                   at((r + topology.rows - 1) % topology.rows, c),
                   at((r + 1) % topology.rows, c),
                   at(r, (c + topology.cols - 1) % topology.cols),
                   at(r, (c + 1) % topology.cols)};
            break;
        }
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

}  // namespace detail

/// Personal-best position of the best particle in i's neighborhood: the whole
/// swarm for gbest, the two ring-adjacent particles for lbest-ring, the four
/// toroidal grid neighbors for lbest-von-Neumann. Ties break toward the
/// lowest particle index.
inline const DataVector& neighborhood_best(const std::vector<Particle>& swarm,
                                           const Topology& topology,
                                           std::size_t i, ObjectiveSense sense) {
    if (i >= swarm.size())
        throw std::invalid_argument("neighborhood_best: particle index out of range");
    if (topology.kind == Topology::Kind::LbestVonNeumann)
        topology.validate(swarm.size());
    const auto indices = detail::neighborhood_indices(topology, swarm.size(), i);
    std::size_t best = indices.front();
    for (std::size_t j : indices)
        if (improves(swarm[j].pbest_fitness, swarm[best].pbest_fitness, sense))
            best = j;
    return swarm[best].pbest_position;
}

/// Velocity update with per-dimension random coefficients and a per-dimension
/// clamp: v' = w v + c1 r1 (pbest - x) + c2 r2 (social - x), each component
/// then clamped to [-vmax_k, +vmax_k]. The r1 vector is fully drawn before r2.
inline DataVector update_velocity(const Particle& p, const DataVector& social_best,
                                  double w, double c1, double c2,
                                  const DataVector& vmax, RngStream& rng) {
    require_same_length(p.position, social_best, "update_velocity");
    require_same_length(p.position, vmax, "update_velocity");
    const std::size_t n = p.position.size();
    std::vector<double> r1(n), r2(n);
    for (double& r : r1) r = rng.uniform01();
    for (double& r : r2) r = rng.uniform01();
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double raw = w * p.velocity[k] +
                           c1 * r1[k] * (p.pbest_position[k] - p.position[k]) +
                           c2 * r2[k] * (social_best[k] - p.position[k]);
        v[k] = std::clamp(raw, -vmax[k], vmax[k]);
    }
    return DataVector(std::move(v));
}

inline DataVector update_velocity(const Particle& p, const DataVector& social_best,
                                  double w, double c1, double c2, double vmax,
                                  RngStream& rng) {
    if (!(vmax > 0.0))
        throw std::invalid_argument("update_velocity: vmax must be > 0");
    return update_velocity(p, social_best, w, c1, c2,
                           DataVector(std::vector<double>(p.position.size(), vmax)),
                           rng);
}

/// x' = x + v, component-wise.
inline DataVector update_position(const Particle& p, const DataVector& v_new) {
    require_same_length(p.position, v_new, "update_position");
    std::vector<double> x(p.position.size());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = p.position[k] + v_new[k];
    return DataVector(std::move(x));
}

/// Replaces the personal best iff the new fitness strictly improves it; ties
/// keep the old pbest.
inline Particle update_personal_best(Particle p, double new_fitness,
                                     ObjectiveSense sense) {
    if (improves(new_fitness, p.pbest_fitness, sense)) {
        p.pbest_position = p.position;
        p.pbest_fitness = new_fitness;
    }
    return p;
}

using Objective = std::function<double(const DataVector&)>;

/// Called after each iteration with the committed swarm state; used by tests
/// to watch velocities and personal bests.
using SwarmObserver =
    std::function<void(std::size_t iteration, const std::vector<Particle>&)>;

/// PSO main loop, driven by an already-seeded stream. Initial positions are
/// drawn uniformly inside the box unless supplied; velocities start at zero
/// and the personal best starts at the initial position. Updates are
/// synchronous: all neighborhood bests of one iteration read the previous
/// iteration's personal bests, and rng draws happen in particle index order.
/// With confine_positions (the default) a move past a wall is reflected back
/// inside and that velocity component reverses sign.
inline OptimizationResult optimize_with(const Objective& objective,
                                        const SearchSpace& space,
                                        const SwarmConfig& config, RngStream& rng,
                                        std::vector<DataVector> initial_positions = {},
                                        const SwarmObserver& observer = {}) {
    config.validate();
    space.validate();
    const std::size_t dim = space.dimension();
    const std::size_t n = config.swarm_size;

    DataVector vmax = space.velocity_limit
                          ? *space.velocity_limit
                          : DataVector(std::vector<double>(dim, config.max_velocity));

    if (initial_positions.empty()) {
        initial_positions.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k)
                x[k] = rng.uniform(space.lower[k], space.upper[k]);
            initial_positions.emplace_back(std::move(x));
        }
    } else if (initial_positions.size() != n) {
        throw std::invalid_argument("optimize: got " +
                                    std::to_string(initial_positions.size()) +
                                    " initial positions for swarm of " +
                                    std::to_string(n));
    }

    const DataVector zero(std::vector<double>(dim, 0.0));
    std::vector<Particle> swarm;
    swarm.reserve(n);
    std::size_t evaluations = 0;
    for (std::size_t i = 0; i < n; ++i) {
        require_same_length(space.lower, initial_positions[i], "optimize");
        const double f = objective(initial_positions[i]);
        ++evaluations;
        swarm.push_back(Particle{initial_positions[i], zero, initial_positions[i], f});
    }

    auto best_index = [&]() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (improves(swarm[i].pbest_fitness, swarm[best].pbest_fitness,
                         config.sense))
                best = i;
        return best;
    };

    std::vector<double> trace;
    trace.reserve(config.iterations);
    std::vector<DataVector> new_positions;
    std::vector<double> new_fitness(n);

    for (std::size_t t = 0; t < config.iterations; ++t) {
        const double w =
            inertia_weight(t, config.iterations, config.w_start, config.w_end);

        new_positions.clear();
        for (std::size_t i = 0; i < n; ++i) {
            const DataVector& social =
                neighborhood_best(swarm, config.topology, i, config.sense);
            DataVector v = update_velocity(swarm[i], social, w, config.c1,
                                           config.c2, vmax, rng);
            DataVector x = update_position(swarm[i], v);
            if (config.confine_positions) {
                std::vector<double> xs(x.begin(), x.end());
                std::vector<double> vs(v.begin(), v.end());
                for (std::size_t k = 0; k < dim; ++k) {
                    double c = xs[k];
                    bool reflected = false;
                    while (c < space.lower[k] || c > space.upper[k]) {
                        c = c < space.lower[k] ? 2.0 * space.lower[k] - c
                                               : 2.0 * space.upper[k] - c;
                        reflected = !reflected;
                    }
                    if (reflected) vs[k] = -vs[k];
                    xs[k] = c;
                }
                x = DataVector(std::move(xs));
                v = DataVector(std::move(vs));
            }
            new_fitness[i] = objective(x);
            ++evaluations;
            swarm[i].velocity = std::move(v);
            new_positions.push_back(std::move(x));
        }
        for (std::size_t i = 0; i < n; ++i) {
            swarm[i].position = std::move(new_positions[i]);
            swarm[i] = update_personal_best(std::move(swarm[i]), new_fitness[i],
                                            config.sense);
        }

        trace.push_back(swarm[best_index()].pbest_fitness);
        if (observer) observer(t, swarm);
    }

    const std::size_t best = best_index();
    return OptimizationResult{swarm[best].pbest_position,
                              swarm[best].pbest_fitness, std::move(trace),
                              evaluations};
}

inline OptimizationResult optimize(const Objective& objective,
                                   const SearchSpace& space,
                                   const SwarmConfig& config, std::uint64_t seed) {
    RngStream rng(seed);
    return optimize_with(objective, space, config, rng);
}

}  // namespace swarmcluster
