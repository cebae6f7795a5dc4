#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swarmcluster {

/// Direction of an optimization problem. Benchmark-table reproduction runs in
/// Maximize mode; clustering always minimizes the quantization error.
enum class ObjectiveSense { Minimize, Maximize };

/// Returns true when `candidate` is better than `incumbent` under `sense`.
/// Strict comparison: ties are never an improvement.
inline bool improves(double candidate, double incumbent, ObjectiveSense sense) {
    return sense == ObjectiveSense::Minimize ? candidate < incumbent
                                             : candidate > incumbent;
}

/// A fixed-length real-valued point: a data item, a centroid, or a particle
/// position/velocity slice. Entries are validated finite on construction and
/// the length never changes afterwards.
class DataVector {
public:
    explicit DataVector(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("DataVector: length must be >= 1");
        for (double v : values_)
            if (!std::isfinite(v))
                throw std::invalid_argument("DataVector: entries must be finite");
    }

    DataVector(std::initializer_list<double> values)
        : DataVector(std::vector<double>(values)) {}

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::span<const double> span() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    friend bool operator==(const DataVector&, const DataVector&) = default;

private:
    std::vector<double> values_;
};

inline void require_same_length(const DataVector& a, const DataVector& b,
                                const char* what) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
}

/// Euclidean distance between two equal-length vectors.
inline double euclidean_distance(const DataVector& a, const DataVector& b) {
    require_same_length(a, b, "euclidean_distance");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

/// Component-wise arithmetic mean of a non-empty collection.
inline DataVector mean_vector(const std::vector<DataVector>& vectors) {
    if (vectors.empty())
        throw std::invalid_argument("mean_vector: empty collection");
    std::vector<double> acc(vectors.front().size(), 0.0);
    for (const auto& v : vectors) {
        require_same_length(vectors.front(), v, "mean_vector");
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += v[k];
    }
    for (double& x : acc) x /= static_cast<double>(vectors.size());
    return DataVector(std::move(acc));
}

/// Seedable deterministic random stream. The generator (mt19937_64) and the
/// 53-bit uniform mapping are both pinned by the standard, so a seed produces
/// the same draws on every platform. Single-owner mutable; never share one
/// stream between concurrent runs.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform index in [0, n).
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
        auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return std::min(i, n - 1);
    }

    /// k distinct indices from [0, n), via partial Fisher-Yates.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        if (k > n)
            throw std::invalid_argument("sample_indices: k exceeds population");
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + uniform_index(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

/// Best/mean/sample-std summary over repeated runs.
struct SummaryStats {
    double best = 0.0;
    double mean = 0.0;
    double std = 0.0;
    std::size_t n = 0;
};

/// Descriptive statistics of a non-empty sample. `best` is the extremum in
/// the given sense; `std` uses the sample (n-1) divisor and is 0 for n = 1.
inline SummaryStats summarize(const std::vector<double>& samples,
                              ObjectiveSense sense) {
    if (samples.empty()) throw std::invalid_argument("summarize: empty input");
    SummaryStats s;
    s.n = samples.size();
    s.best = samples.front();
    double sum = 0.0;
    for (double x : samples) {
        if (!std::isfinite(x))
            throw std::invalid_argument("summarize: samples must be finite");
        if (improves(x, s.best, sense)) s.best = x;
        sum += x;
    }
    s.mean = sum / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double x : samples) ss += (x - s.mean) * (x - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    return s;
}

}  // namespace swarmcluster
