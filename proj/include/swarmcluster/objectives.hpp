#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

#include "numerics.hpp"

namespace swarmcluster {

enum class BenchmarkFunction { Sphere, Rosenbrock, Rastrigin };

inline const char* name_of(BenchmarkFunction f) {
    switch (f) {
        case BenchmarkFunction::Sphere: return "sphere";
        case BenchmarkFunction::Rosenbrock: return "rosenbrock";
        case BenchmarkFunction::Rastrigin: return "rastrigin";
    }
    return "?";
}

/// A benchmark function together with its search range and velocity cap.
struct BenchmarkSpec {
    BenchmarkFunction function = BenchmarkFunction::Sphere;
    std::size_t dimension = 10;
    double lower_bound = -100.0;
    double upper_bound = 100.0;
    double max_velocity = 100.0;

    /// Standard range and velocity cap: Sphere/Rosenbrock on (-100,100)^n
    /// with vmax 100, Rastrigin on (-10,10)^n with vmax 10.
    static BenchmarkSpec standard(BenchmarkFunction f, std::size_t dimension) {
        BenchmarkSpec spec;
        spec.function = f;
        spec.dimension = dimension;
        if (f == BenchmarkFunction::Rastrigin) {
            spec.lower_bound = -10.0;
            spec.upper_bound = 10.0;
            spec.max_velocity = 10.0;
        }
        return spec;
    }

    void validate() const {
        if (dimension == 0)
            throw std::invalid_argument("BenchmarkSpec: dimension must be >= 1");
        if (function == BenchmarkFunction::Rosenbrock && dimension < 2)
            throw std::invalid_argument("BenchmarkSpec: rosenbrock needs dimension >= 2");
        if (!(lower_bound < upper_bound))
            throw std::invalid_argument("BenchmarkSpec: lower_bound must be < upper_bound");
        if (!(max_velocity > 0.0))
            throw std::invalid_argument("BenchmarkSpec: max_velocity must be > 0");
    }
};

/// f1(x) = sum x_i^2
inline double eval_sphere(const DataVector& x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

/// f2(x) = sum_{i=1..n-1} [100 (x_i^2 - x_{i+1})^2 + (x_i - 1)^2]
inline double eval_rosenbrock(const DataVector& x) {
    if (x.size() < 2)
        throw std::invalid_argument("eval_rosenbrock: needs length >= 2, got " +
                                    std::to_string(x.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i] * x[i] - x[i + 1];
        const double b = x[i] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

/// f3(x) = 10 n + sum [x_i^2 - 10 cos(2 pi x_i)]
inline double eval_rastrigin(const DataVector& x) {
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x)
        sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    return sum;
}

inline double evaluate(const BenchmarkSpec& spec, const DataVector& x) {
    if (x.size() != spec.dimension)
        throw std::invalid_argument("evaluate: point has length " +
                                    std::to_string(x.size()) + ", spec expects " +
                                    std::to_string(spec.dimension));
    switch (spec.function) {
        case BenchmarkFunction::Sphere: return eval_sphere(x);
        case BenchmarkFunction::Rosenbrock: return eval_rosenbrock(x);
        case BenchmarkFunction::Rastrigin: return eval_rastrigin(x);
    }
    throw std::logic_error("evaluate: unknown function");
}

}  // namespace swarmcluster
