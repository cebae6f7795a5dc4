#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "numerics.hpp"

namespace swarmcluster {

/// A named collection of feature vectors, optionally with class labels.
/// Labels are opaque text carried for bookkeeping; the clustering algorithms
/// never read them.
struct Dataset {
    std::string name;
    std::vector<DataVector> vectors;
    std::optional<std::vector<std::string>> labels;
    std::size_t n_features = 0;
    std::size_t n_classes = 0;
};

enum class LabelColumn { None, First, Last };

struct LoadOptions {
    char delimiter = ',';
    LabelColumn label_column = LabelColumn::Last;
    bool has_header = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

inline std::optional<double> parse_double(std::string_view field) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) return std::nullopt;
    return value;
}

inline std::size_t count_distinct(const std::vector<std::string>& labels) {
    return std::set<std::string>(labels.begin(), labels.end()).size();
}

}  // namespace detail

/// Parses delimiter-separated text. Every row must have the same field
/// count; the label column, if any, is excluded from the features. Rows with
/// a non-numeric feature field are an error, as are ragged rows.
inline Dataset load_delimited(const std::filesystem::path& path,
                              const LoadOptions& options = {}) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open dataset file: " + path.string());

    Dataset dataset;
    dataset.name = path.stem().string();
    std::vector<std::string> labels;
    std::size_t expected_fields = 0;
    std::size_t line_number = 0;
    bool header_skipped = !options.has_header;

    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        if (detail::trim(line).empty()) continue;
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        const auto fields = detail::split(line, options.delimiter);
        if (expected_fields == 0) {
            expected_fields = fields.size();
            const std::size_t label_cols =
                options.label_column == LabelColumn::None ? 0 : 1;
            if (expected_fields <= label_cols)
                throw std::runtime_error(path.string() + ": line " +
                                         std::to_string(line_number) +
                                         ": no feature columns");
        } else if (fields.size() != expected_fields) {
            throw std::runtime_error(
                path.string() + ": line " + std::to_string(line_number) +
                ": expected " + std::to_string(expected_fields) +
                " fields, got " + std::to_string(fields.size()));
        }

        std::size_t first = 0;
        std::size_t last = fields.size();
        if (options.label_column == LabelColumn::First) {
            labels.emplace_back(fields.front());
            first = 1;
        } else if (options.label_column == LabelColumn::Last) {
            labels.emplace_back(fields.back());
            --last;
        }

        std::vector<double> row;
        row.reserve(last - first);
        for (std::size_t i = first; i < last; ++i) {
            const auto value = detail::parse_double(fields[i]);
            if (!value)
                throw std::runtime_error(
                    path.string() + ": line " + std::to_string(line_number) +
                    ": non-numeric feature field '" + std::string(fields[i]) + "'");
            row.push_back(*value);
        }
        dataset.vectors.emplace_back(std::move(row));
    }

    if (dataset.vectors.empty())
        throw std::runtime_error(path.string() + ": no data rows");
    dataset.n_features = dataset.vectors.front().size();
    if (options.label_column != LabelColumn::None) {
        dataset.n_classes = detail::count_distinct(labels);
        dataset.labels = std::move(labels);
    }
    return dataset;
}

/// Serializes with shortest round-trip decimals; inverse of load_delimited
/// under the same options.
inline std::string serialize_delimited(const Dataset& dataset,
                                       const LoadOptions& options = {}) {
    auto format_double = [](double v) {
        char buf[32];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, ptr);
    };
    std::ostringstream out;
    for (std::size_t p = 0; p < dataset.vectors.size(); ++p) {
        const auto& row = dataset.vectors[p];
        if (options.label_column == LabelColumn::First && dataset.labels)
            out << (*dataset.labels)[p] << options.delimiter;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) out << options.delimiter;
            out << format_double(row[k]);
        }
        if (options.label_column == LabelColumn::Last && dataset.labels)
            out << options.delimiter << (*dataset.labels)[p];
        out << '\n';
    }
    return out.str();
}

/// True when the artificial-rule point belongs to class 1.
inline bool artificial_rule(double z1, double z2) {
    return z1 >= 0.7 || (z1 <= 0.3 && z2 >= -0.2 - z1);
}

/// n points drawn uniformly from (-1,1)^2, labeled "1" where the rule holds
/// and "0" elsewhere. Deterministic per seed.
inline Dataset generate_artificial(std::size_t n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("generate_artificial: n must be >= 1");
    RngStream rng(seed);
    Dataset dataset;
    dataset.name = "artificial";
    dataset.n_features = 2;
    dataset.n_classes = 2;
    dataset.vectors.reserve(n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z1 = rng.uniform(-1.0, 1.0);
        const double z2 = rng.uniform(-1.0, 1.0);
        dataset.vectors.push_back(DataVector{z1, z2});
        labels.emplace_back(artificial_rule(z1, z2) ? "1" : "0");
    }
    dataset.labels = std::move(labels);
    return dataset;
}

/// Rescales each feature to [0,1]; a constant feature maps to 0 everywhere.
inline Dataset min_max_normalize(const Dataset& d) {
    if (d.vectors.empty())
        throw std::invalid_argument("min_max_normalize: empty dataset");
    const std::size_t dim = d.vectors.front().size();
    std::vector<double> lo(d.vectors.front().values());
    std::vector<double> hi(d.vectors.front().values());
    for (const auto& v : d.vectors)
        for (std::size_t k = 0; k < dim; ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    Dataset out = d;
    out.vectors.clear();
    out.vectors.reserve(d.vectors.size());
    for (const auto& v : d.vectors) {
        std::vector<double> row(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const double range = hi[k] - lo[k];
            row[k] = range > 0.0 ? (v[k] - lo[k]) / range : 0.0;
        }
        out.vectors.emplace_back(std::move(row));
    }
    return out;
}

}  // namespace swarmcluster
