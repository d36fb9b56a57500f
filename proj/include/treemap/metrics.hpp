#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "squarified.hpp"

namespace treemap {

class metrics_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Metrics are measured over leaf rectangles only; internal containers would be
// counted twice otherwise.

inline std::vector<double> leaf_aspect_ratios(const LayoutResult& layout)
{
    std::vector<double> out;
    for (const auto& p : layout.placements)
        if (p.leaf)
            out.push_back(aspect_ratio(p.region));
    if (out.empty())
        throw metrics_error("layout has no leaf placements");
    return out;
}

inline std::vector<double> leaf_weights(const LayoutResult& layout)
{
    std::vector<double> out;
    for (const auto& p : layout.placements)
        if (p.leaf)
            out.push_back(p.weight);
    return out;
}

inline double mean(std::span<const double> values)
{
    if (values.empty())
        throw metrics_error("mean of empty sample");
    double sum = 0;
    for (double v : values)
        sum += v;
    return sum / static_cast<double>(values.size());
}

inline double weighted_mean(std::span<const double> values, std::span<const double> weights)
{
    if (values.empty())
        throw metrics_error("weighted mean of empty sample");
    if (values.size() != weights.size())
        throw metrics_error("weight count " + std::to_string(weights.size()) +
                            " does not match leaf count " + std::to_string(values.size()));
    double num = 0, den = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(weights[i] > 0))
            throw metrics_error("non-positive weight at leaf " + std::to_string(i));
        num += values[i] * weights[i];
        den += weights[i];
    }
    return num / den;
}

/// Corrected (n - 1) sample standard deviation; 0 for a single value.
inline double sample_std_dev(std::span<const double> values)
{
    if (values.empty())
        throw metrics_error("standard deviation of empty sample");
    if (values.size() == 1)
        return 0.0;
    const double mu = mean(values);
    double ss = 0;
    for (double v : values)
        ss += (v - mu) * (v - mu);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

inline double mean_ar(const LayoutResult& layout)
{
    const auto ars = leaf_aspect_ratios(layout);
    return mean(ars);
}

/// Weighted by the leaf weights recorded in the layout.
inline double weighted_mean_ar(const LayoutResult& layout)
{
    const auto ars = leaf_aspect_ratios(layout);
    const auto ws = leaf_weights(layout);
    return weighted_mean(ars, ws);
}

/// Weighted by caller-supplied weights, aligned with the layout's leaves in order.
inline double weighted_mean_ar(const LayoutResult& layout, std::span<const double> weights)
{
    const auto ars = leaf_aspect_ratios(layout);
    return weighted_mean(ars, weights);
}

inline double std_dev_ar(const LayoutResult& layout)
{
    const auto ars = leaf_aspect_ratios(layout);
    return sample_std_dev(ars);
}

struct LayoutMetrics {
    double mean_ar = 0;
    double weighted_mean_ar = 0;
    double std_dev_ar = 0;
    std::size_t n = 0;

    bool operator==(const LayoutMetrics&) const = default;
};

inline LayoutMetrics compute_metrics(const LayoutResult& layout)
{
    const auto ars = leaf_aspect_ratios(layout);
    const auto ws = leaf_weights(layout);
    return {mean(ars), weighted_mean(ars, ws), sample_std_dev(ars), ars.size()};
}

enum class Metric { MeanAR, WeightedMeanAR, StdDevAR };

inline constexpr std::array<Metric, 3> kAllMetrics{Metric::MeanAR, Metric::WeightedMeanAR,
                                                   Metric::StdDevAR};

inline std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::MeanAR: return "mean_ar";
    case Metric::WeightedMeanAR: return "weighted_mean_ar";
    case Metric::StdDevAR: return "std_dev_ar";
    }
    return "?";
}

inline double select(const LayoutMetrics& m, Metric which)
{
    switch (which) {
    case Metric::MeanAR: return m.mean_ar;
    case Metric::WeightedMeanAR: return m.weighted_mean_ar;
    case Metric::StdDevAR: return m.std_dev_ar;
    }
    return 0;
}

/// Both algorithms' metrics on one generated tree.
struct RunRecord {
    std::size_t size = 0;
    std::size_t rep = 0;
    std::uint64_t seed = 0;
    std::uint64_t tree_hash = 0;
    LayoutMetrics squarified;
    LayoutMetrics plus;

    bool operator==(const RunRecord&) const = default;
};

struct Comparison {
    bool success;           // plus strictly lower than squarified
    double improvement_pct; // (sq - plus) / sq * 100, negative when plus is worse
};

inline Comparison compare(double squarified_value, double plus_value)
{
    const bool success = plus_value < squarified_value;
    // A zero baseline only occurs for the dispersion metric of a perfectly
    // homogeneous layout; plus cannot go below it, so report no change.
    if (squarified_value == 0.0)
        return {success, 0.0};
    return {success, (squarified_value - plus_value) / squarified_value * 100.0};
}

inline Comparison compare(const RunRecord& rec, Metric metric)
{
    return compare(select(rec.squarified, metric), select(rec.plus, metric));
}

} // namespace treemap
