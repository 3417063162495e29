#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace heatgraph {

enum class Condition { AD, control, other };

const char* condition_name(Condition c) noexcept;
Condition condition_from_string(const std::string& s); // ConfigError on unknown

struct DiffusivityRecord {
    std::string subject_id;
    Condition condition = Condition::other;
    int window_index = 0;
    double alpha = 0.0; // 1/s
    std::optional<int> mmse;
};

/// MLE fit of ln(alpha): mu = mean, sigma = population standard deviation.
struct LogNormalFit {
    double mu = 0.0;
    double sigma = 0.0;
    long n = 0;

    double pdf(double x) const;
};

LogNormalFit fit_lognormal(std::span<const double> samples);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

/// Log-spaced histogram, bin count by Freedman-Diaconis on ln(alpha).
struct Histogram {
    std::vector<double> edges;  // size counts.size() + 1
    std::vector<long> counts;
};

struct ConditionSummary {
    long n = 0;
    double median = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
    std::optional<LogNormalFit> fit; // absent when degenerate (sigma = 0)
    Histogram histogram;
};

using GroupSummary = std::map<Condition, ConditionSummary>;

/// Per-condition summaries over positive-alpha records; empty or non-positive
/// conditions are skipped with a warning. Invariant to record order.
GroupSummary group_summary(const std::vector<DiffusivityRecord>& records);

} // namespace heatgraph
