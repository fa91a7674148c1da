#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace satfeat {

/// How entropy treats the values: Discrete uses the distribution of distinct
/// exact values, Continuous first bins into kEntropyBins equal-width bins.
enum class ValueKind { Discrete, Continuous };

inline constexpr int kEntropyBins = 100;

enum class StatField {
    Count,
    Min,
    Max,
    Mean,
    Std,
    Cv,
    Q1,
    Median,
    Q3,
    Mode,
    ModeRate,
    Zeros,
    Entropy,
};

inline constexpr std::array<StatField, 13> kAllStats = {
    StatField::Count, StatField::Min,  StatField::Max,    StatField::Mean,     StatField::Std,
    StatField::Cv,    StatField::Q1,   StatField::Median, StatField::Q3,       StatField::Mode,
    StatField::ModeRate, StatField::Zeros, StatField::Entropy,
};

std::string_view stat_name(StatField f);

/// Descriptive statistics over a numeric sequence. An empty sequence yields
/// all-zero fields.
struct StatSummary {
    double count = 0;
    double min = 0;
    double max = 0;
    double mean = 0;
    double std = 0;  // population
    double cv = 0;   // std / mean, 0 when mean == 0
    double q1 = 0;
    double median = 0;
    double q3 = 0;
    double mode = 0;  // ties -> smallest value
    double mode_rate = 0;
    double zeros = 0;
    double entropy = 0;  // natural log

    double get(StatField f) const;
    friend bool operator==(const StatSummary&, const StatSummary&) = default;
};

StatSummary summarize(std::span<const double> values, ValueKind kind = ValueKind::Discrete);

/// Fields of `summarize(values)` picked in `schedule` order.
std::vector<double> summarize(std::span<const double> values, std::span<const StatField> schedule,
                              ValueKind kind = ValueKind::Discrete);

double entropy(std::span<const double> values, ValueKind kind = ValueKind::Discrete);

/// Inclusive linear-interpolation quantile of an ascending sequence.
double quantile_sorted(std::span<const double> sorted, double p);

}  // namespace satfeat
