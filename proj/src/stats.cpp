#include "satfeat/stats.hpp"

#include <algorithm>
#include <cmath>

namespace satfeat {

std::string_view stat_name(StatField f) {
    switch (f) {
        case StatField::Count: return "count";
        case StatField::Min: return "min";
        case StatField::Max: return "max";
        case StatField::Mean: return "mean";
        case StatField::Std: return "std";
        case StatField::Cv: return "cv";
        case StatField::Q1: return "q1";
        case StatField::Median: return "median";
        case StatField::Q3: return "q3";
        case StatField::Mode: return "mode";
        case StatField::ModeRate: return "mode_rate";
        case StatField::Zeros: return "zeros";
        case StatField::Entropy: return "entropy";
    }
    return "?";
}

double StatSummary::get(StatField f) const {
    switch (f) {
        case StatField::Count: return count;
        case StatField::Min: return min;
        case StatField::Max: return max;
        case StatField::Mean: return mean;
        case StatField::Std: return std;
        case StatField::Cv: return cv;
        case StatField::Q1: return q1;
        case StatField::Median: return median;
        case StatField::Q3: return q3;
        case StatField::Mode: return mode;
        case StatField::ModeRate: return mode_rate;
        case StatField::Zeros: return zeros;
        case StatField::Entropy: return entropy;
    }
    return 0;
}

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) return 0;
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

namespace {

// Entropy of the run-lengths of equal keys in an ascending key sequence.
template <typename KeyFn>
double run_entropy(std::span<const double> sorted, KeyFn key) {
    const double n = static_cast<double>(sorted.size());
    double h = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        const auto k = key(sorted[i]);
        while (j < sorted.size() && key(sorted[j]) == k) ++j;
        const double p = static_cast<double>(j - i) / n;
        h -= p * std::log(p);
        i = j;
    }
    return h;
}

double sorted_entropy(std::span<const double> sorted, ValueKind kind) {
    if (sorted.empty()) return 0;
    if (kind == ValueKind::Discrete) return run_entropy(sorted, [](double x) { return x; });
    const double lo = sorted.front();
    const double width = sorted.back() - lo;
    if (!(width > 0)) return 0;
    return run_entropy(sorted, [&](double x) {
        const auto bin = static_cast<int>(std::floor((x - lo) / width * kEntropyBins));
        return std::min(bin, kEntropyBins - 1);
    });
}

}  // namespace

double entropy(std::span<const double> values, ValueKind kind) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted_entropy(sorted, kind);
}

StatSummary summarize(std::span<const double> values, ValueKind kind) {
    StatSummary s;
    if (values.empty()) return s;
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    s.count = n;
    s.min = sorted.front();
    s.max = sorted.back();
    double sum = 0;
    for (double x : sorted) sum += x;
    s.mean = sum / n;
    double sq = 0;
    for (double x : sorted) sq += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(sq / n);
    s.cv = s.mean != 0 ? s.std / s.mean : 0;
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.5);
    s.q3 = quantile_sorted(sorted, 0.75);

    std::size_t best_run = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (j - i > best_run) {
            best_run = j - i;
            s.mode = sorted[i];
        }
        if (sorted[i] == 0) s.zeros = static_cast<double>(j - i);
        i = j;
    }
    s.mode_rate = static_cast<double>(best_run) / n;
    s.entropy = sorted_entropy(sorted, kind);
    return s;
}

std::vector<double> summarize(std::span<const double> values, std::span<const StatField> schedule, ValueKind kind) {
    const StatSummary s = summarize(values, kind);
    std::vector<double> out;
    out.reserve(schedule.size());
    for (StatField f : schedule) out.push_back(s.get(f));
    return out;
}

}  // namespace satfeat
