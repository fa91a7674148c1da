#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "satfeat/cnf.hpp"
#include "satfeat/stats.hpp"

namespace satfeat {

/// Raised when an instance cannot produce a feature family (e.g. no variables).
class ExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- base features -------------------------------------------------------

struct SizeFeatures {
    double num_clauses = 0;
    double num_vars = 0;
    double ratio = 0;
};

/// Throws ExtractionError when the formula has no variables.
SizeFeatures size_features(const Cnf& cnf);

/// 2 * |0.5 - pos / (pos + neg)| per clause (over its literals).
std::vector<double> clause_biases(const Cnf& cnf);
/// Same per variable over its occurrences; 0 for a variable that never occurs.
std::vector<double> variable_biases(const Cnf& cnf);

struct BalanceFeatures {
    StatSummary clause_bias;
    StatSummary variable_bias;
    double binary_fraction = 0;
    double ternary_fraction = 0;
};
BalanceFeatures balance_features(const Cnf& cnf);

bool is_horn(const Clause& c);
/// Per variable: number of Horn clauses it occurs in.
std::vector<double> horn_variable_counts(const Cnf& cnf);

struct HornFeatures {
    double horn_fraction = 0;
    StatSummary variable_counts;
};
HornFeatures horn_features(const Cnf& cnf);

struct VcgFeatures {
    StatSummary variable_degrees;
    StatSummary clause_degrees;
};
VcgFeatures vcg_features(const Cnf& cnf);
StatSummary vg_features(const Cnf& cnf);

/// mean, cv, min, max, entropy
inline constexpr std::array<StatField, 5> kSatzillaSchedule = {StatField::Mean, StatField::Cv, StatField::Min,
                                                               StatField::Max, StatField::Entropy};

/// The 38 base values in manifest order. `original` is the formula before
/// preprocessing (only its size is used).
std::vector<double> satzilla_base_values(const Cnf& original, const Cnf& reduced);

// ---- probing -------------------------------------------------------------

inline constexpr std::array<int, 5> kProbeDepths = {1, 4, 16, 64, 256};

struct DpllProbeOptions {
    int random_probes = 100;
    int node_limit = 256;
    /// Wall-clock cap; 0 disables it. When hit, results are marked truncated
    /// and are no longer reproducible.
    int budget_ms = 0;
};

struct DpllProbeResult {
    /// Cumulative unit propagations when the DPLL node count first reaches each
    /// of kProbeDepths (final count if the search ends earlier).
    std::array<double, 5> unit_props_at_depth{};
    double mean_depth_to_contradiction = 0;
    double est_log_nodes = 0;
    /// Decision depth at which each random probe stopped.
    std::vector<uint32_t> probe_depths;
    bool truncated = false;
};

DpllProbeResult dpll_probe(const Cnf& cnf, uint64_t seed, const DpllProbeOptions& options = {});

enum class LocalSearchAlgorithm { Saps, Gsat };

struct LocalSearchOptions {
    int runs = 30;
    int cutoff = 10000;
    LocalSearchAlgorithm algorithm = LocalSearchAlgorithm::Saps;
    double alpha = 1.3;
    double rho = 0.8;
    double smooth_probability = 0.05;
    double walk_probability = 0.01;
};

struct LocalSearchRun {
    uint32_t initial_unsat = 0;
    uint32_t best_unsat = 0;
    uint32_t steps_to_best = 0;
    double improvement_per_step = 0;
    double first_min_fraction = 0;
    std::vector<uint32_t> unsat_at_minima;
};

struct LocalSearchResult {
    std::vector<LocalSearchRun> runs;
    StatSummary best_unsat;
    StatSummary steps_to_best;
    StatSummary improvement_per_step;
    StatSummary first_min_fraction;
    double unsat_at_minima_mean = 0;
};

/// Throws std::invalid_argument when cutoff or runs is not positive.
LocalSearchResult local_search_probe(const Cnf& cnf, uint64_t seed, const LocalSearchOptions& options = {});

struct ProbeReport {
    DpllProbeResult dpll;
    LocalSearchResult local_search;
    uint64_t seed = 0;
};

/// mean, cv, min, max, q1, median, q3
inline constexpr std::array<StatField, 7> kLocalSearchSchedule = {StatField::Mean, StatField::Cv,     StatField::Min,
                                                                  StatField::Max,  StatField::Q1,     StatField::Median,
                                                                  StatField::Q3};

/// The 31 probing values in manifest order.
std::vector<double> satzilla_probing_values(const ProbeReport& report);

}  // namespace satfeat
