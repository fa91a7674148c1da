#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "satfeat/cnf.hpp"
#include "satfeat/graph.hpp"

namespace satfeat {

/// Reported alpha when every count is identical (no tail to fit).
inline constexpr double kDegenerateAlpha = 1e6;
/// Candidate xmin values scanned, smallest distinct values first.
inline constexpr int kMaxXminCandidates = 50;

struct PowerlawFit {
    double alpha = kDegenerateAlpha;
    double xmin = 0;
    std::size_t n_tail = 0;
    double ks = 0;
    bool degenerate = true;
};

/// Hurwitz zeta sum_{k>=0} (q + k)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// Discrete MLE alpha = 1 + n / sum ln(x / (xmin - 0.5)) with xmin picked by
/// minimum KS distance. Counts must be >= 1.
PowerlawFit powerlaw_alpha(std::span<const double> counts);

struct Partition {
    std::vector<uint32_t> community;  // dense ids in order of first appearance
    double modularity = 0;
    bool degenerate = false;  // edgeless input
};

/// Weighted modularity of a partition of an undirected graph; 0 without edges.
double modularity(const WeightedGraph& g, std::span<const uint32_t> community);

/// Louvain (local moving + aggregation until nothing moves). Seed 0 sweeps
/// vertices in index order, any other seed shuffles the sweep order.
Partition louvain_modularity(const WeightedGraph& g, uint64_t seed = 0);

struct FractalResult {
    double dimension = 0;
    bool degenerate = true;
    /// N(1), N(2), ... up to the last radius evaluated.
    std::vector<uint32_t> box_counts;
};

std::size_t connected_components(const WeightedGraph& g);

/// Greedy box covering by burning from the highest-degree uncovered vertex.
/// Ties prefer the vertex farthest from already covered ground, then the
/// lowest index. Edge weights are ignored.
FractalResult fractal_dimension(const WeightedGraph& g, int r_max = 16);

struct AntFeatures {
    PowerlawFit powerlaw;
    Partition vig_partition;
    FractalResult vig_fractal;
    FractalResult cvig_fractal;

    std::array<double, 4> values() const {
        return {powerlaw.alpha, vig_partition.modularity, vig_fractal.dimension, cvig_fractal.dimension};
    }
};

/// Per-variable occurrence counts, variables that never occur dropped.
std::vector<double> occurring_variable_counts(const Cnf& cnf);

AntFeatures ant_features(const Cnf& cnf, uint64_t louvain_seed = 0);

}  // namespace satfeat
