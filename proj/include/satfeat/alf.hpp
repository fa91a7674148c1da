#pragma once

#include <string>
#include <vector>

#include "satfeat/cnf.hpp"

namespace satfeat {

/// Literal weights per iteration, indexed by Lit::code(). Iteration 0 is all
/// ones; each later iteration is rescaled to mean 1 over the 2n literals.
using LiteralWeights = std::vector<std::vector<double>>;

inline constexpr int kRecursiveWeightIterations = 3;

LiteralWeights recursive_weights(const Cnf& cnf, int iterations = kRecursiveWeightIterations);

struct AlfSlot {
    std::string name;       // alf_<source>[_<statistic>]
    std::string source;
    std::string statistic;  // "value" for densities
};

/// Output layout of alf_feature_vector.
const std::vector<AlfSlot>& alf_layout();

std::vector<double> alf_feature_vector(const Cnf& cnf);

}  // namespace satfeat
