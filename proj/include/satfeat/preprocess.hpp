#pragma once

#include <optional>
#include <vector>

#include "satfeat/cnf.hpp"

namespace satfeat {

enum class PreprocessStatus { Reduced, SolvedSat, SolvedUnsat };

const char* to_string(PreprocessStatus s);

struct PreprocessResult {
    PreprocessStatus status = PreprocessStatus::Reduced;
    /// Present iff status == Reduced.
    std::optional<Cnf> cnf;
    /// Literals implied by unit propagation, in propagation order, in the input's numbering.
    std::vector<Lit> forced;
    std::size_t removed_tautologies = 0;
    /// new variable index -> input variable index. Filled by preprocess() only.
    std::vector<uint32_t> var_map;
};

Cnf remove_tautologies(const Cnf& cnf, std::size_t* removed = nullptr);

/// Unit propagation to fixpoint. The residual keeps the input's variable numbering.
PreprocessResult unit_propagate(const Cnf& cnf);

/// Tautology removal, then unit propagation, then dense order-preserving
/// renumbering of the variables that still occur in the residual formula.
PreprocessResult preprocess(const Cnf& cnf);

}  // namespace satfeat
