#pragma once

#include <cstdint>
#include <vector>

#include "satfeat/cnf.hpp"

namespace satfeat::detail {

/// Two-watched-literal unit propagation with a chronological trail.
class Propagator {
public:
    enum : int8_t { kFalse = -1, kUnset = 0, kTrue = 1 };

    explicit Propagator(const Cnf& cnf);

    /// False if the formula is already contradictory at decision level 0.
    bool root_ok() const { return root_ok_; }

    int8_t value(Lit l) const {
        const int8_t v = assign_[l.var()];
        return l.negative() ? static_cast<int8_t>(-v) : v;
    }
    bool assigned(uint32_t var) const { return assign_[var] != kUnset; }
    uint32_t num_assigned() const { return static_cast<uint32_t>(trail_.size()); }
    uint32_t level() const { return static_cast<uint32_t>(trail_lim_.size()); }
    uint64_t propagations() const { return propagations_; }

    /// Opens a new decision level and assigns `l`; returns false on conflict.
    bool decide(Lit l);
    void backtrack(uint32_t level);

    /// Minimum-size unsatisfied clauses' most frequent unassigned variable
    /// (ties by lowest index); UINT32_MAX when every clause is satisfied.
    uint32_t pick_mom_variable() const;

private:
    void enqueue(Lit l);
    bool propagate();

    const Cnf& cnf_;
    std::vector<Clause> clauses_;
    std::vector<std::vector<uint32_t>> watches_;
    std::vector<int8_t> assign_;
    std::vector<Lit> trail_;
    std::vector<uint32_t> trail_lim_;
    std::size_t qhead_ = 0;
    uint64_t propagations_ = 0;
    bool root_ok_ = true;
};

}  // namespace satfeat::detail
