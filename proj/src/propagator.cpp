#include "propagator.hpp"

#include <algorithm>

namespace satfeat::detail {

Propagator::Propagator(const Cnf& cnf)
    : cnf_(cnf), watches_(2 * static_cast<std::size_t>(cnf.num_vars())), assign_(cnf.num_vars(), kUnset) {
    clauses_.reserve(cnf.num_clauses());
    for (const Clause& c : cnf.clauses()) {
        if (c.empty()) {
            root_ok_ = false;
            continue;
        }
        if (is_tautology(c)) continue;
        if (c.size() == 1) {
            if (value(c[0]) == kFalse) root_ok_ = false;
            else if (value(c[0]) == kUnset) enqueue(c[0]);
            continue;
        }
        const auto idx = static_cast<uint32_t>(clauses_.size());
        clauses_.push_back(c);
        watches_[c[0].code()].push_back(idx);
        watches_[c[1].code()].push_back(idx);
    }
    if (root_ok_) root_ok_ = propagate();
}

void Propagator::enqueue(Lit l) {
    assign_[l.var()] = l.negative() ? kFalse : kTrue;
    trail_.push_back(l);
}

bool Propagator::decide(Lit l) {
    trail_lim_.push_back(static_cast<uint32_t>(trail_.size()));
    enqueue(l);
    return propagate();
}

void Propagator::backtrack(uint32_t lvl) {
    if (lvl >= level()) return;
    const uint32_t keep = trail_lim_[lvl];
    for (std::size_t i = keep; i < trail_.size(); ++i) assign_[trail_[i].var()] = kUnset;
    trail_.resize(keep);
    trail_lim_.resize(lvl);
    qhead_ = std::min<std::size_t>(qhead_, keep);
}

bool Propagator::propagate() {
    while (qhead_ < trail_.size()) {
        const Lit falsified = ~trail_[qhead_++];
        auto& ws = watches_[falsified.code()];
        std::size_t i = 0, j = 0;
        bool conflict = false;
        while (i < ws.size()) {
            const uint32_t ci = ws[i++];
            Clause& c = clauses_[ci];
            if (c[0] == falsified) std::swap(c[0], c[1]);
            if (value(c[0]) == kTrue) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (value(c[k]) != kFalse) {
                    std::swap(c[1], c[k]);
                    watches_[c[1].code()].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[j++] = ci;
            if (value(c[0]) == kFalse) {
                conflict = true;
                while (i < ws.size()) ws[j++] = ws[i++];
            } else {
                enqueue(c[0]);
                ++propagations_;
            }
        }
        ws.resize(j);
        if (conflict) {
            qhead_ = trail_.size();
            return false;
        }
    }
    return true;
}

uint32_t Propagator::pick_mom_variable() const {
    std::size_t min_size = SIZE_MAX;
    for (const Clause& c : clauses_) {
        std::size_t open = 0;
        bool sat = false;
        for (Lit l : c) {
            const int8_t v = value(l);
            if (v == kTrue) {
                sat = true;
                break;
            }
            open += v == kUnset;
        }
        if (!sat && open > 0) min_size = std::min(min_size, open);
    }
    if (min_size == SIZE_MAX) return UINT32_MAX;

    std::vector<uint32_t> counts(cnf_.num_vars(), 0);
    for (const Clause& c : clauses_) {
        std::size_t open = 0;
        bool sat = false;
        for (Lit l : c) {
            const int8_t v = value(l);
            if (v == kTrue) {
                sat = true;
                break;
            }
            open += v == kUnset;
        }
        if (sat || open != min_size) continue;
        for (Lit l : c)
            if (value(l) == kUnset) ++counts[l.var()];
    }
    uint32_t best = UINT32_MAX;
    for (uint32_t v = 0; v < counts.size(); ++v)
        if (counts[v] > 0 && (best == UINT32_MAX || counts[v] > counts[best])) best = v;
    return best;
}

}  // namespace satfeat::detail
