#include "satfeat/preprocess.hpp"

#include <cstdint>

namespace satfeat {

const char* to_string(PreprocessStatus s) {
    switch (s) {
        case PreprocessStatus::Reduced: return "REDUCED";
        case PreprocessStatus::SolvedSat: return "SOLVED_SAT";
        case PreprocessStatus::SolvedUnsat: return "SOLVED_UNSAT";
    }
    return "?";
}

Cnf remove_tautologies(const Cnf& cnf, std::size_t* removed) {
    std::vector<Clause> kept;
    kept.reserve(cnf.num_clauses());
    std::size_t dropped = 0;
    for (const Clause& c : cnf.clauses()) {
        if (is_tautology(c))
            ++dropped;
        else
            kept.push_back(c);
    }
    if (removed) *removed = dropped;
    return Cnf(cnf.num_vars(), std::move(kept));
}

namespace {

enum : int8_t { kFalse = -1, kUnset = 0, kTrue = 1 };

int8_t value_of(const std::vector<int8_t>& assign, Lit l) {
    const int8_t v = assign[l.var()];
    return l.negative() ? static_cast<int8_t>(-v) : v;
}

}  // namespace

PreprocessResult unit_propagate(const Cnf& cnf) {
    PreprocessResult res;
    std::vector<int8_t> assign(cnf.num_vars(), kUnset);
    std::vector<uint32_t> false_count(cnf.num_clauses(), 0);
    std::vector<Lit> queue;
    bool conflict = false;

    auto enqueue = [&](Lit l) {
        const int8_t v = value_of(assign, l);
        if (v == kTrue) return;
        if (v == kFalse) {
            conflict = true;
            return;
        }
        assign[l.var()] = l.negative() ? kFalse : kTrue;
        queue.push_back(l);
        res.forced.push_back(l);
    };

    for (const Clause& c : cnf.clauses()) {
        if (c.empty()) conflict = true;
        if (c.size() == 1) enqueue(c[0]);
        if (conflict) break;
    }

    for (std::size_t head = 0; head < queue.size() && !conflict; ++head) {
        const Lit l = queue[head];
        for (uint32_t ci : cnf.occurrences(~l)) {
            const Clause& c = cnf.clause(ci);
            ++false_count[ci];
            if (c.size() - false_count[ci] > 1) continue;
            Lit unset;
            bool found_unset = false;
            bool satisfied = false;
            for (Lit k : c) {
                const int8_t v = value_of(assign, k);
                if (v == kTrue) {
                    satisfied = true;
                    break;
                }
                if (v == kUnset) {
                    unset = k;
                    found_unset = true;
                }
            }
            if (satisfied) continue;
            if (!found_unset) {
                conflict = true;
                break;
            }
            enqueue(unset);
            if (conflict) break;
        }
    }

    if (conflict) {
        res.status = PreprocessStatus::SolvedUnsat;
        return res;
    }

    std::vector<Clause> residual;
    for (const Clause& c : cnf.clauses()) {
        Clause reduced;
        bool satisfied = false;
        for (Lit k : c) {
            const int8_t v = value_of(assign, k);
            if (v == kTrue) {
                satisfied = true;
                break;
            }
            if (v == kUnset) reduced.push_back(k);
        }
        if (!satisfied) residual.push_back(std::move(reduced));
    }
    if (residual.empty()) {
        res.status = PreprocessStatus::SolvedSat;
        return res;
    }
    res.status = PreprocessStatus::Reduced;
    res.cnf = Cnf(cnf.num_vars(), std::move(residual));
    return res;
}

PreprocessResult preprocess(const Cnf& cnf) {
    std::size_t removed = 0;
    const Cnf clean = remove_tautologies(cnf, &removed);
    PreprocessResult res = unit_propagate(clean);
    res.removed_tautologies = removed;
    if (res.status != PreprocessStatus::Reduced) return res;

    const Cnf& residual = *res.cnf;
    std::vector<uint32_t> new_index(residual.num_vars(), UINT32_MAX);
    for (uint32_t v = 0; v < residual.num_vars(); ++v) {
        const auto occ = residual.occurrence_count(v);
        if (occ.pos + occ.neg == 0) continue;
        new_index[v] = static_cast<uint32_t>(res.var_map.size());
        res.var_map.push_back(v);
    }
    std::vector<Clause> renamed;
    renamed.reserve(residual.num_clauses());
    for (const Clause& c : residual.clauses()) {
        Clause r;
        r.reserve(c.size());
        for (Lit l : c) r.emplace_back(new_index[l.var()], l.negative());
        renamed.push_back(std::move(r));
    }
    res.cnf = Cnf(static_cast<uint32_t>(res.var_map.size()), std::move(renamed));
    return res;
}

}  // namespace satfeat
