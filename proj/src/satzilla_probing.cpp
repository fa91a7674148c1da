#include <chrono>
#include <cmath>

#include "propagator.hpp"
#include "satfeat/rng.hpp"
#include "satfeat/satzilla.hpp"

namespace satfeat {

namespace {

class Budget {
public:
    explicit Budget(int ms) : ms_(ms), start_(std::chrono::steady_clock::now()) {}
    bool exceeded() const {
        if (ms_ <= 0) return false;
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() >= ms_;
    }

private:
    int ms_;
    std::chrono::steady_clock::time_point start_;
};

// log2 of the mean over probes of (2^(d+1) - 1), the node count of a complete
// binary tree of depth d, i.e. the Knuth estimate of each random descent.
double knuth_log2_mean(const std::vector<uint32_t>& depths) {
    if (depths.empty()) return 0;
    uint32_t top = 0;
    for (uint32_t d : depths) top = std::max(top, d + 1);
    double total = 0;
    for (uint32_t d : depths) total += std::ldexp(1.0, static_cast<int>(d + 1) - static_cast<int>(top)) -
                                       std::ldexp(1.0, -static_cast<int>(top));
    return static_cast<double>(top) + std::log2(total) - std::log2(static_cast<double>(depths.size()));
}

}  // namespace

DpllProbeResult dpll_probe(const Cnf& cnf, uint64_t seed, const DpllProbeOptions& options) {
    DpllProbeResult r;
    const Budget budget(options.budget_ms);

    {
        detail::Propagator p(cnf);
        std::size_t next = 0;
        uint64_t nodes = 0;
        auto record = [&] {
            while (next < kProbeDepths.size() && nodes >= static_cast<uint64_t>(kProbeDepths[next]))
                r.unit_props_at_depth[next++] = static_cast<double>(p.propagations());
        };
        struct Frame {
            Lit lit;
            bool flipped;
        };
        std::vector<Frame> stack;
        const auto limit = static_cast<uint64_t>(std::max(options.node_limit, 1));
        bool done = !p.root_ok();
        while (!done && nodes < limit) {
            if (budget.exceeded()) {
                r.truncated = true;
                break;
            }
            const uint32_t var = p.pick_mom_variable();
            if (var == UINT32_MAX) break;
            const Lit l(var, false);
            stack.push_back({l, false});
            ++nodes;
            bool ok = p.decide(l);
            record();
            while (!ok && nodes < limit) {
                while (!stack.empty() && stack.back().flipped) stack.pop_back();
                if (stack.empty()) {
                    done = true;
                    break;
                }
                Frame& top = stack.back();
                top.flipped = true;
                top.lit = ~top.lit;
                p.backtrack(static_cast<uint32_t>(stack.size() - 1));
                ++nodes;
                ok = p.decide(top.lit);
                record();
            }
        }
        for (; next < kProbeDepths.size(); ++next) r.unit_props_at_depth[next] = static_cast<double>(p.propagations());
    }

    detail::Propagator p(cnf);
    Rng rng(derive_seed(seed, 0));
    std::vector<uint32_t> pool(cnf.num_vars());
    for (int probe = 0; probe < options.random_probes; ++probe) {
        if (budget.exceeded()) {
            r.truncated = true;
            break;
        }
        p.backtrack(0);
        uint32_t depth = 0;
        // nothing to decide once there are no clauses left
        if (p.root_ok() && cnf.num_clauses() > 0) {
            for (uint32_t v = 0; v < pool.size(); ++v) pool[v] = v;
            std::size_t open = pool.size();
            while (true) {
                uint32_t var = UINT32_MAX;
                while (open > 0) {
                    const auto idx = static_cast<std::size_t>(rng.below(open));
                    const uint32_t cand = pool[idx];
                    std::swap(pool[idx], pool[open - 1]);
                    --open;
                    if (!p.assigned(cand)) {
                        var = cand;
                        break;
                    }
                }
                if (var == UINT32_MAX) break;
                ++depth;
                if (!p.decide(Lit(var, rng.chance(0.5)))) break;
            }
        }
        r.probe_depths.push_back(depth);
    }

    if (!r.probe_depths.empty()) {
        double sum = 0;
        for (uint32_t d : r.probe_depths) sum += d;
        r.mean_depth_to_contradiction = sum / static_cast<double>(r.probe_depths.size());
    }
    r.est_log_nodes = knuth_log2_mean(r.probe_depths);
    return r;
}

std::vector<double> satzilla_probing_values(const ProbeReport& report) {
    std::vector<double> out;
    out.reserve(31);
    for (double v : report.dpll.unit_props_at_depth) out.push_back(v);
    out.push_back(report.dpll.mean_depth_to_contradiction);
    out.push_back(report.dpll.est_log_nodes);
    const LocalSearchResult& ls = report.local_search;
    out.push_back(ls.best_unsat.mean);
    out.push_back(ls.best_unsat.cv);
    for (const StatSummary* s : {&ls.steps_to_best, &ls.improvement_per_step, &ls.first_min_fraction})
        for (StatField f : kLocalSearchSchedule) out.push_back(s->get(f));
    out.push_back(ls.unsat_at_minima_mean);
    return out;
}

}  // namespace satfeat
