#include <algorithm>
#include <stdexcept>

#include "satfeat/rng.hpp"
#include "satfeat/satzilla.hpp"

namespace satfeat {

namespace {

constexpr double kScoreEps = 1e-10;

// SAPS / GSAT state over the non-empty, non-tautological clauses of a formula.
// score[v] is the drop in weighted unsatisfied mass if v were flipped.
class SearchState {
public:
    SearchState(const Cnf& cnf, const LocalSearchOptions& opt) : opt_(opt), num_vars_(cnf.num_vars()) {
        for (const Clause& c : cnf.clauses())
            if (!c.empty() && !is_tautology(c)) clauses_.push_back(c);
        occ_.assign(2 * static_cast<std::size_t>(num_vars_), {});
        for (uint32_t i = 0; i < clauses_.size(); ++i)
            for (Lit l : clauses_[i]) occ_[l.code()].push_back(i);
    }

    std::size_t num_clauses() const { return clauses_.size(); }
    uint32_t unsat() const { return static_cast<uint32_t>(unsat_list_.size()); }

    void reset(Rng& rng) {
        value_.assign(num_vars_, 0);
        for (auto& v : value_) v = rng.chance(0.5) ? 1 : 0;
        weight_.assign(clauses_.size(), 1.0);
        true_count_.assign(clauses_.size(), 0);
        unsat_pos_.assign(clauses_.size(), UINT32_MAX);
        unsat_list_.clear();
        for (uint32_t i = 0; i < clauses_.size(); ++i) {
            for (Lit l : clauses_[i]) true_count_[i] += is_true(l);
            if (true_count_[i] == 0) add_unsat(i);
        }
        recompute_scores();
    }

    // Best (score, var) among variables of unsatisfied clauses; ties -> lowest var.
    std::pair<double, uint32_t> best_candidate() const {
        double best = -1e300;
        uint32_t best_var = UINT32_MAX;
        for (uint32_t ci : unsat_list_)
            for (Lit l : clauses_[ci]) {
                const uint32_t v = l.var();
                if (score_[v] > best || (score_[v] == best && v < best_var)) {
                    best = score_[v];
                    best_var = v;
                }
            }
        return {best, best_var};
    }

    uint32_t random_unsat_var(Rng& rng) const {
        const Clause& c = clauses_[unsat_list_[rng.below(unsat_list_.size())]];
        return c[rng.below(c.size())].var();
    }

    void flip(uint32_t v) {
        value_[v] ^= 1;
        const Lit now_true(v, value_[v] == 0);
        const Lit now_false = ~now_true;
        for (uint32_t ci : occ_[now_true.code()]) {
            const double w = weight_[ci];
            if (++true_count_[ci] == 1) {
                remove_unsat(ci);
                for (Lit k : clauses_[ci]) score_[k.var()] -= w;
                score_[v] -= w;
            } else if (true_count_[ci] == 2) {
                for (Lit k : clauses_[ci])
                    if (k != now_true && is_true(k)) score_[k.var()] += w;
            }
        }
        for (uint32_t ci : occ_[now_false.code()]) {
            const double w = weight_[ci];
            if (--true_count_[ci] == 0) {
                add_unsat(ci);
                score_[v] += w;
                for (Lit k : clauses_[ci]) score_[k.var()] += w;
            } else if (true_count_[ci] == 1) {
                for (Lit k : clauses_[ci])
                    if (is_true(k)) score_[k.var()] -= w;
            }
        }
    }

    // SAPS escape: scale unsatisfied clause weights, occasionally smooth.
    void scale_and_smooth(Rng& rng) {
        for (uint32_t ci : unsat_list_) {
            const double delta = weight_[ci] * (opt_.alpha - 1.0);
            weight_[ci] += delta;
            for (Lit k : clauses_[ci]) score_[k.var()] += delta;
        }
        if (rng.chance(opt_.smooth_probability)) {
            double mean = 0;
            for (double w : weight_) mean += w;
            mean /= static_cast<double>(weight_.size());
            for (double& w : weight_) w = opt_.rho * w + (1.0 - opt_.rho) * mean;
            recompute_scores();
        }
    }

private:
    bool is_true(Lit l) const { return value_[l.var()] != static_cast<char>(l.negative()); }

    void add_unsat(uint32_t ci) {
        unsat_pos_[ci] = static_cast<uint32_t>(unsat_list_.size());
        unsat_list_.push_back(ci);
    }
    void remove_unsat(uint32_t ci) {
        const uint32_t pos = unsat_pos_[ci];
        const uint32_t last = unsat_list_.back();
        unsat_list_[pos] = last;
        unsat_pos_[last] = pos;
        unsat_list_.pop_back();
        unsat_pos_[ci] = UINT32_MAX;
    }

    void recompute_scores() {
        score_.assign(num_vars_, 0.0);
        for (uint32_t i = 0; i < clauses_.size(); ++i) {
            if (true_count_[i] == 0) {
                for (Lit k : clauses_[i]) score_[k.var()] += weight_[i];
            } else if (true_count_[i] == 1) {
                for (Lit k : clauses_[i])
                    if (is_true(k)) score_[k.var()] -= weight_[i];
            }
        }
    }

    const LocalSearchOptions& opt_;
    uint32_t num_vars_;
    std::vector<Clause> clauses_;
    std::vector<std::vector<uint32_t>> occ_;
    std::vector<char> value_;
    std::vector<double> weight_;
    std::vector<uint32_t> true_count_;
    std::vector<uint32_t> unsat_pos_;
    std::vector<uint32_t> unsat_list_;
    std::vector<double> score_;
};

LocalSearchRun run_once(SearchState& state, Rng& rng, const LocalSearchOptions& opt) {
    LocalSearchRun run;
    state.reset(rng);
    run.initial_unsat = run.best_unsat = state.unsat();
    bool at_minimum = false;
    bool have_first = false;
    uint32_t first_min = 0;
    auto record_minimum = [&] {
        if (at_minimum) return;
        at_minimum = true;
        run.unsat_at_minima.push_back(state.unsat());
        if (!have_first) {
            have_first = true;
            first_min = state.unsat();
        }
    };

    for (int step = 1; step <= opt.cutoff && state.unsat() > 0; ++step) {
        const auto [score, var] = state.best_candidate();
        if (score > kScoreEps) {
            state.flip(var);
            at_minimum = false;
        } else {
            record_minimum();
            if (rng.chance(opt.walk_probability)) {
                state.flip(state.random_unsat_var(rng));
                at_minimum = false;
            } else if (opt.algorithm == LocalSearchAlgorithm::Saps) {
                state.scale_and_smooth(rng);
            } else {
                state.flip(var);
                at_minimum = false;
            }
        }
        if (state.unsat() < run.best_unsat) {
            run.best_unsat = state.unsat();
            run.steps_to_best = static_cast<uint32_t>(step);
        }
    }
    if (state.unsat() == 0) record_minimum();
    if (!have_first) first_min = run.best_unsat;

    const double gained = static_cast<double>(run.initial_unsat) - run.best_unsat;
    run.first_min_fraction = gained > 0 ? (static_cast<double>(run.initial_unsat) - first_min) / gained : 1.0;
    run.improvement_per_step = run.steps_to_best > 0 ? gained / run.steps_to_best : 0.0;
    return run;
}

}  // namespace

LocalSearchResult local_search_probe(const Cnf& cnf, uint64_t seed, const LocalSearchOptions& options) {
    if (options.cutoff <= 0) throw std::invalid_argument("local search cutoff must be positive");
    if (options.runs <= 0) throw std::invalid_argument("local search runs must be positive");
    LocalSearchResult result;
    SearchState state(cnf, options);
    if (state.num_clauses() == 0) return result;

    for (int r = 0; r < options.runs; ++r) {
        Rng rng(derive_seed(seed, 1000 + static_cast<uint64_t>(r)));
        result.runs.push_back(run_once(state, rng, options));
    }

    std::vector<double> best, steps, improvement, first_fraction;
    double minima_sum = 0;
    std::size_t minima_count = 0;
    for (const LocalSearchRun& run : result.runs) {
        best.push_back(run.best_unsat);
        steps.push_back(run.steps_to_best);
        improvement.push_back(run.improvement_per_step);
        first_fraction.push_back(run.first_min_fraction);
        for (uint32_t u : run.unsat_at_minima) minima_sum += u;
        minima_count += run.unsat_at_minima.size();
    }
    result.best_unsat = summarize(best);
    result.steps_to_best = summarize(steps);
    result.improvement_per_step = summarize(improvement, ValueKind::Continuous);
    result.first_min_fraction = summarize(first_fraction, ValueKind::Continuous);
    result.unsat_at_minima_mean = minima_count > 0 ? minima_sum / static_cast<double>(minima_count) : 0.0;
    return result;
}

}  // namespace satfeat
