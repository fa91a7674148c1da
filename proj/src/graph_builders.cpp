#include "satfeat/graph_builders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace satfeat {

namespace {

std::vector<VertexKind> bipartite_kinds(const Cnf& cnf) {
    std::vector<VertexKind> kinds(cnf.num_vars() + cnf.num_clauses(), VertexKind::Clause);
    std::fill(kinds.begin(), kinds.begin() + cnf.num_vars(), VertexKind::Variable);
    return kinds;
}

std::vector<VertexKind> literal_kinds(uint32_t num_vars) {
    return std::vector<VertexKind>(2 * static_cast<std::size_t>(num_vars), VertexKind::Literal);
}

// Distinct variables of each clause, in first-occurrence order.
std::vector<std::vector<uint32_t>> clause_variable_sets(const Cnf& cnf) {
    std::vector<std::vector<uint32_t>> sets(cnf.num_clauses());
    for (std::size_t ci = 0; ci < cnf.num_clauses(); ++ci) {
        const Clause& c = cnf.clause(ci);
        auto& s = sets[ci];
        s.reserve(c.size());
        for (Lit l : c)
            if (std::find(s.begin(), s.end(), l.var()) == s.end()) s.push_back(l.var());
    }
    return sets;
}

// Accumulates weight(k) over clauses for every pair of distinct variables
// sharing a clause of k >= 2 variables. Each clause visits a pair once.
template <typename WeightFn>
std::vector<Edge> variable_pair_edges(const Cnf& cnf, WeightFn weight, bool accumulate) {
    const auto sets = clause_variable_sets(cnf);
    std::vector<std::vector<uint32_t>> var_clauses(cnf.num_vars());
    for (std::size_t ci = 0; ci < sets.size(); ++ci)
        for (uint32_t v : sets[ci]) var_clauses[v].push_back(static_cast<uint32_t>(ci));

    std::vector<double> acc(cnf.num_vars(), 0.0);
    std::vector<char> touched_flag(cnf.num_vars(), 0);
    std::vector<uint32_t> touched;
    std::vector<Edge> edges;
    for (uint32_t v = 0; v < cnf.num_vars(); ++v) {
        for (uint32_t ci : var_clauses[v]) {
            const auto& s = sets[ci];
            if (s.size() < 2) continue;
            const double w = weight(s.size());
            for (uint32_t u : s) {
                if (u <= v) continue;
                if (!touched_flag[u]) {
                    touched_flag[u] = 1;
                    touched.push_back(u);
                    acc[u] = 0;
                }
                if (accumulate) acc[u] += w;
                else acc[u] = w;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (uint32_t u : touched) {
            edges.push_back({v, u, acc[u]});
            touched_flag[u] = 0;
        }
        touched.clear();
    }
    return edges;
}

struct CodeVecHash {
    std::size_t operator()(const std::vector<uint32_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::vector<uint32_t> sorted_codes(const Clause& c) {
    std::vector<uint32_t> codes;
    codes.reserve(c.size());
    for (Lit l : c) codes.push_back(l.code());
    std::sort(codes.begin(), codes.end());
    return codes;
}

// Index of binary clauses: partners[a] holds b for every non-tautological (a, b).
class BinaryIndex {
public:
    explicit BinaryIndex(const Cnf& cnf) : partners_(2 * static_cast<std::size_t>(cnf.num_vars())) {
        for (const Clause& c : cnf.clauses()) {
            if (c.size() != 2 || c[0] == ~c[1]) continue;
            partners_[c[0].code()].push_back(c[1]);
            partners_[c[1].code()].push_back(c[0]);
        }
        for (auto& p : partners_) {
            std::sort(p.begin(), p.end());
            p.erase(std::unique(p.begin(), p.end()), p.end());
        }
    }
    const std::vector<Lit>& partners(Lit a) const { return partners_[a.code()]; }
    bool contains(Lit a, Lit b) const {
        const auto& p = partners_[a.code()];
        return std::binary_search(p.begin(), p.end(), b);
    }

private:
    std::vector<std::vector<Lit>> partners_;
};

std::unordered_set<std::vector<uint32_t>, CodeVecHash> long_clause_set(const Cnf& cnf) {
    std::unordered_set<std::vector<uint32_t>, CodeVecHash> set;
    for (const Clause& c : cnf.clauses())
        if (c.size() >= 3) set.insert(sorted_codes(c));
    return set;
}

void sort_unique(GateSet& gates) {
    auto key_less = [](const Gate& a, const Gate& b) {
        if (a.head != b.head) return a.head < b.head;
        return a.body < b.body;
    };
    std::sort(gates.begin(), gates.end(), key_less);
    gates.erase(std::unique(gates.begin(), gates.end()), gates.end());
}

std::vector<Edge> merge_undirected(std::vector<Edge> edges, bool sum_weights) {
    for (Edge& e : edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    std::vector<Edge> merged;
    for (const Edge& e : edges) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
            if (sum_weights) merged.back().w += e.w;
        } else {
            merged.push_back(e);
        }
    }
    return merged;
}

}  // namespace

WeightedGraph build_vcg(const Cnf& cnf) {
    const auto sets = clause_variable_sets(cnf);
    std::vector<Edge> edges;
    edges.reserve(cnf.num_literals());
    for (std::size_t ci = 0; ci < sets.size(); ++ci)
        for (uint32_t v : sets[ci]) edges.push_back({v, cnf.num_vars() + static_cast<uint32_t>(ci), 1.0});
    return WeightedGraph(cnf.num_vars() + static_cast<uint32_t>(cnf.num_clauses()), edges, false,
                         bipartite_kinds(cnf));
}

WeightedGraph build_vg(const Cnf& cnf) {
    auto edges = variable_pair_edges(cnf, [](std::size_t) { return 1.0; }, false);
    return WeightedGraph(cnf.num_vars(), edges, false);
}

WeightedGraph build_vig(const Cnf& cnf) {
    auto edges = variable_pair_edges(
        cnf, [](std::size_t k) { return 2.0 / (static_cast<double>(k) * static_cast<double>(k - 1)); }, true);
    return WeightedGraph(cnf.num_vars(), edges, false);
}

WeightedGraph build_alf_variable_graph(const Cnf& cnf) {
    auto edges = variable_pair_edges(
        cnf, [](std::size_t k) { return std::ldexp(1.0, -static_cast<int>(k)); }, true);
    return WeightedGraph(cnf.num_vars(), edges, false);
}

WeightedGraph build_cvig(const Cnf& cnf) {
    const auto sets = clause_variable_sets(cnf);
    std::vector<Edge> edges;
    edges.reserve(cnf.num_literals());
    for (std::size_t ci = 0; ci < sets.size(); ++ci) {
        const double w = 1.0 / static_cast<double>(sets[ci].size());
        for (uint32_t v : sets[ci]) edges.push_back({v, cnf.num_vars() + static_cast<uint32_t>(ci), w});
    }
    return WeightedGraph(cnf.num_vars() + static_cast<uint32_t>(cnf.num_clauses()), edges, false,
                         bipartite_kinds(cnf));
}

WeightedGraph build_cv_signed(const Cnf& cnf, bool positive) {
    std::vector<Edge> edges;
    for (std::size_t ci = 0; ci < cnf.num_clauses(); ++ci)
        for (Lit l : cnf.clause(ci))
            if (l.negative() != positive) edges.push_back({l.var(), cnf.num_vars() + static_cast<uint32_t>(ci), 1.0});
    return WeightedGraph(cnf.num_vars() + static_cast<uint32_t>(cnf.num_clauses()), edges, false,
                         bipartite_kinds(cnf));
}

WeightedGraph build_clause_graph(const Cnf& cnf) {
    const auto m = static_cast<uint32_t>(cnf.num_clauses());
    std::vector<uint32_t> shared(m, 0);
    std::vector<uint32_t> touched;
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < m; ++i) {
        for (Lit l : cnf.clause(i))
            for (uint32_t j : cnf.occurrences(l)) {
                if (j <= i) continue;
                if (shared[j]++ == 0) touched.push_back(j);
            }
        std::sort(touched.begin(), touched.end());
        for (uint32_t j : touched) {
            edges.push_back({i, j, static_cast<double>(shared[j])});
            shared[j] = 0;
        }
        touched.clear();
    }
    return WeightedGraph(m, edges, false);
}

WeightedGraph build_resolution_graph(const Cnf& cnf) {
    const auto m = static_cast<uint32_t>(cnf.num_clauses());
    std::vector<uint32_t> complementary(m, 0);
    std::vector<uint32_t> touched;
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < m; ++i) {
        const Clause& ci = cnf.clause(i);
        for (Lit l : ci)
            for (uint32_t j : cnf.occurrences(~l)) {
                if (j <= i) continue;
                if (complementary[j]++ == 0) touched.push_back(j);
            }
        std::sort(touched.begin(), touched.end());
        for (uint32_t j : touched) {
            if (complementary[j] == 1) {
                const int len = static_cast<int>(ci.size() + cnf.clause(j).size()) - 2;
                edges.push_back({i, j, std::ldexp(1.0, -len)});
            }
            complementary[j] = 0;
        }
        touched.clear();
    }
    return WeightedGraph(m, edges, false);
}

WeightedGraph build_big(const Cnf& cnf) {
    std::vector<Edge> edges;
    for (const Clause& c : cnf.clauses()) {
        if (c.size() != 2 || c[0] == ~c[1]) continue;
        edges.push_back({(~c[0]).code(), c[1].code(), 1.0});
        edges.push_back({(~c[1]).code(), c[0].code(), 1.0});
    }
    return WeightedGraph(2 * cnf.num_vars(), edges, true, literal_kinds(cnf.num_vars()));
}

GateSet detect_and_gates(const Cnf& cnf) {
    const BinaryIndex bins(cnf);
    GateSet gates;
    for (const Clause& c : cnf.clauses()) {
        if (c.size() < 3 || is_tautology(c)) continue;
        for (Lit head : c) {
            if (bins.partners(~head).size() < c.size() - 1) continue;
            bool complete = true;
            for (Lit k : c) {
                if (k == head) continue;
                if (!bins.contains(~head, ~k)) {
                    complete = false;
                    break;
                }
            }
            if (!complete) continue;
            Gate g{GateKind::And, head, {}};
            for (Lit k : c)
                if (k != head) g.body.push_back(~k);
            std::sort(g.body.begin(), g.body.end());
            gates.push_back(std::move(g));
        }
    }
    sort_unique(gates);
    return gates;
}

GateSet detect_band_gates(const Cnf& cnf) {
    const BinaryIndex bins(cnf);
    const auto long_clauses = long_clause_set(cnf);
    std::vector<char> has_and(2 * static_cast<std::size_t>(cnf.num_vars()), 0);
    for (const Gate& g : detect_and_gates(cnf)) has_and[g.head.code()] = 1;

    std::vector<char> in_body(2 * static_cast<std::size_t>(cnf.num_vars()), 0);
    GateSet gates;
    for (uint32_t code = 0; code < 2 * cnf.num_vars(); ++code) {
        const Lit head = Lit::from_code(code);
        const auto& body = bins.partners(~head);
        if (body.size() < 2 || has_and[code]) continue;

        bool contradictory = false;
        for (std::size_t i = 1; i < body.size(); ++i)
            if (body[i].var() == body[i - 1].var()) contradictory = true;
        if (contradictory) continue;

        Clause long_clause{head};
        for (Lit b : body) long_clause.push_back(~b);
        if (long_clauses.count(sorted_codes(long_clause))) continue;

        // Blocked on head: every clause with -head resolves to a tautology.
        for (Lit b : body) in_body[b.code()] = 1;
        bool blocked = true;
        for (uint32_t ci : cnf.occurrences(~head)) {
            const Clause& d = cnf.clause(ci);
            bool taut = false;
            for (Lit k : d)
                if (in_body[k.code()]) {
                    taut = true;
                    break;
                }
            if (!taut && !is_tautology(d)) {
                blocked = false;
                break;
            }
        }
        for (Lit b : body) in_body[b.code()] = 0;
        if (blocked) gates.push_back(Gate{GateKind::BlockedAnd, head, body});
    }
    sort_unique(gates);
    return gates;
}

GateSet detect_exo_gates(const Cnf& cnf) {
    const BinaryIndex bins(cnf);
    GateSet gates;
    for (const Clause& c : cnf.clauses()) {
        if (c.size() < 2 || is_tautology(c)) continue;
        bool complete = true;
        for (std::size_t i = 0; i < c.size() && complete; ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!bins.contains(~c[i], ~c[j])) {
                    complete = false;
                    break;
                }
        if (!complete) continue;
        std::vector<Lit> lits(c.begin(), c.end());
        std::sort(lits.begin(), lits.end());
        // for k = 2 the mirror (-a, -b) is reported too; picking one would depend on variable numbering
        gates.push_back(Gate{GateKind::ExactlyOne, Lit(), std::move(lits)});
    }
    sort_unique(gates);
    return gates;
}

WeightedGraph build_gate_graph(const GateSet& gates, uint32_t num_vars) {
    std::vector<Edge> edges;
    for (const Gate& g : gates) {
        const double w = std::ldexp(1.0, -static_cast<int>(g.body.size()));
        for (Lit b : g.body) edges.push_back({g.head.code(), b.code(), w});
    }
    return WeightedGraph(2 * num_vars, merge_undirected(std::move(edges), true), false, literal_kinds(num_vars));
}

WeightedGraph build_exo_graph(const GateSet& gates, uint32_t num_vars) {
    std::vector<Edge> edges;
    for (const Gate& g : gates)
        for (std::size_t i = 0; i < g.body.size(); ++i)
            for (std::size_t j = i + 1; j < g.body.size(); ++j)
                edges.push_back({g.body[i].code(), g.body[j].code(), 1.0});
    return WeightedGraph(2 * num_vars, merge_undirected(std::move(edges), false), false, literal_kinds(num_vars));
}

const std::vector<std::string_view>& graph_names() {
    static const std::vector<std::string_view> names = {"vcg",       "vg",      "vig",        "cvig", "cv_pos",
                                                        "cv_neg",    "variables", "clauses", "resolution", "big",
                                                        "and",       "band",    "exo"};
    return names;
}

WeightedGraph build_graph_by_name(const Cnf& cnf, std::string_view name) {
    if (name == "vcg") return build_vcg(cnf);
    if (name == "vg") return build_vg(cnf);
    if (name == "vig") return build_vig(cnf);
    if (name == "cvig") return build_cvig(cnf);
    if (name == "cv_pos") return build_cv_signed(cnf, true);
    if (name == "cv_neg") return build_cv_signed(cnf, false);
    if (name == "variables") return build_alf_variable_graph(cnf);
    if (name == "clauses") return build_clause_graph(cnf);
    if (name == "resolution") return build_resolution_graph(cnf);
    if (name == "big") return build_big(cnf);
    if (name == "and") return build_gate_graph(detect_and_gates(cnf), cnf.num_vars());
    if (name == "band") return build_gate_graph(detect_band_gates(cnf), cnf.num_vars());
    if (name == "exo") return build_exo_graph(detect_exo_gates(cnf), cnf.num_vars());
    throw std::invalid_argument("unknown graph '" + std::string(name) + "'");
}

}  // namespace satfeat
