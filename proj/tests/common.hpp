#pragma once

#include <string_view>

#include "satfeat/cnf.hpp"

namespace fixture {

inline constexpr std::string_view kE1Text = "p cnf 3 4\n1 2 0\n-1 3 0\n-2 -3 0\n1 2 3 0\n";

inline satfeat::Cnf e1() { return satfeat::parse_dimacs(kE1Text); }

inline satfeat::Cnf from_dimacs(std::string_view text) { return satfeat::parse_dimacs(text); }

}  // namespace fixture

#include <map>
#include <set>
#include <utility>

#include "satfeat/graph.hpp"

namespace fixture {

using EdgeMap = std::map<std::pair<uint32_t, uint32_t>, double>;

// Undirected edges keyed (min, max); a repeated edge would show up as a size mismatch.
inline EdgeMap edge_map(const satfeat::WeightedGraph& g) {
    EdgeMap e;
    for (const auto& x : g.edges()) e[{std::min(x.u, x.v), std::max(x.u, x.v)}] += x.w;
    return e;
}

inline std::multiset<std::pair<uint32_t, uint32_t>> arc_set(const satfeat::WeightedGraph& g) {
    std::multiset<std::pair<uint32_t, uint32_t>> e;
    for (const auto& x : g.edges()) e.insert({x.u, x.v});
    return e;
}

inline uint32_t clause_vertex(const satfeat::Cnf& f, uint32_t i) { return f.num_vars() + i; }

}  // namespace fixture
