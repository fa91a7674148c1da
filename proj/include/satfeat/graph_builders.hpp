#pragma once

#include <string_view>
#include <vector>

#include "satfeat/cnf.hpp"
#include "satfeat/graph.hpp"

namespace satfeat {

// Vertex layout conventions:
//   variable graphs     vertex v = variable index
//   bipartite graphs    [0, num_vars) variables, then num_vars + clause index
//   literal graphs      vertex = Lit::code() (2 * num_vars vertices)
//
// Clause-level graphs over variables (VCG, VG, VIG, CVIG, ALF variable graph)
// use a clause's set of distinct variables, so a tautological clause (x, -x, y)
// counts as the variable set {x, y}.

WeightedGraph build_vcg(const Cnf& cnf);
WeightedGraph build_vg(const Cnf& cnf);
/// w(x, y) = sum over clauses containing both of 1 / C(k, 2), k = variables in the clause.
WeightedGraph build_vig(const Cnf& cnf);
/// w(x, c) = 1 / k for every variable x of clause c.
WeightedGraph build_cvig(const Cnf& cnf);
/// Clause c -- variable v iff the literal of v with the given polarity is in c.
WeightedGraph build_cv_signed(const Cnf& cnf, bool positive);
/// ALF variable graph: w(x, y) = sum over clauses containing both of 2^-k.
WeightedGraph build_alf_variable_graph(const Cnf& cnf);
/// Clauses sharing literals; weight = number of shared literals.
WeightedGraph build_clause_graph(const Cnf& cnf);
/// Clauses with exactly one complementary pair; weight = 2^-(|Ci| + |Cj| - 2).
WeightedGraph build_resolution_graph(const Cnf& cnf);
/// Directed: each non-tautological binary clause (a, b) adds -a -> b and -b -> a.
WeightedGraph build_big(const Cnf& cnf);

enum class GateKind { And, BlockedAnd, ExactlyOne };

struct Gate {
    GateKind kind = GateKind::And;
    Lit head;               // unused for ExactlyOne
    std::vector<Lit> body;  // ascending
    friend bool operator==(const Gate&, const Gate&) = default;
};

using GateSet = std::vector<Gate>;

/// head <-> AND(body): binaries (-head, b) for every b and the clause (head, -b1, ..., -bk), k >= 2.
GateSet detect_and_gates(const Cnf& cnf);
/// head -> AND(body): binaries present, the long clause absent but blocked on head.
GateSet detect_band_gates(const Cnf& cnf);
/// EXO(l1..lk): the clause (l1..lk) plus every (-li, -lj).
GateSet detect_exo_gates(const Cnf& cnf);

/// Edges (head, b) of weight 2^-k; repeated edges accumulate their weights.
WeightedGraph build_gate_graph(const GateSet& gates, uint32_t num_vars);
/// Clique over each gate's literals, unit weights.
WeightedGraph build_exo_graph(const GateSet& gates, uint32_t num_vars);

/// Graph by name for debugging dumps: vcg, vg, vig, cvig, cv_pos, cv_neg,
/// variables, clauses, resolution, big, and, band, exo.
WeightedGraph build_graph_by_name(const Cnf& cnf, std::string_view name);
const std::vector<std::string_view>& graph_names();

}  // namespace satfeat
