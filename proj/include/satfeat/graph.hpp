#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace satfeat {

enum class VertexKind : uint8_t { Variable, Clause, Literal };

struct Edge {
    uint32_t u = 0;
    uint32_t v = 0;
    double w = 1.0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    uint32_t vertex;
    double weight;
};

/// Compressed adjacency container shared by every formula graph.
///
/// Undirected graphs list each edge under both endpoints with the same weight;
/// directed graphs list out-edges only and keep in-degrees separately. Self
/// loops are rejected. Parallel edges are kept as given (only the BIG has them).
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(uint32_t num_vertices, std::span<const Edge> edges, bool directed,
                  std::vector<VertexKind> kinds = {});

    uint32_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    bool directed() const { return directed_; }

    std::span<const Neighbor> neighbors(uint32_t v) const {
        return {adj_.data() + begin_[v], adj_.data() + begin_[v + 1]};
    }
    /// Unweighted degree; out + in for directed graphs.
    uint32_t degree(uint32_t v) const;
    double weighted_degree(uint32_t v) const;
    VertexKind kind(uint32_t v) const { return kinds_.empty() ? VertexKind::Variable : kinds_[v]; }

    /// Edges in insertion order; undirected edges are normalized to u < v.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Edges sorted by (u, v, w).
    std::vector<Edge> sorted_edges() const;

private:
    uint32_t n_ = 0;
    bool directed_ = false;
    std::vector<uint32_t> begin_ = {0};
    std::vector<Neighbor> adj_;
    std::vector<uint32_t> in_degree_;
    std::vector<VertexKind> kinds_;
    std::vector<Edge> edges_;
};

std::vector<double> degree_sequence(const WeightedGraph& g);
/// Degrees of the vertices tagged `kind` only, in vertex order.
std::vector<double> degree_sequence(const WeightedGraph& g, VertexKind kind);
std::vector<double> weight_sequence(const WeightedGraph& g);

/// Edge density: E / C(n,2) undirected, E / (n(n-1)) directed, 0 when n < 2.
double edge_density(const WeightedGraph& g);

/// Writes `<u> <v> <w>` per edge.
void write_edge_list(std::ostream& out, const WeightedGraph& g);

}  // namespace satfeat
