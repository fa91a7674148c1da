#include "satfeat/graph.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace satfeat {

WeightedGraph::WeightedGraph(uint32_t num_vertices, std::span<const Edge> edges, bool directed,
                             std::vector<VertexKind> kinds)
    : n_(num_vertices), directed_(directed), kinds_(std::move(kinds)) {
    if (!kinds_.empty() && kinds_.size() != n_) throw std::invalid_argument("vertex kind count mismatch");
    std::vector<uint32_t> counts(static_cast<std::size_t>(n_) + 1, 0);
    edges_.reserve(edges.size());
    if (directed_) in_degree_.assign(n_, 0);
    for (Edge e : edges) {
        if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        if (!std::isfinite(e.w) || e.w < 0) throw std::invalid_argument("edge weight must be finite and >= 0");
        if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
        edges_.push_back(e);
        ++counts[e.u + 1];
        if (directed_)
            ++in_degree_[e.v];
        else
            ++counts[e.v + 1];
    }
    begin_.assign(counts.size(), 0);
    for (std::size_t i = 1; i < counts.size(); ++i) begin_[i] = begin_[i - 1] + counts[i];
    adj_.resize(begin_.back());
    std::vector<uint32_t> fill(begin_.begin(), begin_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[fill[e.u]++] = {e.v, e.w};
        if (!directed_) adj_[fill[e.v]++] = {e.u, e.w};
    }
}

uint32_t WeightedGraph::degree(uint32_t v) const {
    const uint32_t out = begin_[v + 1] - begin_[v];
    return directed_ ? out + in_degree_[v] : out;
}

double WeightedGraph::weighted_degree(uint32_t v) const {
    double s = 0;
    for (const Neighbor& nb : neighbors(v)) s += nb.weight;
    return s;
}

std::vector<Edge> WeightedGraph::sorted_edges() const {
    std::vector<Edge> out = edges_;
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    });
    return out;
}

std::vector<double> degree_sequence(const WeightedGraph& g) {
    std::vector<double> out(g.num_vertices());
    for (uint32_t v = 0; v < g.num_vertices(); ++v) out[v] = g.degree(v);
    return out;
}

std::vector<double> degree_sequence(const WeightedGraph& g, VertexKind kind) {
    std::vector<double> out;
    for (uint32_t v = 0; v < g.num_vertices(); ++v)
        if (g.kind(v) == kind) out.push_back(g.degree(v));
    return out;
}

std::vector<double> weight_sequence(const WeightedGraph& g) {
    std::vector<double> out;
    out.reserve(g.num_edges());
    for (const Edge& e : g.edges()) out.push_back(e.w);
    return out;
}

double edge_density(const WeightedGraph& g) {
    const double n = g.num_vertices();
    if (n < 2) return 0;
    const double pairs = g.directed() ? n * (n - 1) : n * (n - 1) / 2;
    return static_cast<double>(g.num_edges()) / pairs;
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    const auto old_precision = out.precision(17);
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    out.precision(old_precision);
}

}  // namespace satfeat
