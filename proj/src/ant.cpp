#include "satfeat/ant.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "satfeat/graph_builders.hpp"
#include "satfeat/rng.hpp"

namespace satfeat {

// ---- power law -----------------------------------------------------------

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0) || !(q > 0.0)) throw std::domain_error("hurwitz_zeta needs s > 1, q > 0");
    // Euler-Maclaurin with N direct terms and 6 Bernoulli corrections.
    constexpr int N = 12;
    static constexpr double kB2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
    double sum = 0;
    for (int k = 0; k < N; ++k) sum += std::pow(q + k, -s);
    const double a = q + N;
    sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
    double rising = s;      // s (s+1) ... (s+2j-2)
    double fact = 2.0;      // (2j)!
    double apow = std::pow(a, -s - 1.0);
    for (int j = 1; j <= 6; ++j) {
        sum += kB2k[j - 1] / fact * rising * apow;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2.0 * j + 1) * (2.0 * j + 2);
        apow /= a * a;
    }
    return sum;
}

namespace {

double mle_alpha(std::span<const double> tail, double xmin) {
    double s = 0;
    for (double x : tail) s += std::log(x / (xmin - 0.5));
    return 1.0 + static_cast<double>(tail.size()) / s;
}

// Largest gap between the tail's empirical CDF and the fitted discrete model,
// evaluated at every distinct value.
double ks_distance(std::span<const double> tail, double xmin, double alpha) {
    const double z = hurwitz_zeta(alpha, xmin);
    const double n = static_cast<double>(tail.size());
    double worst = 0;
    for (std::size_t i = 0; i < tail.size();) {
        std::size_t j = i;
        while (j < tail.size() && tail[j] == tail[i]) ++j;
        const double model = 1.0 - hurwitz_zeta(alpha, tail[i] + 1.0) / z;
        worst = std::max(worst, std::abs(static_cast<double>(j) / n - model));
        i = j;
    }
    return worst;
}

}  // namespace

PowerlawFit powerlaw_alpha(std::span<const double> counts) {
    std::vector<double> xs(counts.begin(), counts.end());
    for (double x : xs)
        if (!(x >= 1.0)) throw std::invalid_argument("power-law counts must be >= 1");
    std::sort(xs.begin(), xs.end());

    PowerlawFit best;
    int candidates = 0;
    for (std::size_t i = 0; i < xs.size() && candidates < kMaxXminCandidates;) {
        if (i > 0 && xs[i] == xs[i - 1]) {
            ++i;
            continue;
        }
        ++candidates;
        const std::span<const double> tail(xs.data() + i, xs.size() - i);
        if (tail.front() == tail.back()) break;  // one distinct value left
        const double alpha = mle_alpha(tail, xs[i]);
        const double ks = ks_distance(tail, xs[i], alpha);
        if (best.degenerate || ks < best.ks) {
            best = {alpha, xs[i], tail.size(), ks, false};
        }
        ++i;
    }
    if (best.degenerate) {
        best.xmin = xs.empty() ? 0 : xs.front();
        best.n_tail = xs.size();
    }
    return best;
}

// ---- modularity / Louvain ------------------------------------------------

double modularity(const WeightedGraph& g, std::span<const uint32_t> community) {
    if (community.size() != g.num_vertices()) throw std::invalid_argument("partition size mismatch");
    double m2 = 0;
    for (const Edge& e : g.edges()) m2 += 2 * e.w;
    if (m2 <= 0) return 0;
    uint32_t k = 0;
    for (uint32_t c : community) k = std::max(k, c + 1);
    std::vector<double> in(k, 0), tot(k, 0);
    for (const Edge& e : g.edges()) {
        tot[community[e.u]] += e.w;
        tot[community[e.v]] += e.w;
        if (community[e.u] == community[e.v]) in[community[e.u]] += 2 * e.w;
    }
    double q = 0;
    for (uint32_t c = 0; c < k; ++c) q += in[c] / m2 - (tot[c] / m2) * (tot[c] / m2);
    return q;
}

namespace {

struct Level {
    std::vector<std::vector<Neighbor>> adj;  // no self entries
    std::vector<double> self;                // A_ii
    std::size_t size() const { return adj.size(); }
};

// One round of local moves; returns community per node and whether anything moved.
bool local_moves(const Level& lv, double m2, uint64_t seed, std::vector<uint32_t>& comm) {
    const std::size_t n = lv.size();
    std::vector<double> k(n), tot(n);
    comm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        comm[i] = static_cast<uint32_t>(i);
        double s = lv.self[i];
        for (const Neighbor& nb : lv.adj[i]) s += nb.weight;
        k[i] = tot[i] = s;
    }
    std::vector<uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<uint32_t>(i);
    if (seed != 0) {
        Rng rng(seed);
        rng.shuffle(order);
    }

    std::vector<double> link(n, 0);
    std::vector<uint32_t> seen;
    bool any = false;
    for (bool moved = true; moved;) {
        moved = false;
        for (uint32_t i : order) {
            const uint32_t own = comm[i];
            seen.clear();
            seen.push_back(own);
            link[own] = 0;
            for (const Neighbor& nb : lv.adj[i]) {
                const uint32_t c = comm[nb.vertex];
                if (c != own && link[c] == 0 && std::find(seen.begin(), seen.end(), c) == seen.end())
                    seen.push_back(c);
                link[c] += nb.weight;
            }
            tot[own] -= k[i];
            const double ratio = k[i] / m2;
            uint32_t best = own;
            double best_gain = link[own] - tot[own] * ratio;
            for (uint32_t c : seen) {
                const double gain = link[c] - tot[c] * ratio;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot[best] += k[i];
            if (best != own) {
                comm[i] = best;
                moved = any = true;
            }
            for (uint32_t c : seen) link[c] = 0;
        }
    }
    return any;
}

std::vector<uint32_t> densify(std::vector<uint32_t>& comm) {
    std::vector<uint32_t> id(comm.size(), UINT32_MAX);
    uint32_t next = 0;
    for (uint32_t& c : comm) {
        if (id[c] == UINT32_MAX) id[c] = next++;
        c = id[c];
    }
    return id;
}

Level aggregate(const Level& lv, const std::vector<uint32_t>& comm, uint32_t k) {
    Level out;
    out.adj.assign(k, {});
    out.self.assign(k, 0);
    std::vector<double> acc(k, 0);
    std::vector<uint32_t> touched;
    std::vector<std::vector<uint32_t>> members(k);
    for (uint32_t i = 0; i < comm.size(); ++i) members[comm[i]].push_back(i);
    for (uint32_t c = 0; c < k; ++c) {
        touched.clear();
        for (uint32_t i : members[c]) {
            out.self[c] += lv.self[i];
            for (const Neighbor& nb : lv.adj[i]) {
                const uint32_t d = comm[nb.vertex];
                if (d == c) {
                    out.self[c] += nb.weight;
                    continue;
                }
                if (acc[d] == 0) touched.push_back(d);
                acc[d] += nb.weight;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (uint32_t d : touched) {
            out.adj[c].push_back({d, acc[d]});
            acc[d] = 0;
        }
    }
    return out;
}

}  // namespace

Partition louvain_modularity(const WeightedGraph& g, uint64_t seed) {
    if (g.directed()) throw std::invalid_argument("louvain needs an undirected graph");
    Partition p;
    const uint32_t n = g.num_vertices();
    p.community.resize(n);
    for (uint32_t i = 0; i < n; ++i) p.community[i] = i;

    double m2 = 0;
    for (const Edge& e : g.edges()) m2 += 2 * e.w;
    if (g.num_edges() == 0 || m2 <= 0) {
        p.degenerate = true;
        return p;
    }

    Level lv;
    lv.adj.resize(n);
    lv.self.assign(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        // merge parallel edges so each neighbor appears once
        auto nbs = g.neighbors(i);
        std::vector<Neighbor> row(nbs.begin(), nbs.end());
        std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
        for (const Neighbor& nb : row) {
            if (!lv.adj[i].empty() && lv.adj[i].back().vertex == nb.vertex)
                lv.adj[i].back().weight += nb.weight;
            else
                lv.adj[i].push_back(nb);
        }
    }

    for (uint64_t round = 0;; ++round) {
        std::vector<uint32_t> comm;
        const uint64_t level_seed = seed == 0 ? 0 : derive_seed(seed, round);
        if (!local_moves(lv, m2, level_seed, comm)) break;
        densify(comm);
        uint32_t k = 0;
        for (uint32_t c : comm) k = std::max(k, c + 1);
        for (uint32_t& c : p.community) c = comm[c];
        if (k == lv.size()) break;
        lv = aggregate(lv, comm, k);
    }
    densify(p.community);
    p.modularity = modularity(g, p.community);
    return p;
}

// ---- fractal dimension ---------------------------------------------------

std::size_t connected_components(const WeightedGraph& g) {
    const uint32_t n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<uint32_t> stack;
    std::size_t count = 0;
    for (uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const uint32_t u = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : g.neighbors(u))
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = 1;
                    stack.push_back(nb.vertex);
                }
        }
    }
    return count;
}

namespace {

uint32_t greedy_boxes(const WeightedGraph& g, uint32_t r) {
    const uint32_t n = g.num_vertices();
    std::vector<char> covered(n, 0);
    // hop distance beyond covered ground, capped at r + 1
    std::vector<uint32_t> gap(n, r + 1);
    std::vector<uint32_t> dist(n, UINT32_MAX);
    std::vector<uint32_t> visited;
    using Entry = std::tuple<uint32_t, uint32_t, int64_t>;  // degree, gap, -index
    std::priority_queue<Entry> heap;
    for (uint32_t v = 0; v < n; ++v) heap.emplace(g.degree(v), gap[v], -static_cast<int64_t>(v));

    uint32_t boxes = 0;
    std::vector<uint32_t> frontier, next;
    while (!heap.empty()) {
        const auto [deg, gp, neg] = heap.top();
        heap.pop();
        const auto center = static_cast<uint32_t>(-neg);
        if (covered[center]) continue;
        if (gp != gap[center]) {
            heap.emplace(deg, gap[center], neg);
            continue;
        }
        ++boxes;
        const uint32_t reach = 2 * r + 1;
        frontier.assign(1, center);
        dist[center] = 0;
        visited.assign(1, center);
        for (uint32_t d = 0; d < reach && !frontier.empty(); ++d) {
            next.clear();
            for (uint32_t u : frontier)
                for (const Neighbor& nb : g.neighbors(u))
                    if (dist[nb.vertex] == UINT32_MAX) {
                        dist[nb.vertex] = d + 1;
                        visited.push_back(nb.vertex);
                        next.push_back(nb.vertex);
                    }
            frontier.swap(next);
        }
        for (uint32_t u : visited) {
            if (dist[u] <= r)
                covered[u] = 1;
            else
                gap[u] = std::min(gap[u], dist[u] - r);
            dist[u] = UINT32_MAX;
        }
    }
    return boxes;
}

}  // namespace

FractalResult fractal_dimension(const WeightedGraph& g, int r_max) {
    if (g.directed()) throw std::invalid_argument("fractal dimension needs an undirected graph");
    FractalResult res;
    if (g.num_vertices() == 0) return res;
    const std::size_t floor = connected_components(g);
    for (int r = 1; r <= r_max; ++r) {
        uint32_t boxes = greedy_boxes(g, static_cast<uint32_t>(r));
        if (!res.box_counts.empty()) boxes = std::min(boxes, res.box_counts.back());
        res.box_counts.push_back(boxes);
        if (boxes <= floor) break;
    }
    const std::size_t pts = res.box_counts.size();
    if (pts < 2) return res;

    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < pts; ++i) {
        sx += std::log(static_cast<double>(i + 1));
        sy += std::log(static_cast<double>(res.box_counts[i]));
    }
    const double mx = sx / static_cast<double>(pts), my = sy / static_cast<double>(pts);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < pts; ++i) {
        const double dx = std::log(static_cast<double>(i + 1)) - mx;
        sxy += dx * (std::log(static_cast<double>(res.box_counts[i])) - my);
        sxx += dx * dx;
    }
    res.dimension = -sxy / sxx;
    res.degenerate = false;
    return res;
}

// ---- bundle --------------------------------------------------------------

std::vector<double> occurring_variable_counts(const Cnf& cnf) {
    std::vector<double> out;
    out.reserve(cnf.num_vars());
    for (uint32_t v = 0; v < cnf.num_vars(); ++v) {
        const auto occ = cnf.occurrence_count(v);
        if (occ.pos + occ.neg > 0) out.push_back(static_cast<double>(occ.pos + occ.neg));
    }
    return out;
}

AntFeatures ant_features(const Cnf& cnf, uint64_t louvain_seed) {
    AntFeatures f;
    const std::vector<double> counts = occurring_variable_counts(cnf);
    f.powerlaw = powerlaw_alpha(counts);
    const WeightedGraph vig = build_vig(cnf);
    f.vig_partition = louvain_modularity(vig, louvain_seed);
    f.vig_fractal = fractal_dimension(vig);
    f.cvig_fractal = fractal_dimension(build_cvig(cnf));
    return f;
}

}  // namespace satfeat
