#include "satfeat/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "satfeat/rng.hpp"

namespace satfeat {

Cnf random_ksat(uint32_t n, double ratio, uint32_t k, uint64_t seed) {
    if (k == 0 || k > n) throw std::invalid_argument("random-ksat needs 1 <= k <= n");
    if (!(ratio >= 0) || !std::isfinite(ratio)) throw std::invalid_argument("random-ksat ratio must be >= 0");
    const auto m = static_cast<std::size_t>(std::floor(ratio * n + 1e-9));
    Rng rng(seed);
    std::vector<Clause> clauses;
    clauses.reserve(m);
    std::vector<uint32_t> vars;
    for (std::size_t i = 0; i < m; ++i) {
        vars.clear();
        while (vars.size() < k) {
            const auto v = static_cast<uint32_t>(rng.below(n));
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        Clause c;
        for (uint32_t v : vars) c.emplace_back(v, rng.chance(0.5));
        clauses.push_back(std::move(c));
    }
    return Cnf(n, std::move(clauses));
}

Cnf pigeonhole(uint32_t p) {
    if (p == 0) throw std::invalid_argument("pigeonhole needs at least one hole");
    const uint32_t pigeons = p + 1;
    auto x = [p](uint32_t i, uint32_t j) { return i * p + j; };
    std::vector<Clause> clauses;
    for (uint32_t i = 0; i < pigeons; ++i) {
        Clause c;
        for (uint32_t j = 0; j < p; ++j) c.emplace_back(x(i, j), false);
        clauses.push_back(std::move(c));
    }
    for (uint32_t j = 0; j < p; ++j)
        for (uint32_t a = 0; a < pigeons; ++a)
            for (uint32_t b = a + 1; b < pigeons; ++b) clauses.push_back({Lit(x(a, j), true), Lit(x(b, j), true)});
    return Cnf(pigeons * p, std::move(clauses));
}

Cnf graph_coloring(uint32_t n, double p_edge, uint32_t k, uint64_t seed) {
    if (n == 0 || k == 0) throw std::invalid_argument("graph-coloring needs n >= 1 and k >= 1");
    if (!(p_edge >= 0 && p_edge <= 1)) throw std::invalid_argument("graph-coloring edge probability must be in [0, 1]");
    auto x = [k](uint32_t v, uint32_t c) { return v * k + c; };
    Rng rng(seed);
    std::vector<Clause> clauses;
    for (uint32_t v = 0; v < n; ++v) {
        Clause c;
        for (uint32_t col = 0; col < k; ++col) c.emplace_back(x(v, col), false);
        clauses.push_back(std::move(c));
        for (uint32_t a = 0; a < k; ++a)
            for (uint32_t b = a + 1; b < k; ++b) clauses.push_back({Lit(x(v, a), true), Lit(x(v, b), true)});
    }
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) {
            if (!rng.chance(p_edge)) continue;
            for (uint32_t col = 0; col < k; ++col) clauses.push_back({Lit(x(u, col), true), Lit(x(v, col), true)});
        }
    return Cnf(n * k, std::move(clauses));
}

const std::vector<std::string_view>& generator_families() {
    static const std::vector<std::string_view> f = {"random-ksat", "pigeonhole", "graph-coloring"};
    return f;
}

Cnf generate(const GeneratorParams& p) {
    if (p.family == "random-ksat") return random_ksat(p.n, p.ratio, p.k, p.seed);
    if (p.family == "pigeonhole") return pigeonhole(p.holes);
    if (p.family == "graph-coloring") return graph_coloring(p.n, p.p_edge, p.colors, p.seed);
    throw std::invalid_argument("unknown generator family '" + p.family + "'");
}

std::string labelled_dimacs(const Cnf& cnf, std::string_view family) {
    return "c satfeat family=" + std::string(family) + "\n" + write_dimacs(cnf);
}

std::string dimacs_family_label(std::string_view text) {
    constexpr std::string_view tag = "c satfeat family=";
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        if (line.starts_with(tag)) {
            std::string_view v = line.substr(tag.size());
            while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) v.remove_suffix(1);
            return std::string(v);
        }
        if (!line.empty() && line[0] != 'c') break;
        pos = end + 1;
    }
    return {};
}

}  // namespace satfeat
