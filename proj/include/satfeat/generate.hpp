#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "satfeat/cnf.hpp"

namespace satfeat {

/// floor(ratio * n) clauses, each over k distinct variables with random signs.
Cnf random_ksat(uint32_t n, double ratio, uint32_t k, uint64_t seed);

/// PHP(p+1, p): pigeon i in hole j is variable i * p + j. Unsatisfiable.
Cnf pigeonhole(uint32_t p);

/// k-coloring of a G(n, p_edge) random graph: vertex v has color c as
/// variable v * k + c; at-least-one, at-most-one and edge-conflict clauses.
Cnf graph_coloring(uint32_t n, double p_edge, uint32_t k, uint64_t seed);

struct GeneratorParams {
    std::string family;  // random-ksat | pigeonhole | graph-coloring
    uint32_t n = 100;
    double ratio = 4.2;
    uint32_t k = 3;
    uint32_t holes = 5;
    double p_edge = 0.1;
    uint32_t colors = 3;
    uint64_t seed = 0;
};

const std::vector<std::string_view>& generator_families();

/// Throws std::invalid_argument on an unknown family or bad parameters.
Cnf generate(const GeneratorParams& params);

/// DIMACS text with a `c satfeat family=<family>` line first.
std::string labelled_dimacs(const Cnf& cnf, std::string_view family);

/// The family recorded by labelled_dimacs, or empty.
std::string dimacs_family_label(std::string_view text);

}  // namespace satfeat
