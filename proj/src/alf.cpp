#include "satfeat/alf.hpp"

#include <array>
#include <string_view>

#include "satfeat/graph_builders.hpp"
#include "satfeat/stats.hpp"

namespace satfeat {

LiteralWeights recursive_weights(const Cnf& cnf, int iterations) {
    const std::size_t lits = 2 * static_cast<std::size_t>(cnf.num_vars());
    LiteralWeights out;
    out.emplace_back(lits, 1.0);
    std::vector<double> prefix;
    for (int it = 0; it < iterations; ++it) {
        const std::vector<double>& w = out.back();
        std::vector<double> next(lits, 0.0);
        if (cnf.num_clauses() == 0) {
            out.emplace_back(lits, 1.0);
            continue;
        }
        for (const Clause& c : cnf.clauses()) {
            // product of w(~k) over the other literals, via prefix/suffix products
            prefix.assign(c.size() + 1, 1.0);
            for (std::size_t i = 0; i < c.size(); ++i) prefix[i + 1] = prefix[i] * w[(~c[i]).code()];
            double suffix = 1.0;
            for (std::size_t i = c.size(); i-- > 0;) {
                next[c[i].code()] += prefix[i] * suffix;
                suffix *= w[(~c[i]).code()];
            }
        }
        double sum = 0;
        for (double x : next) sum += x;
        if (sum > 0) {
            const double scale = static_cast<double>(lits) / sum;
            for (double& x : next) x *= scale;
        } else {
            next.assign(lits, 1.0);
        }
        out.push_back(std::move(next));
    }
    return out;
}

namespace {

constexpr std::array<std::string_view, 19> kSummaryBlocks = {
    "cvpos_vardeg", "cvpos_clsdeg", "cvneg_vardeg", "cvneg_clsdeg", "var_deg",  "var_weight", "cls_deg",
    "cls_weight",   "res_deg",      "res_weight",   "big_deg",      "and_deg",  "and_weight", "band_deg",
    "band_weight",  "exo_deg",      "rw1",          "rw2",          "rw3",
};

constexpr std::array<std::string_view, 7> kDensities = {"var", "cls", "res", "big", "and", "band", "exo"};

void append(std::vector<double>& out, const std::vector<double>& seq, ValueKind kind) {
    const StatSummary s = summarize(seq, kind);
    for (StatField f : kAllStats) out.push_back(s.get(f));
}

void append_degrees(std::vector<double>& out, const WeightedGraph& g) {
    append(out, degree_sequence(g), ValueKind::Discrete);
}

void append_weighted(std::vector<double>& out, const WeightedGraph& g) {
    append(out, degree_sequence(g), ValueKind::Discrete);
    append(out, weight_sequence(g), ValueKind::Continuous);
}

}  // namespace

const std::vector<AlfSlot>& alf_layout() {
    static const std::vector<AlfSlot> slots = [] {
        std::vector<AlfSlot> v;
        for (std::string_view block : kSummaryBlocks)
            for (StatField f : kAllStats) {
                const std::string stat(stat_name(f));
                v.push_back({"alf_" + std::string(block) + "_" + stat, std::string(block), stat});
            }
        for (std::string_view d : kDensities) {
            const std::string src = std::string(d) + "_density";
            v.push_back({"alf_" + src, src, "value"});
        }
        return v;
    }();
    return slots;
}

std::vector<double> alf_feature_vector(const Cnf& cnf) {
    std::vector<double> out;
    out.reserve(alf_layout().size());
    for (bool positive : {true, false}) {
        const WeightedGraph g = build_cv_signed(cnf, positive);
        append(out, degree_sequence(g, VertexKind::Variable), ValueKind::Discrete);
        append(out, degree_sequence(g, VertexKind::Clause), ValueKind::Discrete);
    }
    const WeightedGraph vars = build_alf_variable_graph(cnf);
    const WeightedGraph clauses = build_clause_graph(cnf);
    const WeightedGraph resolution = build_resolution_graph(cnf);
    const WeightedGraph big = build_big(cnf);
    const WeightedGraph and_graph = build_gate_graph(detect_and_gates(cnf), cnf.num_vars());
    const WeightedGraph band_graph = build_gate_graph(detect_band_gates(cnf), cnf.num_vars());
    const WeightedGraph exo_graph = build_exo_graph(detect_exo_gates(cnf), cnf.num_vars());

    append_weighted(out, vars);
    append_weighted(out, clauses);
    append_weighted(out, resolution);
    append_degrees(out, big);
    append_weighted(out, and_graph);
    append_weighted(out, band_graph);
    append_degrees(out, exo_graph);

    const LiteralWeights rw = recursive_weights(cnf);
    for (std::size_t it = 1; it < rw.size(); ++it) append(out, rw[it], ValueKind::Continuous);

    for (const WeightedGraph* g : {&vars, &clauses, &resolution, &big, &and_graph, &band_graph, &exo_graph})
        out.push_back(edge_density(*g));
    return out;
}

}  // namespace satfeat
