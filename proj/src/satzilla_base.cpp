#include <cmath>

#include "satfeat/graph_builders.hpp"
#include "satfeat/satzilla.hpp"

namespace satfeat {

SizeFeatures size_features(const Cnf& cnf) {
    if (cnf.num_vars() == 0) throw ExtractionError("formula has no variables");
    SizeFeatures f;
    f.num_clauses = static_cast<double>(cnf.num_clauses());
    f.num_vars = cnf.num_vars();
    f.ratio = f.num_clauses / f.num_vars;
    return f;
}

namespace {

double bias(double pos, double neg) {
    const double total = pos + neg;
    return total > 0 ? 2.0 * std::abs(0.5 - pos / total) : 0.0;
}

void append(std::vector<double>& out, const StatSummary& s) {
    for (StatField f : kSatzillaSchedule) out.push_back(s.get(f));
}

}  // namespace

std::vector<double> clause_biases(const Cnf& cnf) {
    std::vector<double> out;
    out.reserve(cnf.num_clauses());
    for (const Clause& c : cnf.clauses()) {
        double pos = 0;
        for (Lit l : c) pos += l.negative() ? 0 : 1;
        out.push_back(bias(pos, static_cast<double>(c.size()) - pos));
    }
    return out;
}

std::vector<double> variable_biases(const Cnf& cnf) {
    std::vector<double> out(cnf.num_vars());
    for (uint32_t v = 0; v < cnf.num_vars(); ++v) {
        const auto occ = cnf.occurrence_count(v);
        out[v] = bias(occ.pos, occ.neg);
    }
    return out;
}

BalanceFeatures balance_features(const Cnf& cnf) {
    BalanceFeatures f;
    f.clause_bias = summarize(clause_biases(cnf), ValueKind::Continuous);
    f.variable_bias = summarize(variable_biases(cnf), ValueKind::Continuous);
    if (cnf.num_clauses() > 0) {
        double binary = 0, ternary = 0;
        for (const Clause& c : cnf.clauses()) {
            binary += c.size() == 2;
            ternary += c.size() == 3;
        }
        f.binary_fraction = binary / static_cast<double>(cnf.num_clauses());
        f.ternary_fraction = ternary / static_cast<double>(cnf.num_clauses());
    }
    return f;
}

bool is_horn(const Clause& c) {
    int positives = 0;
    for (Lit l : c) positives += !l.negative();
    return positives <= 1;
}

std::vector<double> horn_variable_counts(const Cnf& cnf) {
    std::vector<double> counts(cnf.num_vars(), 0.0);
    for (const Clause& c : cnf.clauses()) {
        if (!is_horn(c)) continue;
        for (Lit l : c) counts[l.var()] += 1;
    }
    return counts;
}

HornFeatures horn_features(const Cnf& cnf) {
    HornFeatures f;
    if (cnf.num_clauses() > 0) {
        double horn = 0;
        for (const Clause& c : cnf.clauses()) horn += is_horn(c);
        f.horn_fraction = horn / static_cast<double>(cnf.num_clauses());
    }
    f.variable_counts = summarize(horn_variable_counts(cnf));
    return f;
}

VcgFeatures vcg_features(const Cnf& cnf) {
    const WeightedGraph g = build_vcg(cnf);
    return {summarize(degree_sequence(g, VertexKind::Variable)), summarize(degree_sequence(g, VertexKind::Clause))};
}

StatSummary vg_features(const Cnf& cnf) { return summarize(degree_sequence(build_vg(cnf))); }

std::vector<double> satzilla_base_values(const Cnf& original, const Cnf& reduced) {
    std::vector<double> out;
    out.reserve(38);
    out.push_back(static_cast<double>(original.num_clauses()));
    out.push_back(original.num_vars());
    const SizeFeatures size = size_features(reduced);
    out.push_back(size.num_clauses);
    out.push_back(size.num_vars);
    out.push_back(size.ratio);

    const VcgFeatures vcg = vcg_features(reduced);
    append(out, vcg.variable_degrees);
    append(out, vcg.clause_degrees);
    append(out, vg_features(reduced));

    const BalanceFeatures balance = balance_features(reduced);
    append(out, balance.clause_bias);
    append(out, balance.variable_bias);
    out.push_back(balance.binary_fraction);
    out.push_back(balance.ternary_fraction);

    const HornFeatures horn = horn_features(reduced);
    out.push_back(horn.horn_fraction);
    append(out, horn.variable_counts);
    return out;
}

}  // namespace satfeat
