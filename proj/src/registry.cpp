#include "satfeat/registry.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include <json.hpp>

#include "satfeat/alf.hpp"
#include "satfeat/ant.hpp"
#include "satfeat/preprocess.hpp"

namespace satfeat {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::SatzillaBase: return "satzilla_base";
        case Family::SatzillaProbing: return "satzilla_probing";
        case Family::Ant: return "ant";
        case Family::Alf: return "alf";
    }
    return "?";
}

std::string_view to_string(FeatureStatus s) {
    switch (s) {
        case FeatureStatus::Ok: return "OK";
        case FeatureStatus::SolvedByPreprocessing: return "SOLVED_BY_PREPROCESSING";
        case FeatureStatus::Timeout: return "TIMEOUT";
        case FeatureStatus::Error: return "ERROR";
    }
    return "?";
}

namespace {

std::vector<FeatureDescriptor> build_manifest() {
    std::vector<FeatureDescriptor> m;
    auto add = [&](std::string name, Family fam, std::string source, std::string stat) {
        m.push_back({std::move(name), fam, std::move(source), std::move(stat)});
    };
    auto add_summary = [&](const std::string& prefix, Family fam, const std::string& source, auto schedule) {
        for (StatField f : schedule) add(prefix + "_" + std::string(stat_name(f)), fam, source, std::string(stat_name(f)));
    };

    const Family b = Family::SatzillaBase;
    add("sz_orig_clauses", b, "original", "value");
    add("sz_orig_vars", b, "original", "value");
    add("sz_clauses", b, "reduced", "value");
    add("sz_vars", b, "reduced", "value");
    add("sz_ratio", b, "reduced", "value");
    add_summary("sz_vcg_var", b, "vcg_variable_degree", kSatzillaSchedule);
    add_summary("sz_vcg_cls", b, "vcg_clause_degree", kSatzillaSchedule);
    add_summary("sz_vg", b, "vg_degree", kSatzillaSchedule);
    add_summary("sz_clause_bias", b, "clause_bias", kSatzillaSchedule);
    add_summary("sz_var_bias", b, "variable_bias", kSatzillaSchedule);
    add("sz_binary_frac", b, "clause_sizes", "value");
    add("sz_ternary_frac", b, "clause_sizes", "value");
    add("sz_horn_frac", b, "horn_clauses", "value");
    add_summary("sz_horn_var", b, "horn_variable_count", kSatzillaSchedule);

    const Family p = Family::SatzillaProbing;
    for (int d : kProbeDepths) add("dpll_props_" + std::to_string(d), p, "dpll", "value");
    add("dpll_mean_depth", p, "dpll_random_probes", "mean");
    add("dpll_est_log_nodes", p, "dpll_random_probes", "value");
    add("ls_best_unsat_mean", p, "local_search", "mean");
    add("ls_best_unsat_cv", p, "local_search", "cv");
    add_summary("ls_steps_to_best", p, "local_search", kLocalSearchSchedule);
    add_summary("ls_improvement", p, "local_search", kLocalSearchSchedule);
    add_summary("ls_first_min_frac", p, "local_search", kLocalSearchSchedule);
    add("ls_unsat_at_minima_mean", p, "local_search", "mean");

    const Family a = Family::Ant;
    add("ant_powerlaw_alpha", a, "variable_occurrences", "value");
    add("ant_vig_modularity", a, "vig", "value");
    add("ant_vig_fractal_dim", a, "vig", "value");
    add("ant_cvig_fractal_dim", a, "cvig", "value");

    for (const AlfSlot& slot : alf_layout()) add(slot.name, Family::Alf, slot.source, slot.statistic);
    return m;
}

struct SetTable {
    std::vector<std::string> names;
    std::map<std::string, std::vector<std::size_t>, std::less<>> features;
    std::map<std::string, std::vector<Family>, std::less<>> families;
};

const SetTable& sets() {
    static const SetTable t = [] {
        SetTable s;
        const auto& m = manifest();
        auto pick = [&](std::initializer_list<Family> fams) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (std::find(fams.begin(), fams.end(), m[i].family) != fams.end()) idx.push_back(i);
            return idx;
        };
        auto def = [&](const std::string& name, std::initializer_list<Family> fams) {
            s.names.push_back(name);
            s.features[name] = pick(fams);
            s.families[name] = std::vector<Family>(fams);
        };
        def("satzilla_base", {Family::SatzillaBase});
        def("satzilla_full", {Family::SatzillaBase, Family::SatzillaProbing});
        def("ant", {Family::Ant});
        def("alf", {Family::Alf});
        def("all", {Family::SatzillaBase, Family::SatzillaProbing, Family::Ant, Family::Alf});
        return s;
    }();
    return t;
}

std::string require_set(std::string_view name) {
    auto canon = canonical_set_name(name);
    if (!canon) throw UnknownSetError("unknown feature set '" + std::string(name) + "'");
    return *canon;
}

}  // namespace

const std::vector<FeatureDescriptor>& manifest() {
    static const std::vector<FeatureDescriptor> m = build_manifest();
    return m;
}

const std::vector<std::string>& set_names() { return sets().names; }

std::optional<std::string> canonical_set_name(std::string_view name) {
    if (name == "base") return "satzilla_base";
    if (name == "full") return "satzilla_full";
    for (const std::string& s : set_names())
        if (s == name) return s;
    return std::nullopt;
}

const std::vector<std::size_t>& set_features(std::string_view name) {
    return sets().features.find(require_set(name))->second;
}

std::vector<Family> set_families(std::string_view name) { return sets().families.find(require_set(name))->second; }

std::vector<std::string> validate_manifest() {
    std::vector<std::string> diag;
    const auto& m = manifest();
    std::set<std::string> seen;
    for (const auto& d : m) {
        if (!seen.insert(d.name).second) diag.push_back("duplicate feature name " + d.name);
        const bool ok = !d.name.empty() && std::all_of(d.name.begin(), d.name.end(), [](char c) {
            return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
        });
        if (!ok) diag.push_back("feature name not identifier-safe: " + d.name);
    }
    auto arity = [&](std::string_view s) { return set_features(s).size(); };
    auto expect = [&](std::string_view s, std::size_t want) {
        if (arity(s) != want)
            diag.push_back(std::string(s) + " has " + std::to_string(arity(s)) + " features, expected " +
                           std::to_string(want));
    };
    expect("satzilla_base", kBaseArity);
    expect("satzilla_full", kBaseArity + kProbingArity);
    expect("ant", kAntArity);
    expect("alf", kAlfTargetArity);
    expect("all", arity("satzilla_full") + arity("ant") + arity("alf"));
    const auto& base = set_features("satzilla_base");
    const auto& full = set_features("satzilla_full");
    if (!std::includes(full.begin(), full.end(), base.begin(), base.end()))
        diag.push_back("satzilla_base is not contained in satzilla_full");
    if (alf_layout().size() != arity("alf")) diag.push_back("alf name table out of sync with manifest");
    return diag;
}

std::string manifest_json() {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json features = nlohmann::ordered_json::array();
    const auto& m = manifest();
    for (std::size_t i = 0; i < m.size(); ++i)
        features.push_back({{"name", m[i].name},
                            {"family", to_string(m[i].family)},
                            {"index", i},
                            {"source", m[i].source},
                            {"statistic", m[i].statistic}});
    doc["features"] = std::move(features);
    nlohmann::ordered_json js = nlohmann::ordered_json::object();
    for (const std::string& s : set_names()) {
        nlohmann::ordered_json fams = nlohmann::ordered_json::array();
        for (Family f : set_families(s)) fams.push_back(to_string(f));
        js[s] = {{"arity", set_features(s).size()}, {"families", fams}};
    }
    doc["sets"] = std::move(js);
    doc["aliases"] = {{"base", "satzilla_base"}, {"full", "satzilla_full"}};
    doc["notes"] = {
        "alf (254): 13 statistics (count min max mean std cv q1 median q3 mode mode_rate zeros entropy) over "
        "variable-side and clause-side degrees of CV+ and CV- (52), degrees and edge weights of the Variables, "
        "Clauses and Resolution graphs (78), BIG degrees (13), degrees and weights of the AND and BAND graphs (52), "
        "EXO degrees (13), recursive literal weights at iterations 1-3 (39), and the edge densities of the seven "
        "non-bipartite graphs (7).",
        "ant_powerlaw_alpha is 1e6 when every variable occurs equally often (no tail to fit).",
        "ant_* fractal dimensions and modularity are 0 for graphs without edges or with fewer than two radii.",
        "Entropy uses the natural logarithm; weights and biases are binned into 100 equal-width bins first.",
        "Empty sequences summarize to all zeros.",
        "Empty cells (CSV) or null (JSON) mark SATzilla features of formulas solved by preprocessing.",
    };
    return doc.dump(2);
}

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

FeatureVector extract(const Cnf& cnf, std::string_view set, const ExtractConfig& config) {
    FeatureVector fv;
    fv.set = require_set(set);
    const std::vector<Family> families = set_families(fv.set);
    auto wants = [&](Family f) { return std::find(families.begin(), families.end(), f) != families.end(); };
    const bool wants_satzilla = wants(Family::SatzillaBase) || wants(Family::SatzillaProbing);

    // values by family, merged in manifest order at the end
    std::map<Family, std::vector<double>> values;
    bool solved = false;
    bool truncated = false;
    try {
        std::optional<Cnf> reduced;
        if (config.preprocess == PreprocessMode::Basic && (wants_satzilla || config.preprocess_all)) {
            Stopwatch sw;
            PreprocessResult pre = preprocess(cnf);
            fv.timings.emplace_back("preprocess", sw.seconds());
            solved = pre.status != PreprocessStatus::Reduced;
            if (!solved) reduced = std::move(*pre.cnf);
        } else {
            reduced = cnf;
        }

        if (!solved) {
            if (wants(Family::SatzillaBase)) {
                Stopwatch sw;
                values[Family::SatzillaBase] = satzilla_base_values(cnf, *reduced);
                fv.timings.emplace_back("satzilla_base", sw.seconds());
            }
            if (wants(Family::SatzillaProbing)) {
                Stopwatch sw;
                ProbeReport report;
                report.seed = config.seed;
                report.dpll = dpll_probe(*reduced, config.seed, config.dpll);
                report.local_search = local_search_probe(*reduced, config.seed, config.local_search);
                truncated = report.dpll.truncated;
                values[Family::SatzillaProbing] = satzilla_probing_values(report);
                fv.timings.emplace_back("satzilla_probing", sw.seconds());
            }
        }

        const Cnf* structural = config.preprocess_all ? (reduced ? &*reduced : nullptr) : &cnf;
        if (structural) {
            if (wants(Family::Ant)) {
                Stopwatch sw;
                const auto v = ant_features(*structural).values();
                values[Family::Ant].assign(v.begin(), v.end());
                fv.timings.emplace_back("ant", sw.seconds());
            }
            if (wants(Family::Alf)) {
                Stopwatch sw;
                values[Family::Alf] = alf_feature_vector(*structural);
                fv.timings.emplace_back("alf", sw.seconds());
            }
        }
    } catch (const std::exception& e) {
        fv.status = FeatureStatus::Error;
        fv.diagnostic = e.what();
        return fv;
    }

    const auto& m = manifest();
    std::map<Family, std::size_t> cursor;
    for (std::size_t idx : set_features(fv.set)) {
        const Family f = m[idx].family;
        auto it = values.find(f);
        if (it == values.end()) {
            fv.values.emplace_back();
            continue;
        }
        std::size_t& c = cursor[f];
        if (c >= it->second.size()) {
            fv.status = FeatureStatus::Error;
            fv.diagnostic = "internal: family " + std::string(to_string(f)) + " produced too few values";
            fv.values.clear();
            return fv;
        }
        fv.values.emplace_back(it->second[c++]);
    }
    for (const auto& [f, v] : values)
        if (cursor[f] != v.size()) {
            fv.status = FeatureStatus::Error;
            fv.diagnostic = "internal: family " + std::string(to_string(f)) + " produced too many values";
            fv.values.clear();
            return fv;
        }

    if (truncated)
        fv.status = FeatureStatus::Timeout;
    else if (solved)
        fv.status = FeatureStatus::SolvedByPreprocessing;
    return fv;
}

}  // namespace satfeat
