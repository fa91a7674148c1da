#include "satfeat/satfeat.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "satfeat/cnf.hpp"
#include "satfeat/generate.hpp"
#include "satfeat/graph_builders.hpp"
#include "satfeat/registry.hpp"

struct satfeat_cnf {
    satfeat::Cnf cnf;
};

struct satfeat_vector {
    satfeat::FeatureVector fv;
};

namespace {

thread_local std::string g_last_error;

satfeat_status fail(satfeat_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

satfeat_status ok() {
    g_last_error.clear();
    return SATFEAT_OK;
}

satfeat_status copy_out(const std::string& s, char** text, size_t* len) {
    if (!text) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null output pointer");
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) return fail(SATFEAT_ERR_INTERNAL, "out of memory");
    std::memcpy(buf, s.data(), s.size());
    buf[s.size()] = '\0';
    *text = buf;
    if (len) *len = s.size();
    return ok();
}

// Maps exceptions from the C++ core onto status codes.
template <typename F>
satfeat_status guarded(F&& f) {
    try {
        return f();
    } catch (const satfeat::ParseError& e) {
        return fail(SATFEAT_ERR_PARSE, e.what());
    } catch (const satfeat::UnknownSetError& e) {
        return fail(SATFEAT_ERR_UNKNOWN_SET, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SATFEAT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const satfeat::IoError& e) {
        return fail(SATFEAT_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(SATFEAT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SATFEAT_ERR_INTERNAL, "unknown error");
    }
}

}  // namespace

extern "C" {

const char* satfeat_version(void) { return "0.1.0"; }

const char* satfeat_last_error(void) { return g_last_error.c_str(); }

void satfeat_string_free(char* s) { std::free(s); }

void satfeat_config_init(satfeat_config* c) {
    if (!c) return;
    const satfeat::ExtractConfig d;
    c->seed = d.seed;
    c->ls_runs = d.local_search.runs;
    c->ls_cutoff = d.local_search.cutoff;
    c->dpll_probes = d.dpll.random_probes;
    c->probe_budget_ms = d.dpll.budget_ms;
    c->preprocess = SATFEAT_PREPROCESS_BASIC;
    c->preprocess_all = 0;
    c->ls_algorithm = SATFEAT_LS_SAPS;
}

satfeat_status satfeat_cnf_parse(const char* text, size_t len, satfeat_cnf** out) {
    if (!out || (!text && len > 0)) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new satfeat_cnf{satfeat::parse_dimacs(std::string_view(text ? text : "", len))};
        return ok();
    });
}

satfeat_status satfeat_cnf_read_file(const char* path, satfeat_cnf** out) {
    if (!out || !path) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new satfeat_cnf{satfeat::read_dimacs_file(path)};
        return ok();
    });
}

void satfeat_cnf_free(satfeat_cnf* cnf) { delete cnf; }

uint32_t satfeat_cnf_num_vars(const satfeat_cnf* cnf) { return cnf ? cnf->cnf.num_vars() : 0; }

size_t satfeat_cnf_num_clauses(const satfeat_cnf* cnf) { return cnf ? cnf->cnf.num_clauses() : 0; }

satfeat_status satfeat_cnf_write(const satfeat_cnf* cnf, char** text, size_t* len) {
    if (!cnf) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null cnf");
    return guarded([&] { return copy_out(satfeat::write_dimacs(cnf->cnf), text, len); });
}

satfeat_status satfeat_generate(const char* family, uint32_t n, uint32_t k, double param, uint64_t seed, char** text,
                                size_t* len) {
    if (!family) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null family");
    return guarded([&] {
        satfeat::GeneratorParams p;
        p.family = family;
        p.seed = seed;
        p.n = n;
        if (p.family == "random-ksat") {
            p.k = k;
            p.ratio = param;
        } else if (p.family == "pigeonhole") {
            p.holes = n;
        } else {
            p.colors = k;
            p.p_edge = param;
        }
        return copy_out(satfeat::labelled_dimacs(satfeat::generate(p), p.family), text, len);
    });
}

satfeat_status satfeat_set_arity(const char* set, size_t* arity) {
    if (!set || !arity) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *arity = satfeat::set_features(set).size();
        return ok();
    });
}

satfeat_status satfeat_feature_name(const char* set, size_t index, const char** name) {
    if (!set || !name) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto& idx = satfeat::set_features(set);
        if (index >= idx.size()) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "feature index out of range");
        *name = satfeat::manifest()[idx[index]].name.c_str();
        return ok();
    });
}

satfeat_status satfeat_manifest_json(char** text, size_t* len) {
    return guarded([&] { return copy_out(satfeat::manifest_json(), text, len); });
}

satfeat_status satfeat_extract(const satfeat_cnf* cnf, const char* set, const satfeat_config* config,
                               satfeat_vector** out) {
    if (!cnf || !set || !out) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        satfeat::ExtractConfig cfg;
        if (config) {
            if (config->ls_runs <= 0 || config->ls_cutoff <= 0 || config->dpll_probes < 0 ||
                config->probe_budget_ms < 0)
                return fail(SATFEAT_ERR_INVALID_ARGUMENT, "probe settings must be positive");
            cfg.seed = config->seed;
            cfg.local_search.runs = config->ls_runs;
            cfg.local_search.cutoff = config->ls_cutoff;
            cfg.local_search.algorithm =
                config->ls_algorithm == SATFEAT_LS_GSAT ? satfeat::LocalSearchAlgorithm::Gsat
                                                        : satfeat::LocalSearchAlgorithm::Saps;
            cfg.dpll.random_probes = config->dpll_probes;
            cfg.dpll.budget_ms = config->probe_budget_ms;
            cfg.preprocess = config->preprocess == SATFEAT_PREPROCESS_NONE ? satfeat::PreprocessMode::None
                                                                           : satfeat::PreprocessMode::Basic;
            cfg.preprocess_all = config->preprocess_all != 0;
        }
        *out = new satfeat_vector{satfeat::extract(cnf->cnf, set, cfg)};
        return ok();
    });
}

void satfeat_vector_free(satfeat_vector* v) { delete v; }

satfeat_vector_status satfeat_vector_status_of(const satfeat_vector* v) {
    if (!v) return SATFEAT_VECTOR_ERROR;
    switch (v->fv.status) {
        case satfeat::FeatureStatus::Ok: return SATFEAT_VECTOR_OK;
        case satfeat::FeatureStatus::SolvedByPreprocessing: return SATFEAT_VECTOR_SOLVED_BY_PREPROCESSING;
        case satfeat::FeatureStatus::Timeout: return SATFEAT_VECTOR_TIMEOUT;
        case satfeat::FeatureStatus::Error: break;
    }
    return SATFEAT_VECTOR_ERROR;
}

size_t satfeat_vector_size(const satfeat_vector* v) { return v ? v->fv.values.size() : 0; }

int satfeat_vector_value(const satfeat_vector* v, size_t index, double* value) {
    if (!v || index >= v->fv.values.size() || !v->fv.values[index]) return 0;
    if (value) *value = *v->fv.values[index];
    return 1;
}

const char* satfeat_vector_diagnostic(const satfeat_vector* v) { return v ? v->fv.diagnostic.c_str() : ""; }

size_t satfeat_vector_timing_count(const satfeat_vector* v) { return v ? v->fv.timings.size() : 0; }

satfeat_status satfeat_vector_timing(const satfeat_vector* v, size_t index, const char** stage, double* seconds) {
    if (!v || index >= v->fv.timings.size()) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "timing index out of range");
    if (stage) *stage = v->fv.timings[index].first.c_str();
    if (seconds) *seconds = v->fv.timings[index].second;
    return ok();
}

satfeat_status satfeat_dump_graph(const satfeat_cnf* cnf, const char* graph, char** text, size_t* len) {
    if (!cnf || !graph) return fail(SATFEAT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::ostringstream os;
        satfeat::write_edge_list(os, satfeat::build_graph_by_name(cnf->cnf, graph));
        return copy_out(os.str(), text, len);
    });
}

}  // extern "C"
