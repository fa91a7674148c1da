// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion; exit status
// is nonzero when any criterion fails. `acceptance 3 5` runs a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <ctime>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../common.hpp"
#include "../oracles.hpp"
#include "satfeat/alf.hpp"
#include "satfeat/ant.hpp"
#include "satfeat/generate.hpp"
#include "satfeat/graph_builders.hpp"
#include "satfeat/preprocess.hpp"
#include "satfeat/registry.hpp"
#include "satfeat/satzilla.hpp"
#include "satfeat/stats.hpp"

using namespace satfeat;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool rel_near(double a, double b, double rel) { return std::abs(a - b) <= rel * (1.0 + std::abs(b)); }

// ---- 1 -------------------------------------------------------------------

void arities(Outcome& o) {
    const auto n = [](const char* s) { return set_features(s).size(); };
    o.check(n("satzilla_base") == 38, "|base| = 38");
    o.check(n("satzilla_full") == 69, "|full| = 69");
    o.check(n("ant") == 4, "|ant| = 4");
    o.check(n("alf") == kAlfTargetArity, "|alf| = 254");
    o.check(n("all") == n("satzilla_full") + n("ant") + n("alf"), "|all| = |full| + |ant| + |alf|");
    o.check(validate_manifest().empty(), "validate_manifest");
    o.detail << "base " << n("satzilla_base") << ", full " << n("satzilla_full") << ", ant " << n("ant") << ", alf "
             << n("alf") << ", all " << n("all");
}

// ---- 2 -------------------------------------------------------------------

void e1_goldens(Outcome& o) {
    const Cnf e1 = fixture::e1();
    constexpr double tol = 1e-9;
    o.check(near(size_features(e1).ratio, 4.0 / 3.0, tol), "ratio");
    o.check(near(horn_features(e1).horn_fraction, 0.5, tol), "horn fraction");
    const auto bal = balance_features(e1);
    o.check(near(bal.binary_fraction, 0.75, tol), "binary fraction");
    for (double b : variable_biases(e1)) o.check(near(b, 1.0 / 3.0, tol), "variable bias");
    o.check(near(bal.clause_bias.mean, 0.75, tol), "mean clause bias");
    const auto vig = build_vig(e1);
    o.check(vig.num_edges() == 3, "vig edge count");
    for (double w : weight_sequence(vig)) o.check(near(w, 4.0 / 3.0, tol), "vig weight");
    const auto cls = fixture::edge_map(build_clause_graph(e1));
    o.check(cls.size() == 2 && near(cls.count({0, 3}) ? cls.at({0, 3}) : -1, 2, tol) &&
                near(cls.count({1, 3}) ? cls.at({1, 3}) : -1, 1, tol),
            "clause graph edges");
    std::set<std::pair<uint32_t, uint32_t>> res;
    for (const auto& [k, w] : fixture::edge_map(build_resolution_graph(e1))) res.insert(k);
    o.check(res == std::set<std::pair<uint32_t, uint32_t>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}}, "resolution edges");
    o.check(build_big(e1).num_edges() == 6, "big edge count");

    // the same values through the public extraction path
    const auto fv = extract(e1, "satzilla_base");
    const auto& names = set_features("satzilla_base");
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string& name = manifest()[names[i]].name;
        if (name == "sz_ratio") o.check(fv.values[i] && near(*fv.values[i], 4.0 / 3.0, tol), "extract ratio");
        if (name == "sz_horn_frac") o.check(fv.values[i] && near(*fv.values[i], 0.5, tol), "extract horn");
        if (name == "sz_binary_frac") o.check(fv.values[i] && near(*fv.values[i], 0.75, tol), "extract binary");
        if (name == "sz_clause_bias_mean") o.check(fv.values[i] && near(*fv.values[i], 0.75, tol), "extract bias");
    }
    o.detail << "E1 golden values within 1e-9";
}

// ---- 3 -------------------------------------------------------------------

void builder_oracles(Outcome& o) {
    std::mt19937_64 rng(20240501);
    int gates_seen = 0;
    for (int t = 0; t < 200; ++t) {
        const Cnf f = oracle::random_cnf(rng, 20, 60);
        const std::string id = "instance " + std::to_string(t) + ": ";
        using fixture::edge_map;
        o.check(edge_map(build_vcg(f)) == oracle::vcg(f), id + "vcg");
        o.check(edge_map(build_vg(f)) == oracle::vg(f), id + "vg");
        o.check(edge_map(build_vig(f)) == oracle::vig(f), id + "vig");
        o.check(edge_map(build_cvig(f)) == oracle::cvig(f), id + "cvig");
        o.check(edge_map(build_cv_signed(f, true)) == oracle::cv_signed(f, true), id + "cv+");
        o.check(edge_map(build_cv_signed(f, false)) == oracle::cv_signed(f, false), id + "cv-");
        o.check(edge_map(build_alf_variable_graph(f)) == oracle::alf_variables(f), id + "alf variables");
        o.check(edge_map(build_clause_graph(f)) == oracle::clause_graph(f), id + "clauses");
        o.check(edge_map(build_resolution_graph(f)) == oracle::resolution_graph(f), id + "resolution");
        o.check(fixture::arc_set(build_big(f)) == oracle::big(f), id + "big");
        const auto and_g = detect_and_gates(f), band_g = detect_band_gates(f), exo_g = detect_exo_gates(f);
        gates_seen += static_cast<int>(and_g.size() + band_g.size() + exo_g.size());
        o.check(edge_map(build_gate_graph(and_g, f.num_vars())) == oracle::gate_graph(oracle::and_gates(f)),
                id + "and");
        o.check(edge_map(build_gate_graph(band_g, f.num_vars())) == oracle::gate_graph(oracle::band_gates(f)),
                id + "band");
        o.check(edge_map(build_exo_graph(exo_g, f.num_vars())) == oracle::exo_graph(oracle::exo_gates(f)),
                id + "exo");
    }
    o.detail << "200 formulas, 13 builders each, exact edge/weight equality (" << gates_seen << " gates seen)";
}

// ---- 4 -------------------------------------------------------------------

void preprocessing_soundness(Outcome& o) {
    std::mt19937_64 rng(4);
    int solved = 0;
    for (int t = 0; t < 1000; ++t) {
        const uint32_t m = static_cast<uint32_t>(rng() % 5);
        std::vector<Clause> cs;
        for (uint32_t i = 0; i < m; ++i) {
            Clause c;
            // each variable absent / positive / negative, clause non-empty
            while (c.empty())
                for (uint32_t v = 0; v < 3; ++v)
                    if (const auto s = rng() % 3; s != 0) c.emplace_back(v, s == 2);
            cs.push_back(c);
        }
        const Cnf f(3, cs);
        const bool sat = oracle::brute_force_sat(f);
        const auto r = preprocess(f);
        const std::string id = write_dimacs(f);
        switch (r.status) {
            case PreprocessStatus::SolvedSat: o.check(sat, "SAT claim on " + id); ++solved; break;
            case PreprocessStatus::SolvedUnsat: o.check(!sat, "UNSAT claim on " + id); ++solved; break;
            case PreprocessStatus::Reduced:
                o.check(r.cnf.has_value() && oracle::brute_force_sat(*r.cnf) == sat, "residual on " + id);
                break;
        }
    }
    o.detail << "1000 sampled 3-variable formulas agree with brute force (" << solved << " solved outright)";
}

// ---- 5 -------------------------------------------------------------------

void estimators(Outcome& o) {
    const std::vector<Edge> tri{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}};
    const double q = louvain_modularity(WeightedGraph(6, tri, false)).modularity;
    o.check(near(q, 0.5, 1e-6), "two-triangles modularity");

    std::mt19937_64 rng(25);
    const oracle::PowerLawSampler sample(2.5, 1.341487257250917);
    std::vector<double> xs(100000);
    for (double& x : xs) x = sample(rng);
    const auto fit = powerlaw_alpha(xs);
    o.check(!fit.degenerate && near(fit.alpha, 2.5, 0.1), "power-law alpha");

    std::vector<Edge> path;
    for (uint32_t i = 0; i + 1 < 1000; ++i) path.push_back({i, i + 1, 1});
    const double d = fractal_dimension(WeightedGraph(1000, path, false)).dimension;
    o.check(d >= 0.8 && d <= 1.2, "path fractal dimension");
    o.detail << "Q = " << q << ", alpha = " << fit.alpha << " (xmin " << fit.xmin << "), path d = " << d;
}

// ---- 6 -------------------------------------------------------------------

std::vector<Cnf> generated_instances() {
    std::vector<Cnf> out;
    for (uint64_t i = 0; i < 20; ++i) {
        GeneratorParams p;
        p.seed = 600 + i;
        switch (i % 3) {
            case 0: p.family = "random-ksat"; p.n = 40 + 5 * static_cast<uint32_t>(i); break;
            case 1: p.family = "pigeonhole"; p.holes = 3 + static_cast<uint32_t>(i % 4); break;
            default: p.family = "graph-coloring"; p.n = 15 + static_cast<uint32_t>(i); p.p_edge = 0.2; break;
        }
        out.push_back(generate(p));
    }
    return out;
}

bool bitwise_equal(const FeatureVector& a, const FeatureVector& b) {
    if (a.status != b.status || a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i].has_value() != b.values[i].has_value()) return false;
        if (a.values[i] && std::memcmp(&*a.values[i], &*b.values[i], sizeof(double)) != 0) return false;
    }
    return true;
}

void probing(Outcome& o) {
    ExtractConfig cfg;
    cfg.seed = 777;
    int idx = 0;
    for (const Cnf& f : generated_instances()) {
        const auto a = extract(f, "all", cfg), b = extract(f, "all", cfg);
        o.check(bitwise_equal(a, b), "double run on generated instance " + std::to_string(idx));
        o.check(a.status == FeatureStatus::Ok, "status OK on generated instance " + std::to_string(idx));
        ++idx;
    }
    std::mt19937_64 rng(66);
    LocalSearchOptions ls;
    ls.runs = 10;
    ls.cutoff = 1000;
    std::size_t runs = 0;
    for (int t = 0; t < 100; ++t) {
        const Cnf f = oracle::random_cnf(rng, 12, 60, 4);
        const std::size_t floor = oracle::brute_force_min_unsat(f);
        for (auto alg : {LocalSearchAlgorithm::Saps, LocalSearchAlgorithm::Gsat}) {
            ls.algorithm = alg;
            for (const auto& run : local_search_probe(f, static_cast<uint64_t>(t), ls).runs) {
                o.check(run.best_unsat >= floor, "local search below brute-force minimum");
                ++runs;
            }
        }
    }
    o.detail << "20 instances byte-identical across runs; " << runs << " local-search runs respect the minimum";
}

// ---- 7 -------------------------------------------------------------------

double thread_cpu_now() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

double cpu_seconds(const Cnf& f, const char* set) {
    const double start = thread_cpu_now();
    const auto fv = extract(f, set);
    const double t = thread_cpu_now() - start;
    if (fv.status == FeatureStatus::Error) throw std::runtime_error(fv.diagnostic);
    return t;
}

double time_set(const Cnf& f, const char* set, int repeats) {
    std::vector<double> t;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const auto fv = extract(f, set);
        t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        if (fv.status == FeatureStatus::Error) throw std::runtime_error(fv.diagnostic);
    }
    return std::accumulate(t.begin(), t.end(), 0.0) / static_cast<double>(t.size());
}

void timing(Outcome& o) {
    const Cnf big = random_ksat(1000, 4.2, 3, 7);
    const double base = time_set(big, "satzilla_base", 5);
    const double full = time_set(big, "satzilla_full", 3);
    const double alf = time_set(big, "alf", 5);
    o.check(base < full, "base < full at n=1000");
    o.check(base < alf, "base < alf at n=1000");
    o.detail << "n=1000 mean s: base " << base << ", full " << full << ", alf " << alf << "; ";

    // Growth over the grid. Every (size, instance, set) point is timed once per
    // round on thread CPU time, rounds outermost, so machine drift hits all
    // points alike; each point keeps its fastest round, and the instances of
    // a size are summed.
    const std::vector<uint32_t> grid{250, 500, 1000};
    constexpr int kInstances = 5, kRounds = 21;
    std::vector<Cnf> instances;
    for (uint32_t n : grid)
        for (uint64_t seed = 0; seed < kInstances; ++seed) instances.push_back(random_ksat(n, 4.2, 3, 100 + seed));
    std::vector<double> best_b(instances.size(), INFINITY), best_a(instances.size(), INFINITY);
    for (int r = 0; r < kRounds; ++r)
        for (std::size_t i = 0; i < instances.size(); ++i) {
            best_b[i] = std::min(best_b[i], cpu_seconds(instances[i], "satzilla_base"));
            best_a[i] = std::min(best_a[i], cpu_seconds(instances[i], "alf"));
        }
    // Paired per instance seed: d = growth(alf) - growth(base). A tie within
    // noise is not evidence of faster growth, so PASS needs mean(d) > 2 SE.
    for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
        std::vector<double> d;
        double rb = 0, ra = 0;
        for (int s = 0; s < kInstances; ++s) {
            const std::size_t lo = g * kInstances + s, hi = lo + kInstances;
            const double gb = best_b[hi] / best_b[lo], ga = best_a[hi] / best_a[lo];
            rb += gb / kInstances;
            ra += ga / kInstances;
            d.push_back(ga - gb);
        }
        const double mean = std::accumulate(d.begin(), d.end(), 0.0) / kInstances;
        double var = 0;
        for (double x : d) var += (x - mean) * (x - mean);
        const double se = std::sqrt(var / (kInstances - 1) / kInstances);
        const std::string step = std::to_string(grid[g]) + "->" + std::to_string(grid[g + 1]);
        o.check(mean > 2 * se, "alf growth > base growth " + step);
        o.detail << step << " growth base " << rb << ", alf " << ra << " (diff " << mean << " +- " << se << "); ";
    }
}

// ---- 8 -------------------------------------------------------------------

void classification(Outcome& o) {
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    const char* families[] = {"random-ksat", "pigeonhole", "graph-coloring"};
    for (int fam = 0; fam < 3; ++fam)
        for (uint32_t i = 0; i < 50; ++i) {
            GeneratorParams p;
            p.family = families[fam];
            p.seed = 8000 + 100 * static_cast<uint64_t>(fam) + i;
            p.n = fam == 0 ? 50 + 2 * i : 20 + i % 25;
            p.holes = 3 + i % 8;
            p.p_edge = 0.15 + 0.005 * (i % 20);
            const auto fv = extract(generate(p), "satzilla_base", {.seed = p.seed});
            std::vector<double> row;
            for (const auto& v : fv.values) row.push_back(v.value_or(0.0));
            x.push_back(row);
            y.push_back(fam);
        }
    // z-score each feature, constant columns drop out
    const std::size_t d = x[0].size();
    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0, var = 0;
        for (const auto& r : x) mean += r[j];
        mean /= static_cast<double>(x.size());
        for (const auto& r : x) var += (r[j] - mean) * (r[j] - mean);
        const double sd = std::sqrt(var / static_cast<double>(x.size()));
        for (auto& r : x) r[j] = sd > 0 ? (r[j] - mean) / sd : 0.0;
    }
    int correct = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double best = INFINITY;
        int label = -1;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (i == j) continue;
            double dist = 0;
            for (std::size_t k = 0; k < d; ++k) dist += (x[i][k] - x[j][k]) * (x[i][k] - x[j][k]);
            if (dist < best) {
                best = dist;
                label = y[j];
            }
        }
        correct += label == y[i];
    }
    const double acc = static_cast<double>(correct) / static_cast<double>(x.size());
    o.check(acc >= 0.9, "1-NN accuracy >= 90%");
    o.detail << "leave-one-out 1-NN accuracy " << correct << "/" << x.size() << " = " << acc;
}

// ---- 9 -------------------------------------------------------------------

bool vectors_close(const std::vector<double>& a, const std::vector<double>& b, double rel) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!rel_near(a[i], b[i], rel)) return false;
    return true;
}

void invariance(Outcome& o) {
    std::mt19937_64 rng(9);
    constexpr double rel = 1e-9;
    for (int t = 0; t < 100; ++t) {
        const Cnf f = oracle::random_cnf(rng, 20, 60);
        const auto ref = alf_feature_vector(f);
        std::vector<Clause> cs = f.clauses();
        std::shuffle(cs.begin(), cs.end(), rng);
        o.check(vectors_close(alf_feature_vector(Cnf(f.num_vars(), cs)), ref, rel), "ALF clause order");
    }
    for (int t = 0; t < 100; ++t) {
        const Cnf f = oracle::random_cnf(rng, 20, 60);
        std::vector<uint32_t> perm(f.num_vars());
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Clause> cs;
        for (const Clause& c : f.clauses()) {
            Clause r;
            for (Lit l : c) r.emplace_back(perm[l.var()], l.negative());
            cs.push_back(r);
        }
        o.check(vectors_close(alf_feature_vector(Cnf(f.num_vars(), cs)), alf_feature_vector(f), rel),
                "ALF variable renaming");
    }
    for (int t = 0; t < 100; ++t) {
        std::vector<double> v(1 + rng() % 60);
        for (double& x : v) x = static_cast<double>(rng() % 9) * (t % 2 ? 0.37 : 1.0);
        const auto s = summarize(v);
        std::vector<double> p = v;
        std::shuffle(p.begin(), p.end(), rng);
        o.check(summarize(p) == s, "StatSummary permutation");
        const double a = 0.1 + std::uniform_real_distribution<double>(0, 10)(rng);
        std::vector<double> scaled;
        for (double x : v) scaled.push_back(a * x);
        const auto z = summarize(scaled);
        const double tol = 1e-9 * (1 + a * std::abs(s.max));
        bool ok = near(z.min, a * s.min, tol) && near(z.max, a * s.max, tol) && near(z.mean, a * s.mean, tol) &&
                  near(z.std, a * s.std, tol) && near(z.median, a * s.median, tol) && near(z.q1, a * s.q1, tol) &&
                  near(z.q3, a * s.q3, tol) && near(z.cv, s.cv, 1e-9) && z.mode_rate == s.mode_rate &&
                  z.zeros == s.zeros && near(z.entropy, s.entropy, 1e-12);
        o.check(ok, "StatSummary scaling");
    }
    for (int t = 0; t < 100; ++t) {
        const Cnf f = oracle::random_cnf(rng, 30, 80);
        const std::string text = write_dimacs(f);
        const Cnf back = parse_dimacs(text);
        o.check(back == f && write_dimacs(back) == text, "DIMACS round trip");
    }
    o.detail << "100 cases each: ALF clause order, ALF renaming (rel tol 1e-9), summary permutation, summary scaling, "
                "DIMACS round trip";
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "manifest arity", arities},
        {2, "E1 golden values", e1_goldens},
        {3, "graph builders match naive constructions", builder_oracles},
        {4, "preprocessing soundness", preprocessing_soundness},
        {5, "estimators", estimators},
        {6, "probing determinism and bounds", probing},
        {7, "timing ordering and scaling", timing},
        {8, "1-NN family classification", classification},
        {9, "invariance suite", invariance},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", " << secs
                  << " s): " << o.detail.str() << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
