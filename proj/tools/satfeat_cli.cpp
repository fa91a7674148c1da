// satfeat command line: extract | generate | bench | manifest
//
//   satfeat extract --set all -o features.csv instances/
//   satfeat generate --family random-ksat --n 500 --count 10 --out-dir gen/
//   satfeat bench --sizes 100,200,400 --repeats 3

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satfeat/satfeat.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;

struct CnfHandle {
    satfeat_cnf* p = nullptr;
    ~CnfHandle() { satfeat_cnf_free(p); }
};

struct VectorHandle {
    satfeat_vector* p = nullptr;
    ~VectorHandle() { satfeat_vector_free(p); }
};

struct CString {
    char* p = nullptr;
    std::size_t len = 0;
    ~CString() { satfeat_string_free(p); }
    std::string str() const { return p ? std::string(p, len) : std::string(); }
};

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "0";
    return std::string(buf, end);
}

std::vector<std::string> feature_names(const std::string& set) {
    std::size_t n = 0;
    satfeat_set_arity(set.c_str(), &n);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        const char* name = nullptr;
        satfeat_feature_name(set.c_str(), i, &name);
        names[i] = name;
    }
    return names;
}

bool is_instance_file(const fs::path& p) {
    const std::string ext = p.extension().string();
    return ext == ".cnf" || ext == ".dimacs";
}

// Files are taken as given; directories are searched recursively for .cnf / .dimacs.
std::vector<std::string> collect_inputs(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (const std::string& a : args) {
        std::error_code ec;
        if (fs::is_directory(a, ec)) {
            for (const auto& e : fs::recursive_directory_iterator(a, ec))
                if (e.is_regular_file() && is_instance_file(e.path())) out.push_back(e.path().string());
        } else {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// "path,label" per line; lookup by the path as given, then by basename.
std::map<std::string, std::string> read_labels(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open labels file " + file);
    std::map<std::string, std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.rfind(',');
        if (comma == std::string::npos) continue;
        labels[line.substr(0, comma)] = line.substr(comma + 1);
    }
    return labels;
}

struct Row {
    std::string instance;
    std::string status;
    std::string diagnostic;
    std::vector<std::optional<double>> values;
    std::vector<std::pair<std::string, double>> timings;
};

const char* status_name(satfeat_vector_status s) {
    switch (s) {
        case SATFEAT_VECTOR_OK: return "OK";
        case SATFEAT_VECTOR_SOLVED_BY_PREPROCESSING: return "SOLVED_BY_PREPROCESSING";
        case SATFEAT_VECTOR_TIMEOUT: return "TIMEOUT";
        case SATFEAT_VECTOR_ERROR: break;
    }
    return "ERROR";
}

struct ExtractOptions {
    std::vector<std::string> inputs;
    std::string set = "all";
    std::string format = "csv";
    std::string output;
    std::optional<uint64_t> seed;
    int ls_runs = 30;
    int ls_cutoff = 10000;
    int probes = 100;
    int probe_budget_ms = 0;
    int jobs = 1;
    std::string preprocess = "basic";
    bool preprocess_all = false;
    std::string labels;
    std::vector<std::string> dump_graphs;
    std::string dump_dir = ".";
    std::string ls_algorithm = "saps";
};

uint64_t resolve_seed(const std::optional<uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SATFEAT_SEED")) {
        uint64_t v = 0;
        const std::string_view s(env);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size()) return v;
        std::cerr << "warning: ignoring non-numeric SATFEAT_SEED\n";
    }
    return 0;
}

satfeat_config make_config(const ExtractOptions& o) {
    satfeat_config c;
    satfeat_config_init(&c);
    c.seed = resolve_seed(o.seed);
    c.ls_runs = o.ls_runs;
    c.ls_cutoff = o.ls_cutoff;
    c.dpll_probes = o.probes;
    c.probe_budget_ms = o.probe_budget_ms;
    c.preprocess = o.preprocess == "none" ? SATFEAT_PREPROCESS_NONE : SATFEAT_PREPROCESS_BASIC;
    c.preprocess_all = o.preprocess_all ? 1 : 0;
    c.ls_algorithm = o.ls_algorithm == "gsat" ? SATFEAT_LS_GSAT : SATFEAT_LS_SAPS;
    return c;
}

Row extract_one(const std::string& path, const ExtractOptions& o, const satfeat_config& cfg) {
    Row row;
    row.instance = path;
    CnfHandle cnf;
    if (satfeat_cnf_read_file(path.c_str(), &cnf.p) != SATFEAT_OK) {
        row.status = "ERROR";
        row.diagnostic = satfeat_last_error();
        return row;
    }
    for (const std::string& g : o.dump_graphs) {
        CString text;
        if (satfeat_dump_graph(cnf.p, g.c_str(), &text.p, &text.len) != SATFEAT_OK) {
            row.diagnostic += std::string("dump ") + g + ": " + satfeat_last_error() + "; ";
            continue;
        }
        const fs::path out = fs::path(o.dump_dir) / (fs::path(path).filename().string() + "." + g + ".edges");
        std::ofstream(out, std::ios::binary) << text.str();
    }
    VectorHandle vec;
    if (satfeat_extract(cnf.p, o.set.c_str(), &cfg, &vec.p) != SATFEAT_OK) {
        row.status = "ERROR";
        row.diagnostic = satfeat_last_error();
        return row;
    }
    row.status = status_name(satfeat_vector_status_of(vec.p));
    row.diagnostic += satfeat_vector_diagnostic(vec.p);
    const std::size_t n = satfeat_vector_size(vec.p);
    row.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0;
        if (satfeat_vector_value(vec.p, i, &v)) row.values[i] = v;
    }
    for (std::size_t i = 0; i < satfeat_vector_timing_count(vec.p); ++i) {
        const char* stage = nullptr;
        double secs = 0;
        satfeat_vector_timing(vec.p, i, &stage, &secs);
        row.timings.emplace_back(stage, secs);
    }
    return row;
}

std::vector<Row> run_pool(const std::vector<std::string>& inputs, const ExtractOptions& o) {
    const satfeat_config cfg = make_config(o);
    std::vector<Row> rows(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) rows[i] = extract_one(inputs[i], o, cfg);
    };
    const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(inputs.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

std::string label_for(const std::map<std::string, std::string>& labels, const std::string& path) {
    if (auto it = labels.find(path); it != labels.end()) return it->second;
    if (auto it = labels.find(fs::path(path).filename().string()); it != labels.end()) return it->second;
    return "";
}

void write_csv(std::ostream& out, const std::vector<Row>& rows, const std::vector<std::string>& names,
               const std::map<std::string, std::string>* labels) {
    out << "instance,status";
    if (labels) out << ",label";
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (const Row& r : rows) {
        out << r.instance << ',' << r.status;
        if (labels) out << ',' << label_for(*labels, r.instance);
        for (std::size_t i = 0; i < names.size(); ++i) {
            out << ',';
            if (i < r.values.size() && r.values[i]) out << format_number(*r.values[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<Row>& rows, const std::vector<std::string>& names,
                const std::map<std::string, std::string>* labels, const std::string& set) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& r : rows) {
        nlohmann::ordered_json o;
        o["instance"] = r.instance;
        o["set"] = set;
        o["status"] = r.status;
        if (labels) o["label"] = label_for(*labels, r.instance);
        if (!r.diagnostic.empty()) o["diagnostic"] = r.diagnostic;
        nlohmann::ordered_json t = nlohmann::ordered_json::object();
        for (const auto& [stage, secs] : r.timings) t[stage] = secs;
        o["timings"] = t;
        nlohmann::ordered_json f = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < r.values.size() && i < names.size(); ++i)
            f[names[i]] = r.values[i] ? nlohmann::ordered_json(*r.values[i]) : nlohmann::ordered_json(nullptr);
        o["features"] = f;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

int cmd_extract(const ExtractOptions& o) {
    size_t arity = 0;
    if (satfeat_set_arity(o.set.c_str(), &arity) != SATFEAT_OK) {
        std::cerr << "satfeat: " << satfeat_last_error() << '\n';
        return kExitUsage;
    }
    std::map<std::string, std::string> labels;
    if (!o.labels.empty()) labels = read_labels(o.labels);
    if (!o.dump_graphs.empty()) fs::create_directories(o.dump_dir);

    const std::vector<std::string> inputs = collect_inputs(o.inputs);
    const std::vector<Row> rows = run_pool(inputs, o);
    const std::vector<std::string> names = feature_names(o.set);

    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output, std::ios::binary);
        if (!file) {
            std::cerr << "satfeat: cannot write " << o.output << '\n';
            return 1;
        }
    }
    std::ostream& out = o.output.empty() ? std::cout : file;
    const auto* lp = o.labels.empty() ? nullptr : &labels;
    if (o.format == "json")
        write_json(out, rows, names, lp, o.set);
    else
        write_csv(out, rows, names, lp);

    bool all_ok = true;
    for (const Row& r : rows) {
        if (r.status == "OK" || r.status == "SOLVED_BY_PREPROCESSING") continue;
        all_ok = false;
        std::cerr << r.instance << ": " << r.status << (r.diagnostic.empty() ? "" : " (" + r.diagnostic + ")")
                  << '\n';
    }
    return all_ok ? 0 : 1;
}

struct GenerateOptions {
    std::string family = "random-ksat";
    uint32_t n = 100;
    double ratio = 4.2;
    uint32_t k = 3;
    uint32_t holes = 5;
    double p_edge = 0.1;
    uint32_t colors = 3;
    std::optional<uint64_t> seed;
    int count = 1;
    std::string out_dir;
    std::string output;
};

int cmd_generate(const GenerateOptions& g) {
    const uint64_t base = resolve_seed(g.seed);
    if (!g.out_dir.empty()) fs::create_directories(g.out_dir);
    for (int i = 0; i < g.count; ++i) {
        const uint64_t seed = base + static_cast<uint64_t>(i);
        CString text;
        satfeat_status st;
        if (g.family == "random-ksat")
            st = satfeat_generate("random-ksat", g.n, g.k, g.ratio, seed, &text.p, &text.len);
        else if (g.family == "pigeonhole")
            st = satfeat_generate("pigeonhole", g.holes, 0, 0, seed, &text.p, &text.len);
        else
            st = satfeat_generate(g.family.c_str(), g.n, g.colors, g.p_edge, seed, &text.p, &text.len);
        if (st != SATFEAT_OK) {
            std::cerr << "satfeat: " << satfeat_last_error() << '\n';
            return st == SATFEAT_ERR_INVALID_ARGUMENT ? kExitUsage : 1;
        }
        if (!g.out_dir.empty()) {
            char name[64];
            std::snprintf(name, sizeof name, "-%04d.cnf", i);
            std::ofstream(fs::path(g.out_dir) / (g.family + name), std::ios::binary) << text.str();
        } else if (!g.output.empty() && g.count == 1) {
            std::ofstream(g.output, std::ios::binary) << text.str();
        } else {
            std::cout << text.str();
        }
    }
    return 0;
}

struct BenchOptions {
    std::vector<uint32_t> sizes;
    std::vector<std::string> sets = {"satzilla_base", "satzilla_full", "ant", "alf"};
    int repeats = 3;
    double ratio = 4.2;
    std::optional<uint64_t> seed;
    int ls_runs = 30;
    int ls_cutoff = 10000;
    std::string output;
};

int cmd_bench(BenchOptions b) {
    if (b.sizes.empty())
        for (uint32_t s = 100; s <= 1000; s += 100) b.sizes.push_back(s);
    for (const auto& s : b.sets) {
        size_t a;
        if (satfeat_set_arity(s.c_str(), &a) != SATFEAT_OK) {
            std::cerr << "satfeat: " << satfeat_last_error() << '\n';
            return kExitUsage;
        }
    }
    const uint64_t base = resolve_seed(b.seed);
    satfeat_config cfg;
    satfeat_config_init(&cfg);
    cfg.seed = base;
    cfg.ls_runs = b.ls_runs;
    cfg.ls_cutoff = b.ls_cutoff;

    std::ostringstream out;
    out << "size,set,repeats,mean_seconds,variance_seconds\n";
    for (uint32_t n : b.sizes) {
        std::map<std::string, std::vector<double>> times;
        for (int r = 0; r < b.repeats; ++r) {
            CString text;
            if (satfeat_generate("random-ksat", n, 3, b.ratio, base + 7919u * n + static_cast<uint64_t>(r), &text.p,
                                 &text.len) != SATFEAT_OK) {
                std::cerr << "satfeat: " << satfeat_last_error() << '\n';
                return 1;
            }
            CnfHandle cnf;
            satfeat_cnf_parse(text.p, text.len, &cnf.p);
            for (const auto& s : b.sets) {
                VectorHandle v;
                const auto t0 = std::chrono::steady_clock::now();
                satfeat_extract(cnf.p, s.c_str(), &cfg, &v.p);
                times[s].push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            }
        }
        for (const auto& s : b.sets) {
            const auto& t = times[s];
            double mean = 0, var = 0;
            for (double x : t) mean += x;
            mean /= static_cast<double>(t.size());
            for (double x : t) var += (x - mean) * (x - mean);
            var /= static_cast<double>(t.size());
            out << n << ',' << s << ',' << t.size() << ',' << format_number(mean) << ',' << format_number(var) << '\n';
        }
        std::cerr << "bench: n=" << n << " done\n";
    }
    if (b.output.empty())
        std::cout << out.str();
    else
        std::ofstream(b.output, std::ios::binary) << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAT instance feature extraction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", satfeat_version());

    ExtractOptions ex;
    auto* extract = app.add_subcommand("extract", "extract feature vectors from DIMACS files");
    extract->add_option("inputs", ex.inputs, "files or directories")->required();
    extract->add_option("--set", ex.set, "satzilla_base|satzilla_full|ant|alf|all (aliases base, full)");
    extract->add_option("--format", ex.format)->check(CLI::IsMember({"csv", "json"}));
    extract->add_option("-o,--output", ex.output, "output file (default stdout)");
    extract->add_option("--seed", ex.seed, "random seed (fallback SATFEAT_SEED, then 0)");
    extract->add_option("--ls-runs", ex.ls_runs)->check(CLI::PositiveNumber);
    extract->add_option("--ls-cutoff", ex.ls_cutoff)->check(CLI::PositiveNumber);
    extract->add_option("--ls-algorithm", ex.ls_algorithm)->check(CLI::IsMember({"saps", "gsat"}));
    extract->add_option("--probes", ex.probes, "random DPLL probes")->check(CLI::NonNegativeNumber);
    extract->add_option("--probe-budget-ms", ex.probe_budget_ms, "0 = unlimited")->check(CLI::NonNegativeNumber);
    extract->add_option("-j,--jobs", ex.jobs)->check(CLI::PositiveNumber);
    extract->add_option("--preprocess", ex.preprocess)->check(CLI::IsMember({"none", "basic"}));
    extract->add_flag("--preprocess-all", ex.preprocess_all, "ANT/ALF also use the preprocessed formula");
    extract->add_option("--labels", ex.labels, "sidecar file of path,label lines");
    extract->add_option("--dump-graph", ex.dump_graphs, "write edge lists of these graphs");
    extract->add_option("--dump-dir", ex.dump_dir);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "write synthetic instances");
    generate->add_option("--family", gen.family)->check(CLI::IsMember({"random-ksat", "pigeonhole", "graph-coloring"}));
    generate->add_option("--n", gen.n, "variables (random-ksat) or graph vertices (graph-coloring)");
    generate->add_option("--ratio", gen.ratio);
    generate->add_option("--k", gen.k, "clause width");
    generate->add_option("--holes", gen.holes, "pigeonhole holes p, encoding PHP(p+1, p)");
    generate->add_option("--p-edge", gen.p_edge);
    generate->add_option("--colors", gen.colors);
    generate->add_option("--seed", gen.seed);
    generate->add_option("--count", gen.count)->check(CLI::PositiveNumber);
    generate->add_option("--out-dir", gen.out_dir);
    generate->add_option("-o,--output", gen.output);

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "time feature sets on random 3-SAT across sizes");
    bench_cmd->add_option("--sizes", bench.sizes, "default 100..1000 step 100")->delimiter(',');
    bench_cmd->add_option("--sets", bench.sets)->delimiter(',');
    bench_cmd->add_option("--repeats", bench.repeats)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--ratio", bench.ratio);
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_option("--ls-runs", bench.ls_runs)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--ls-cutoff", bench.ls_cutoff)->check(CLI::PositiveNumber);
    bench_cmd->add_option("-o,--output", bench.output);

    auto* manifest = app.add_subcommand("manifest", "print the feature manifest as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*extract) return cmd_extract(ex);
        if (*generate) return cmd_generate(gen);
        if (*bench_cmd) return cmd_bench(bench);
        if (*manifest) {
            CString text;
            satfeat_manifest_json(&text.p, &text.len);
            std::cout << text.str() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "satfeat: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
