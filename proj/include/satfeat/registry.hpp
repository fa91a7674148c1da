#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satfeat/cnf.hpp"
#include "satfeat/satzilla.hpp"

namespace satfeat {

enum class Family { SatzillaBase, SatzillaProbing, Ant, Alf };

std::string_view to_string(Family f);

struct FeatureDescriptor {
    std::string name;
    Family family;
    std::string source;     // graph or measurement the value comes from
    std::string statistic;  // summary field, or "value"
};

class UnknownSetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every feature, in output order: base, probing, ant, alf.
const std::vector<FeatureDescriptor>& manifest();

/// Canonical set names: satzilla_base, satzilla_full, ant, alf, all.
const std::vector<std::string>& set_names();
/// Accepts the canonical names plus the aliases "base" and "full".
std::optional<std::string> canonical_set_name(std::string_view name);
/// Manifest indices of a set, in output order. Throws UnknownSetError.
const std::vector<std::size_t>& set_features(std::string_view name);
std::vector<Family> set_families(std::string_view name);

inline constexpr std::size_t kBaseArity = 38;
inline constexpr std::size_t kProbingArity = 31;
inline constexpr std::size_t kAntArity = 4;
/// The published ALF count; the manifest's alf arity is checked against it.
inline constexpr std::size_t kAlfTargetArity = 254;

/// Empty when the manifest satisfies every arity and naming invariant.
std::vector<std::string> validate_manifest();

/// {"features": [{name, family, index, source, statistic}], "sets": {...}, "notes": [...]}
std::string manifest_json();

enum class PreprocessMode { None, Basic };

struct ExtractConfig {
    uint64_t seed = 0;
    DpllProbeOptions dpll;
    LocalSearchOptions local_search;
    PreprocessMode preprocess = PreprocessMode::Basic;
    /// Also feed the preprocessed formula to ANT and ALF.
    bool preprocess_all = false;
};

enum class FeatureStatus { Ok, SolvedByPreprocessing, Timeout, Error };

std::string_view to_string(FeatureStatus s);

struct FeatureVector {
    std::string set;
    /// Aligned with set_features(set); empty slots were not computed
    /// (SATzilla families of a formula solved by preprocessing).
    std::vector<std::optional<double>> values;
    FeatureStatus status = FeatureStatus::Ok;
    std::string diagnostic;
    /// (stage, seconds) in execution order.
    std::vector<std::pair<std::string, double>> timings;
};

FeatureVector extract(const Cnf& cnf, std::string_view set, const ExtractConfig& config = {});

}  // namespace satfeat
