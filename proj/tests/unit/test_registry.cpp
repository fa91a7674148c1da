#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "../common.hpp"
#include "satfeat/registry.hpp"

using namespace satfeat;

TEST(Manifest, Arities) {
    EXPECT_EQ(set_features("satzilla_base").size(), 38u);
    EXPECT_EQ(set_features("satzilla_full").size(), 69u);
    EXPECT_EQ(set_features("full").size() - set_features("base").size(), 31u);
    EXPECT_EQ(set_features("ant").size(), 4u);
    EXPECT_EQ(set_features("alf").size(), kAlfTargetArity);
    EXPECT_EQ(set_features("all").size(), 69u + 4u + 254u);
    EXPECT_TRUE(validate_manifest().empty());
}

TEST(Manifest, BaseInsideFullInOrder) {
    const auto& base = set_features("satzilla_base");
    const auto& full = set_features("satzilla_full");
    EXPECT_TRUE(std::equal(base.begin(), base.end(), full.begin()));
    const auto& all = set_features("all");
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
}

TEST(Manifest, UniqueNames) {
    std::set<std::string> names;
    for (const auto& d : manifest()) names.insert(d.name);
    EXPECT_EQ(names.size(), manifest().size());
}

TEST(Manifest, UnknownSet) {
    EXPECT_THROW(set_features("nope"), UnknownSetError);
    EXPECT_FALSE(canonical_set_name("nope"));
    EXPECT_EQ(*canonical_set_name("base"), "satzilla_base");
}

TEST(Manifest, Json) {
    const auto j = nlohmann::json::parse(manifest_json());
    ASSERT_EQ(j["features"].size(), manifest().size());
    EXPECT_EQ(j["features"][0]["name"], manifest()[0].name);
    EXPECT_EQ(j["features"][0]["index"], 0);
    EXPECT_EQ(j["sets"]["satzilla_full"]["arity"], 69);
}

TEST(Extract, E1Sets) {
    const auto base = extract(fixture::e1(), "satzilla_base");
    EXPECT_EQ(base.status, FeatureStatus::Ok);
    EXPECT_EQ(base.values.size(), 38u);
    for (const auto& v : base.values) EXPECT_TRUE(v.has_value());
    EXPECT_NEAR(*base.values[4], 4.0 / 3.0, 1e-9);
    EXPECT_EQ(extract(fixture::e1(), "ant").values.size(), 4u);
}

TEST(Extract, SolvedByPreprocessing) {
    const Cnf f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
    const auto full = extract(f, "satzilla_full");
    EXPECT_EQ(full.status, FeatureStatus::SolvedByPreprocessing);
    for (const auto& v : full.values) EXPECT_FALSE(v.has_value());
    // ANT and ALF still see the raw formula
    const auto all = extract(f, "all");
    EXPECT_EQ(all.status, FeatureStatus::SolvedByPreprocessing);
    EXPECT_FALSE(all.values[0].has_value());
    EXPECT_TRUE(all.values.back().has_value());
}

TEST(Extract, PreprocessAllDropsEverything) {
    ExtractConfig cfg;
    cfg.preprocess_all = true;
    const auto all = extract(parse_dimacs("p cnf 2 2\n1 0\n-1 2 0\n"), "all", cfg);
    EXPECT_EQ(all.status, FeatureStatus::SolvedByPreprocessing);
    for (const auto& v : all.values) EXPECT_FALSE(v.has_value());
}

TEST(Extract, DegenerateInstanceIsError) {
    const auto r = extract(Cnf(0, {}), "satzilla_base", {.preprocess = PreprocessMode::None});
    EXPECT_EQ(r.status, FeatureStatus::Error);
    EXPECT_FALSE(r.diagnostic.empty());
    for (const auto& v : r.values) EXPECT_FALSE(v.has_value());
}

TEST(Extract, Deterministic) {
    const Cnf f = parse_dimacs("p cnf 5 6\n1 2 -3 0\n-1 4 0\n2 -4 5 0\n-2 -5 0\n3 4 5 0\n-3 1 0\n");
    ExtractConfig cfg;
    cfg.seed = 42;
    const auto a = extract(f, "all", cfg), b = extract(f, "all", cfg);
    EXPECT_EQ(a.values, b.values);
    EXPECT_FALSE(a.timings.empty());
}
