#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "../common.hpp"
#include "../oracles.hpp"
#include "satfeat/preprocess.hpp"

using namespace satfeat;

namespace {

Cnf f(std::string_view t) { return parse_dimacs(t); }

}  // namespace

TEST(Tautologies, Removed) {
    std::size_t removed = 0;
    const Cnf out = remove_tautologies(f("p cnf 3 2\n1 -1 2 0\n2 3 0\n"), &removed);
    EXPECT_EQ(removed, 1u);
    EXPECT_EQ(out, f("p cnf 3 1\n2 3 0\n"));
    EXPECT_EQ(remove_tautologies(fixture::e1()), fixture::e1());
    EXPECT_EQ(remove_tautologies(f("p cnf 1 1\n1 -1 0\n")).num_clauses(), 0u);
}

TEST(UnitPropagate, ChainSolvesSat) {
    const auto r = unit_propagate(f("p cnf 3 3\n1 0\n-1 2 0\n-2 3 0\n"));
    EXPECT_EQ(r.status, PreprocessStatus::SolvedSat);
    EXPECT_EQ(r.forced, (std::vector<Lit>{Lit(0, false), Lit(1, false), Lit(2, false)}));
    EXPECT_FALSE(r.cnf.has_value());
}

TEST(UnitPropagate, Contradiction) {
    EXPECT_EQ(unit_propagate(f("p cnf 1 2\n1 0\n-1 0\n")).status, PreprocessStatus::SolvedUnsat);
    EXPECT_EQ(preprocess(f("p cnf 2 3\n2 0\n-2 1 0\n-1 0\n")).status, PreprocessStatus::SolvedUnsat);
}

TEST(UnitPropagate, NoUnitsLeavesFormula) {
    const auto r = unit_propagate(fixture::e1());
    ASSERT_EQ(r.status, PreprocessStatus::Reduced);
    EXPECT_EQ(*r.cnf, fixture::e1());
}

TEST(Preprocess, TautologyThenE1) {
    const auto r = preprocess(f("p cnf 3 5\n1 -1 0\n1 2 0\n-1 3 0\n-2 -3 0\n1 2 3 0\n"));
    ASSERT_EQ(r.status, PreprocessStatus::Reduced);
    EXPECT_EQ(*r.cnf, fixture::e1());
    EXPECT_EQ(r.removed_tautologies, 1u);
}

TEST(Preprocess, RenumbersDensely) {
    // 1 is forced, which satisfies (1 2) and strips -1 from (-1 4 5)
    const auto r = preprocess(f("p cnf 5 4\n1 0\n1 2 0\n-1 4 5 0\n-4 -5 0\n"));
    ASSERT_EQ(r.status, PreprocessStatus::Reduced);
    EXPECT_EQ(r.var_map, (std::vector<uint32_t>{3, 4}));
    EXPECT_EQ(*r.cnf, f("p cnf 2 2\n1 2 0\n-1 -2 0\n"));
}

TEST(Preprocess, ReducedHasNoUnitsOrTautologies) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const Cnf in = oracle::random_cnf(rng, 10, 30, 4);
        const auto r = preprocess(in);
        if (r.status != PreprocessStatus::Reduced) continue;
        for (const Clause& c : r.cnf->clauses()) {
            EXPECT_GE(c.size(), 2u);
            EXPECT_FALSE(oracle::tautological(c));
        }
    }
}

TEST(Preprocess, SatisfiabilityPreserved) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const Cnf in = oracle::random_cnf(rng, 8, 20, 3);
        const auto r = preprocess(in);
        const bool sat = oracle::brute_force_sat(in);
        if (r.status == PreprocessStatus::SolvedSat) EXPECT_TRUE(sat);
        else if (r.status == PreprocessStatus::SolvedUnsat) EXPECT_FALSE(sat);
        else EXPECT_EQ(oracle::brute_force_sat(*r.cnf), sat);
    }
}

TEST(Preprocess, ConfluentUnderClauseShuffle) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const Cnf in = oracle::random_cnf(rng, 8, 20, 3);
        std::vector<Clause> shuffled = in.clauses();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto a = preprocess(in);
        const auto b = preprocess(Cnf(in.num_vars(), shuffled));
        EXPECT_EQ(a.status, b.status);
        if (a.status == PreprocessStatus::Reduced) {
            EXPECT_EQ(a.var_map, b.var_map);
            EXPECT_EQ(a.cnf->num_clauses(), b.cnf->num_clauses());
        }
    }
}
