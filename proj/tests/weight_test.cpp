// Copyright 2026 The qcsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcsym/weight.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcsym/qc_code.hpp"
#include "qcsym/search.hpp"

using namespace qcsym;
using fixtures::random_code;
using fixtures::to_mat;

namespace {

const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

oracle::Vec witness_word(const WeightReport& r) {
    const auto w = r.witness->word();
    return oracle::Vec(w.begin(), w.end());
}

struct Oracle {
    oracle::MinWeight with_exclusion;  // over dual minus code
    oracle::MinWeight plain;           // over the dual itself
};

Oracle brute(const Matrix& g, std::size_t n, std::uint32_t q) {
    const auto code = oracle::span(to_mat(g), 2 * n, q);
    const auto dual = oracle::brute_dual(to_mat(g), n, q);
    return {oracle::brute_min_weight(dual, &code), oracle::brute_min_weight(dual, nullptr)};
}

void expect_matches(const WeightReport& r, const oracle::MinWeight& o, const char* what) {
    ASSERT_TRUE(r.minimum.has_value()) << what;
    ASSERT_EQ(*r.minimum, *o.weight) << what;
    ASSERT_EQ(r.excluded_subcode_applied, o.excluded) << what;
    ASSERT_TRUE(r.exhaustive) << what;
    ASSERT_EQ(witness_word(r), o.witness) << what;
    ASSERT_EQ(symp_weight(*r.witness), *r.minimum) << what;
}

}  // namespace

TEST(Weight, EnginesAgreeWithBruteForce) {
    std::mt19937_64 rng(20260101);
    struct Case {
        const Field* f;
        std::size_t n_min, n_max;
        int count;
    };
    int checked = 0, with_exclusion = 0, fallback = 0;
    for (const Case& c : {Case{&F3, 2, 5, 90}, Case{&F3, 6, 6, 10}, Case{&F5, 2, 4, 40}}) {
        for (int t = 0; t < c.count; ++t) {
            const std::size_t n = c.n_min + rng() % (c.n_max - c.n_min + 1);
            const Matrix g = random_code(*c.f, n, rng);
            const Oracle o = brute(g, n, c.f->size());
            const Matrix dual = symplectic_dual(g);
            if (!o.plain.weight) continue;  // full-space code has a zero dual
            ++checked;
            with_exclusion += o.with_exclusion.excluded;
            fallback += !o.with_exclusion.excluded;

            expect_matches(min_symp_weight_message_enum(dual, g), o.with_exclusion, "message excl");
            expect_matches(min_symp_weight_message_enum(dual, std::nullopt), o.plain, "message plain");
            const Matrix checks = apply_omega(g);
            expect_matches(min_symp_weight_low_enum(checks, n, g), o.with_exclusion, "low excl");
            expect_matches(min_symp_weight_low_enum(checks, n, std::nullopt), o.plain, "low plain");
            expect_matches(min_symp_weight(dual, g), o.with_exclusion, "auto");
        }
    }
    EXPECT_GE(checked, 100);
    EXPECT_GT(with_exclusion, 0);
    EXPECT_GT(fallback, 0);
}

TEST(Weight, PartitionAndThreadIndependence) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 30; ++t) {
        const Field& f = t % 2 ? F5 : F3;
        const std::size_t n = t % 2 ? 3 + rng() % 2 : 4 + rng() % 3;
        const Matrix g = random_code(f, n, rng);
        const Matrix dual = symplectic_dual(g);
        if (dual.rows() == 0) continue;
        const WeightReport base = min_symp_weight_message_enum(dual, g);
        for (unsigned threads : {1u, 2u, 4u}) {
            for (unsigned digits : {0u, 1u, 2u, 3u}) {
                EngineOptions opt;
                opt.threads = threads;
                opt.partition_digits = digits;
                const WeightReport r = min_symp_weight_message_enum(dual, g, opt);
                ASSERT_EQ(r.minimum, base.minimum);
                ASSERT_EQ(r.witness->word(), base.witness->word());
                ASSERT_EQ(r.examined, base.examined);
                const WeightReport l = min_symp_weight_low_enum(apply_omega(g), n, g, opt);
                ASSERT_EQ(l.minimum, base.minimum);
                ASSERT_EQ(l.witness->word(), base.witness->word());
            }
        }
    }
}

TEST(Weight, TrivialCodes) {
    // (I|0): every nonzero word has weight >= 1 and e_1 attains it.
    const std::size_t n = 4;
    const Matrix g = hstack(Matrix::identity(F3, n), Matrix(F3, n, n));
    const WeightReport r = min_symp_weight_message_enum(g, std::nullopt);
    EXPECT_EQ(r.minimum, 1u);
    EXPECT_EQ(r.witness->word(), (std::vector<Elem>{0, 0, 0, 1, 0, 0, 0, 0}));

    // Low-enum with cap 0 covers nothing but is exhaustive for that range.
    const WeightReport z = min_symp_weight_low_enum(apply_omega(g), 0, std::nullopt);
    EXPECT_FALSE(z.minimum.has_value());
    EXPECT_TRUE(z.exhaustive);
    EXPECT_THROW(min_symp_weight_low_enum(apply_omega(g), n + 1, std::nullopt), std::invalid_argument);
}

TEST(Weight, WitnessPrefersFirstCoordinates) {
    // Ties go to the interleaved-lexicographic minimum, so the witness has
    // its support at the highest index when weights tie.
    const Matrix g = Matrix::identity(F5, 6);
    const WeightReport r = min_symp_weight_message_enum(g, std::nullopt);
    EXPECT_EQ(r.minimum, 1u);
    EXPECT_EQ(r.witness->word(), (std::vector<Elem>{0, 0, 0, 0, 0, 1}));
    const WeightReport l = min_symp_weight_low_enum(Matrix(F5, 0, 6), 3, std::nullopt);
    EXPECT_EQ(l.witness->word(), r.witness->word());
}

TEST(Weight, BudgetExceededNamesAlternative) {
    EngineOptions opt;
    opt.message_budget = 100;
    const Matrix g = Matrix::identity(F3, 10);
    try {
        min_symp_weight_message_enum(g, std::nullopt, opt);
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("min_symp_weight_low_enum"), std::string::npos);
    }
    EXPECT_THROW(min_hamming_weight_message_enum(g, 100), BudgetExceeded);
}

TEST(Weight, LowEnumCapBelowMinimum) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 4 + rng() % 3;
        const Matrix g = random_code(F3, n, rng);
        const Matrix dual = symplectic_dual(g);
        if (dual.rows() == 0) continue;
        const WeightReport full = min_symp_weight_message_enum(dual, g);
        const std::size_t d = *full.minimum;
        const WeightReport below = min_symp_weight_low_enum(apply_omega(g), d - 1, g);
        EXPECT_FALSE(below.minimum.has_value());
        EXPECT_TRUE(below.exhaustive);
        EXPECT_EQ(below.lower_bound, d);
        const WeightReport at = min_symp_weight_low_enum(apply_omega(g), d, g);
        EXPECT_EQ(at.minimum, d);
    }
}

TEST(Weight, LowEnumCounts) {
    EXPECT_DOUBLE_EQ(low_enum_vectors_at_weight(5, 3, 1), 5.0 * 8 / 2);
    EXPECT_DOUBLE_EQ(low_enum_vectors_at_weight(13, 3, 4), 715.0 * 4096 / 2);
    // Exhausting cap w examines every normalized word of weight <= w exactly once.
    const std::size_t n = 5;
    const WeightReport r = min_symp_weight_low_enum(Matrix::identity(F3, 2 * n), 3, std::nullopt);
    EXPECT_FALSE(r.minimum.has_value());
}

TEST(Weight, RandomProbeIsUpperBound) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 3 + rng() % 4;
        const Matrix g = random_code(F3, n, rng);
        const Matrix dual = symplectic_dual(g);
        if (dual.rows() == 0) continue;
        const WeightReport exact = min_symp_weight_message_enum(dual, g);
        ProbeOptions po;
        po.samples = 2000;
        const WeightReport p = random_probe(dual, g, po);
        EXPECT_FALSE(p.exhaustive);
        EXPECT_EQ(p.method, WeightMethod::kRandomProbe);
        ASSERT_TRUE(p.minimum.has_value());
        EXPECT_GE(*p.minimum, *exact.minimum);
        EXPECT_EQ(symp_weight(*p.witness), *p.minimum);
        EXPECT_EQ(random_probe(dual, g, po).witness->word(), p.witness->word());
    }
}

TEST(Weight, AutoModeFallsBackToLowEnum) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 5 + rng() % 3;
        const Matrix g = random_code(F3, n, rng);
        const Matrix dual = symplectic_dual(g);
        if (dual.rows() == 0) continue;
        const WeightReport exact = min_symp_weight_message_enum(dual, g);
        DistanceOptions opt;
        opt.engine.message_budget = 1;
        opt.probe.samples = 500;
        const WeightReport r = min_symp_weight(dual, g, opt);
        EXPECT_EQ(r.method, WeightMethod::kLowWeightEnum);
        EXPECT_TRUE(r.exhaustive);
        EXPECT_EQ(r.minimum, exact.minimum);
        EXPECT_EQ(r.witness->word(), exact.witness->word());
    }
}

TEST(Weight, AutoModeReportsLowerBoundWhenBudgetIsTight) {
    std::mt19937_64 rng(11);
    int seen = 0;
    for (int t = 0; t < 60 && seen < 5; ++t) {
        const std::size_t n = 6;
        const Matrix g = random_code(F3, n, rng);
        const Matrix dual = symplectic_dual(g);
        if (dual.rows() == 0) continue;
        const WeightReport exact = min_symp_weight_message_enum(dual, g);
        if (*exact.minimum < 3) continue;
        ++seen;
        DistanceOptions opt;
        opt.engine.message_budget = 1;
        opt.probe.samples = 200;
        opt.low_enum_budget = n * (3 + 1);  // room for weight 1 only
        const WeightReport r = min_symp_weight(dual, g, opt);
        EXPECT_FALSE(r.exhaustive);
        EXPECT_EQ(r.lower_bound, 2u);
        ASSERT_TRUE(r.minimum.has_value());
        EXPECT_GE(*r.minimum, *exact.minimum);
    }
    EXPECT_GT(seen, 0);
}

TEST(Weight, HammingAgainstOracle) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 4;
        const Field& f = t % 2 ? F5 : F3;
        const Matrix g = random_code(f, n, rng);
        const std::size_t expect = oracle::brute_hamming(to_mat(g), 2 * n, f.size());
        if (expect > 2 * n) {
            EXPECT_THROW(min_hamming_weight_message_enum(g, 1'000'000), std::invalid_argument);
            continue;
        }
        const HammingReport h = min_hamming_weight_message_enum(g, 1'000'000);
        ASSERT_EQ(h.minimum, expect);
        ASSERT_EQ(hamming_weight(h.witness), expect);
        ASSERT_TRUE(rowspace_contains(g, h.witness));
        ASSERT_EQ(min_hamming_weight_message_enum(g, 1'000'000, 3).minimum, expect);
    }
}
