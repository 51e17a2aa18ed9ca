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

#include "qcsym/qecc.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace qcsym;
using fixtures::random_ring;
using fixtures::random_symmetric;

namespace {

const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

oracle::Mat to_mat(const Matrix& m) {
    oracle::Mat out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
    return out;
}

OneGenQc random_selforth(std::size_t n, const Field& f, std::mt19937_64& rng) {
    const RingElem a = random_ring(n, f, rng);
    return OneGenQc(a, a * random_symmetric(n, f, rng));
}

}  // namespace

TEST(Qecc, RecordCodeN13) {
    const OneGenQc c = fixtures::load_code("f3_n13_k6").onegen();
    const QuantumParams p = qecc_from_selforth(c);
    EXPECT_EQ(p.to_string(), "[[13,6,4]]_3");
    EXPECT_EQ(p.classical_length, 26u);
    EXPECT_EQ(p.classical_dim, 7u);
    EXPECT_EQ(p.classical_distance, 12u);
    EXPECT_TRUE(p.exhaustive);
    EXPECT_TRUE(p.excluded_subcode_applied);
    EXPECT_EQ(p.direction, Direction::kSelfOrthogonal);
    ASSERT_TRUE(p.witness.has_value());
    EXPECT_EQ(symp_weight(*p.witness), 4u);
    EXPECT_FALSE(rowspace_contains(c.generator_matrix(), p.witness->word()));
    EXPECT_EQ(symp_inner(F3, p.witness->word(), c.generator_matrix().row(0)), 0u);

    const QuantumParams l = lengthen(p);
    EXPECT_EQ(l.to_string(), "[[14,6,4]]_3");
    EXPECT_TRUE(l.lengthened);
}

TEST(Qecc, RecordCodeN16AndLengthening) {
    const OneGenQc c = fixtures::load_code("f3_n16_k6").onegen();
    const QuantumParams p = qecc_from_selforth(c);
    EXPECT_EQ(p.to_string(), "[[16,6,5]]_3");
    EXPECT_EQ(p.classical_dim, 10u);
    EXPECT_EQ(p.classical_distance, 12u);
    EXPECT_TRUE(p.exhaustive);
    EXPECT_EQ(lengthen(p).to_string(), "[[17,6,5]]_3");
}

TEST(Qecc, SelfDualRecordCodeF5) {
    const OneGenQc c = fixtures::load_code("f5_n11_selfdual").onegen();
    QeccOptions opt;
    opt.compute_hamming = false;  // the Hamming distance is covered by the acceptance run
    const QuantumParams p = qecc_from_selforth(c, opt);
    EXPECT_EQ(p.to_string(), "[[11,0,6]]_5");
    EXPECT_EQ(p.classical_dim, 11u);
    EXPECT_FALSE(p.excluded_subcode_applied);
    EXPECT_TRUE(p.exhaustive);
    try {
        lengthen(p);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "lengthening requires k > 0");
    }
}

TEST(Qecc, FullSpaceIsTrivialCode) {
    for (std::size_t n : {2u, 3u, 5u}) {
        const QuantumParams p = qecc_from_dualcontaining(Matrix::identity(F3, 2 * n));
        EXPECT_EQ(p.k, n);
        EXPECT_EQ(p.d, 1u);
        EXPECT_EQ(p.direction, Direction::kDualContaining);
    }
}

TEST(Qecc, RejectsWrongDirection) {
    const OneGenQc c(RingElem::one(3, F3), RingElem(3, Poly::parse(F3, "x")));
    EXPECT_FALSE(onegen_selforth_poly(c));
    try {
        qecc_from_selforth(c);
        FAIL();
    } catch (const VerificationError& e) {
        EXPECT_FALSE(e.criterion().empty());
    }
    EXPECT_THROW(qecc_from_selforth(c.generator_matrix()), VerificationError);
    // (I|0) with n = 4 is self-dual; dropping a row leaves it self-orthogonal but not dual-containing.
    const Matrix g = hstack(Matrix::identity(F3, 4), Matrix(F3, 4, 4)).row_slice(0, 3);
    EXPECT_THROW(qecc_from_dualcontaining(g), VerificationError);
    EXPECT_NO_THROW(qecc_from_selforth(g));
}

TEST(Qecc, SelfDualSameFromBothDirections) {
    const Matrix g = hstack(Matrix::identity(F5, 4), Matrix(F5, 4, 4));
    const QuantumParams a = qecc_from_selforth(g), b = qecc_from_dualcontaining(g);
    EXPECT_EQ(a.to_string(), "[[4,0,1]]_5");
    EXPECT_EQ(a.to_string(), b.to_string());
    EXPECT_FALSE(a.excluded_subcode_applied);
    EXPECT_FALSE(b.excluded_subcode_applied);
}

TEST(Qecc, RoundTripSelfOrthogonalAndDual) {
    std::mt19937_64 rng(515);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const Field& f = t % 3 ? F3 : F5;
        const std::size_t n = 2 + rng() % (f.size() == 3 ? 6 : 4);
        const OneGenQc c = random_selforth(n, f, rng);
        if (rank(c.generator_matrix()) == 0) continue;
        const QuantumParams so = qecc_from_selforth(c);
        const QuantumParams dc = qecc_from_dualcontaining(symplectic_dual(c.generator_matrix()));
        ASSERT_EQ(so.n, dc.n);
        ASSERT_EQ(so.k, dc.k);
        ASSERT_EQ(so.d, dc.d);
        ASSERT_EQ(so.witness->word(), dc.witness->word());
        ASSERT_EQ(so.k, n - rank(c.generator_matrix()));
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(Qecc, DistanceAgainstBruteForce) {
    std::mt19937_64 rng(616);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + rng() % 4;
        const OneGenQc c = random_selforth(n, F3, rng);
        const Matrix g = c.generator_matrix();
        if (rank(g) == 0) continue;
        const auto code = oracle::span(to_mat(g), 2 * n, 3);
        const auto dual = oracle::brute_dual(to_mat(g), n, 3);
        const oracle::MinWeight o = oracle::brute_min_weight(dual, &code);
        const QuantumParams p = qecc_from_selforth(c);
        ASSERT_EQ(p.d, *o.weight);
        ASSERT_EQ(p.excluded_subcode_applied, o.excluded);
        ASSERT_EQ(*p.classical_distance, oracle::brute_hamming(to_mat(g), 2 * n, 3));
    }
}

TEST(Qecc, TwoGeneratorDualContaining) {
    const TwoGenQc c = fixtures::load_code("f3_n15_twogen").twogen();
    QeccOptions opt;
    opt.compute_hamming = false;
    const QuantumParams p = qecc_from_dualcontaining(c, opt);
    const std::size_t kc = rank(c.generator_matrix());
    EXPECT_EQ(kc, 21u);
    EXPECT_EQ(p.k, kc - 15);
    EXPECT_EQ(p.direction, Direction::kDualContaining);
    ASSERT_TRUE(p.witness.has_value());
    EXPECT_EQ(symp_weight(*p.witness), p.d);
    EXPECT_TRUE(rowspace_contains(c.generator_matrix(), p.witness->word()));
    EXPECT_FALSE(rowspace_contains(symplectic_dual(c.generator_matrix()), p.witness->word()));
    // Cross-check through the self-orthogonal dual.
    const QuantumParams back = qecc_from_selforth(symplectic_dual(c.generator_matrix()), opt);
    EXPECT_EQ(back.k, p.k);
    EXPECT_EQ(back.d, p.d);
}

TEST(Qecc, ParamsString) {
    QuantumParams p;
    p.q = 3;
    p.n = 13;
    p.k = 6;
    p.d = 4;
    EXPECT_EQ(p.to_string(), "[[13,6,4]]_3");
    EXPECT_EQ(to_string(Direction::kSelfOrthogonal), "self-orthogonal");
    EXPECT_EQ(to_string(Direction::kDualContaining), "dual-containing");
}
