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

#ifndef QCSYM_QC_CODE_HPP
#define QCSYM_QC_CODE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qcsym/matrix.hpp"
#include "qcsym/poly.hpp"

namespace qcsym {

/// a = r1 g1, b = r2 g2 with g_i h_i = x^n - 1.
struct OneGenFactors {
    Poly g1, r1, h1;
    Poly g2, r2, h2;
};

/// One-generator quasi-cyclic code of length 2n and index 2: the R-span of
/// (a(x), b(x)) in R^2, R = F_q[x]/(x^n - 1).
class OneGenQc {
   public:
    OneGenQc(RingElem a, RingElem b);
    /// Builds (r1 g1, r2 g2). Throws std::invalid_argument unless each g_i divides x^n - 1.
    static OneGenQc from_factors(std::size_t n, const Poly& g1, const Poly& r1, const Poly& g2, const Poly& r2);

    std::size_t n() const { return a_.n(); }
    const Field& field() const { return a_.field(); }
    const RingElem& a() const { return a_; }
    const RingElem& b() const { return b_; }
    const std::optional<OneGenFactors>& factors() const { return factors_; }
    /// (circ(a) | circ(b)).
    const Matrix& generator_matrix() const { return g_; }

   private:
    RingElem a_, b_;
    std::optional<OneGenFactors> factors_;
    Matrix g_;
};

Matrix onegen_generator_matrix(const OneGenQc& c);

/// n - deg gcd(a, b, x^n - 1).
std::size_t onegen_dim_gcd(const OneGenQc& c);

struct DimFromH {
    bool applicable = false;        // gcd(r_i, h_i) = 1 for i = 1, 2
    std::size_t lcm_degree = 0;     // deg lcm(h1, h2), reported either way
    std::size_t rank = 0;           // rank of the generator matrix, for comparison
    std::optional<std::size_t> value() const {
        return applicable ? std::optional<std::size_t>(lcm_degree) : std::nullopt;
    }
    std::string diagnostic() const;
};
/// deg lcm(h1, h2) when both gcd(r_i, h_i) = 1, else inapplicable.
/// Throws std::invalid_argument if c has no factored form.
DimFromH onegen_dim_h(const OneGenQc& c);

/// (x^n - 1) / gcd(a, b, x^n - 1), monic.
Poly parity_check_polynomial(const OneGenQc& c);

/// A B^t = B A^t with A = circ(a), B = circ(b).
bool onegen_selforth_matrix(const OneGenQc& c);
/// a b̄ - b ā = 0 in R.
bool onegen_selforth_poly(const OneGenQc& c);

/// a1 = t1 g1, b1 = t2 g2, a2 = t3 g3, b2 = t4 g4.
struct TwoGenFactors {
    std::array<Poly, 4> g;
    std::array<Poly, 4> t;
};

/// Two-generator QC code: R-span of (a1, b1) and (a2, b2).
class TwoGenQc {
   public:
    TwoGenQc(RingElem a1, RingElem b1, RingElem a2, RingElem b2);
    /// Throws std::invalid_argument unless each g_i divides x^n - 1.
    static TwoGenQc from_factors(std::size_t n, const std::array<Poly, 4>& g, const std::array<Poly, 4>& t);

    std::size_t n() const { return a1_.n(); }
    const Field& field() const { return a1_.field(); }
    const RingElem& a1() const { return a1_; }
    const RingElem& b1() const { return b1_; }
    const RingElem& a2() const { return a2_; }
    const RingElem& b2() const { return b2_; }
    const std::optional<TwoGenFactors>& factors() const { return factors_; }
    /// (A1 B1 // A2 B2), 2n x 2n.
    const Matrix& generator_matrix() const { return g_; }

   private:
    RingElem a1_, b1_, a2_, b2_;
    std::optional<TwoGenFactors> factors_;
    Matrix g_;
};

Matrix twogen_generator_matrix(const TwoGenQc& c);

struct TwoGenDim {
    std::size_t rank_g1 = 0;
    std::size_t rank_g2 = 0;
    std::size_t intersection = 0;
    std::size_t dim = 0;  // rank_g1 + rank_g2 - intersection
};
TwoGenDim twogen_dim(const TwoGenQc& c);

/// A1 B1^t = B1 A1^t, A2 B2^t = B2 A2^t and A1 B2^t = B1 A2^t.
bool twogen_selforth_matrix(const TwoGenQc& c);
/// The same three conditions as congruences in R.
bool twogen_selforth_poly(const TwoGenQc& c);

/// Circulant generators of H = (P1 Q1 // P2 Q2).
struct ParityBlocks {
    RingElem p1, q1, p2, q2;
    Matrix matrix() const;
};

struct ParityReport {
    /// A_i Q_j^t = B_i P_j^t for (i, j) = (1,1), (1,2), (2,1), (2,2).
    std::array<bool, 4> equations{};
    bool g_omega_h_zero = false;
    std::size_t rank_g = 0;
    std::size_t rank_h = 0;
    bool rank_sum_is_2n = false;
    bool all_equations() const { return equations[0] && equations[1] && equations[2] && equations[3]; }
    /// H spans exactly C^{⊥s}.
    bool generates_dual() const { return g_omega_h_zero && rank_sum_is_2n; }
};
ParityReport parity_blocks_check(const TwoGenQc& c, const ParityBlocks& h);

/// P1 Q1^t = Q1 P1^t, P2 Q2^t = Q2 P2^t and P1 Q2^t = Q1 P2^t.
/// Throws std::invalid_argument("H does not generate the symplectic dual")
/// unless parity_blocks_check(c, h).generates_dual().
bool twogen_dualcontaining_matrix(const TwoGenQc& c, const ParityBlocks& h);
/// p1 q̄1 - q1 p̄1, p2 q̄2 - q2 p̄2, p1 q̄2 - q1 p̄2 all zero in R. Same precondition.
bool twogen_dualcontaining_poly(const TwoGenQc& c, const ParityBlocks& h);

/// Parity blocks spanning C^{⊥s}, read off a Hermite form of the dual as an
/// F_q[x]-module: generators (p1, q1), (0, q2).
ParityBlocks dual_parity_blocks(const TwoGenQc& c);

/// Blocks p_i = g'_i t̄_i (i = 1, 2), q_j = g'_{j+2} t̄_{j+2} (j = 1, 2),
/// where g'_i is the monic reciprocal of h_i = (x^n - 1) / g_i.
/// Throws std::invalid_argument if c has no factored form.
ParityBlocks reciprocal_h_parity_blocks(const TwoGenQc& c);

/// Monic reciprocal x^{deg f} f(1/x) / f(0). Throws std::invalid_argument if f(0) = 0.
Poly monic_reciprocal(const Poly& f);

/// Exact minimum Hamming distance of rowspace(m) by message enumeration.
/// Throws BudgetExceeded if q^rank(m) > budget.
std::size_t hamming_min_distance(const Matrix& m, std::uint64_t budget = 1'000'000'000ULL, unsigned threads = 1);

}  // namespace qcsym

#endif  // QCSYM_QC_CODE_HPP
