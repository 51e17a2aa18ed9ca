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

#include "qcsym/qc_code.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcsym/symplectic.hpp"
#include "qcsym/weight.hpp"

namespace qcsym {

namespace {

void require_same_ring(const RingElem& a, const RingElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("generators live in rings of different length");
    if (!(a.field() == b.field())) throw std::invalid_argument("generators over different fields");
}

Poly cofactor(std::size_t n, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial does not divide x^n-1");
    const Poly xn = Poly::x_pow_minus_one(g.field(), n);
    auto [q, r] = Poly::divmod(xn, g);
    if (!r.is_zero()) throw std::invalid_argument("g(x) = " + g.to_string() + " does not divide x^" + std::to_string(n) + "-1");
    // h is taken with g monic so that g h = x^n - 1 exactly.
    return q.scaled(g.leading());
}

// a1 b̄2 - b1 ā2, the polynomial form of A1 B2^t - B1 A2^t.
RingElem cross(const RingElem& a1, const RingElem& b1, const RingElem& a2, const RingElem& b2) {
    return a1 * b2.transpose() - b1 * a2.transpose();
}

RingElem cross(const RingElem& a, const RingElem& b) { return cross(a, b, a, b); }

bool symmetric_product(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return a * b.transpose() == c * d.transpose();
}

}  // namespace

OneGenQc::OneGenQc(RingElem a, RingElem b)
    : a_(std::move(a)), b_(std::move(b)), g_(a_.field(), 0, 0) {
    require_same_ring(a_, b_);
    g_ = hstack(circulant(a_), circulant(b_));
}

OneGenQc OneGenQc::from_factors(std::size_t n, const Poly& g1, const Poly& r1, const Poly& g2, const Poly& r2) {
    Poly h1 = cofactor(n, g1);
    Poly h2 = cofactor(n, g2);
    OneGenQc c(RingElem(n, r1 * g1), RingElem(n, r2 * g2));
    c.factors_ = OneGenFactors{g1, r1, std::move(h1), g2, r2, std::move(h2)};
    return c;
}

Matrix onegen_generator_matrix(const OneGenQc& c) { return c.generator_matrix(); }

Poly parity_check_polynomial(const OneGenQc& c) {
    const Poly xn = Poly::x_pow_minus_one(c.field(), c.n());
    const Poly d = gcd(gcd(xn, c.a().poly()), c.b().poly());
    return xn / d;
}

std::size_t onegen_dim_gcd(const OneGenQc& c) {
    const Poly xn = Poly::x_pow_minus_one(c.field(), c.n());
    const Poly d = gcd(gcd(xn, c.a().poly()), c.b().poly());
    return c.n() - d.degree_or_zero();
}

std::string DimFromH::diagnostic() const {
    if (applicable) return "deg(lcm(h1,h2)) = " + std::to_string(lcm_degree);
    return "gcd(r_i, h_i) != 1: deg(lcm(h1,h2)) = " + std::to_string(lcm_degree) + " but rank(G) = " +
           std::to_string(rank);
}

DimFromH onegen_dim_h(const OneGenQc& c) {
    if (!c.factors()) throw std::invalid_argument("dimension from h needs the factored form (g_i, r_i)");
    const OneGenFactors& f = *c.factors();
    DimFromH out;
    out.lcm_degree = lcm(f.h1, f.h2).degree_or_zero();
    out.rank = rank(c.generator_matrix());
    auto coprime = [](const Poly& r, const Poly& h) { return !r.is_zero() && gcd(r, h).degree_or_zero() == 0; };
    out.applicable = coprime(f.r1, f.h1) && coprime(f.r2, f.h2);
    return out;
}

bool onegen_selforth_matrix(const OneGenQc& c) {
    const Matrix a = circulant(c.a());
    const Matrix b = circulant(c.b());
    return symmetric_product(a, b, b, a);
}

bool onegen_selforth_poly(const OneGenQc& c) { return cross(c.a(), c.b()).is_zero(); }

TwoGenQc::TwoGenQc(RingElem a1, RingElem b1, RingElem a2, RingElem b2)
    : a1_(std::move(a1)), b1_(std::move(b1)), a2_(std::move(a2)), b2_(std::move(b2)), g_(a1_.field(), 0, 0) {
    require_same_ring(a1_, b1_);
    require_same_ring(a1_, a2_);
    require_same_ring(a1_, b2_);
    g_ = vstack(hstack(circulant(a1_), circulant(b1_)), hstack(circulant(a2_), circulant(b2_)));
}

TwoGenQc TwoGenQc::from_factors(std::size_t n, const std::array<Poly, 4>& g, const std::array<Poly, 4>& t) {
    for (const auto& gi : g) cofactor(n, gi);
    TwoGenQc c(RingElem(n, t[0] * g[0]), RingElem(n, t[1] * g[1]), RingElem(n, t[2] * g[2]), RingElem(n, t[3] * g[3]));
    c.factors_ = TwoGenFactors{g, t};
    return c;
}

Matrix twogen_generator_matrix(const TwoGenQc& c) { return c.generator_matrix(); }

TwoGenDim twogen_dim(const TwoGenQc& c) {
    const Matrix& g = c.generator_matrix();
    const Matrix g1 = g.row_slice(0, c.n());
    const Matrix g2 = g.row_slice(c.n(), 2 * c.n());
    TwoGenDim d;
    d.rank_g1 = rank(g1);
    d.rank_g2 = rank(g2);
    d.intersection = rowspace_intersection_dim(g1, g2);
    d.dim = d.rank_g1 + d.rank_g2 - d.intersection;
    return d;
}

bool twogen_selforth_matrix(const TwoGenQc& c) {
    const Matrix a1 = circulant(c.a1()), b1 = circulant(c.b1());
    const Matrix a2 = circulant(c.a2()), b2 = circulant(c.b2());
    return symmetric_product(a1, b1, b1, a1) && symmetric_product(a2, b2, b2, a2) && symmetric_product(a1, b2, b1, a2);
}

bool twogen_selforth_poly(const TwoGenQc& c) {
    return cross(c.a1(), c.b1()).is_zero() && cross(c.a2(), c.b2()).is_zero() && cross(c.a1(), c.b1(), c.a2(), c.b2()).is_zero();
}

Matrix ParityBlocks::matrix() const {
    return vstack(hstack(circulant(p1), circulant(q1)), hstack(circulant(p2), circulant(q2)));
}

ParityReport parity_blocks_check(const TwoGenQc& c, const ParityBlocks& h) {
    require_same_ring(c.a1(), h.p1);
    require_same_ring(h.p1, h.q1);
    require_same_ring(h.p1, h.p2);
    require_same_ring(h.p1, h.q2);
    const Matrix a[2] = {circulant(c.a1()), circulant(c.a2())};
    const Matrix b[2] = {circulant(c.b1()), circulant(c.b2())};
    const Matrix p[2] = {circulant(h.p1), circulant(h.p2)};
    const Matrix q[2] = {circulant(h.q1), circulant(h.q2)};
    ParityReport r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.equations[2 * i + j] = symmetric_product(a[i], q[j], b[i], p[j]);
    const Matrix hm = h.matrix();
    r.g_omega_h_zero = (apply_omega(c.generator_matrix()) * hm.transpose()).is_zero();
    r.rank_g = rank(c.generator_matrix());
    r.rank_h = rank(hm);
    r.rank_sum_is_2n = r.rank_g + r.rank_h == 2 * c.n();
    return r;
}

namespace {

void require_dual(const TwoGenQc& c, const ParityBlocks& h) {
    if (!parity_blocks_check(c, h).generates_dual())
        throw std::invalid_argument("H does not generate the symplectic dual");
}

}  // namespace

bool twogen_dualcontaining_matrix(const TwoGenQc& c, const ParityBlocks& h) {
    require_dual(c, h);
    const Matrix p1 = circulant(h.p1), q1 = circulant(h.q1);
    const Matrix p2 = circulant(h.p2), q2 = circulant(h.q2);
    return symmetric_product(p1, q1, q1, p1) && symmetric_product(p2, q2, q2, p2) && symmetric_product(p1, q2, q1, p2);
}

bool twogen_dualcontaining_poly(const TwoGenQc& c, const ParityBlocks& h) {
    require_dual(c, h);
    return cross(h.p1, h.q1).is_zero() && cross(h.p2, h.q2).is_zero() && cross(h.p1, h.q1, h.p2, h.q2).is_zero();
}

ParityBlocks dual_parity_blocks(const TwoGenQc& c) {
    const std::size_t n = c.n();
    const Field& f = c.field();
    const Poly xn = Poly::x_pow_minus_one(f, n);
    const Matrix dual = symplectic_dual(c.generator_matrix());

    // Rows of the F_q[x]-module generated by the dual words and (x^n-1) F_q[x]^2.
    std::vector<std::array<Poly, 2>> rows;
    for (std::size_t r = 0; r < dual.rows(); ++r) {
        const auto w = dual.row(r);
        rows.push_back({Poly(f, std::vector<Elem>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n))),
                        Poly(f, std::vector<Elem>(w.begin() + static_cast<std::ptrdiff_t>(n), w.end()))});
    }
    rows.push_back({xn, Poly(f)});
    rows.push_back({Poly(f), xn});

    // Euclid down one column; returns the surviving pivot row (or a zero row).
    auto eliminate = [&](std::size_t col, std::vector<std::array<Poly, 2>>& pool) {
        while (true) {
            std::size_t piv = pool.size();
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (pool[i][col].is_zero()) continue;
                if (piv == pool.size() || *pool[i][col].degree() < *pool[piv][col].degree()) piv = i;
            }
            if (piv == pool.size()) return std::array<Poly, 2>{Poly(f), Poly(f)};
            bool changed = false;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (i == piv || pool[i][col].is_zero()) continue;
                const Poly quot = pool[i][col] / pool[piv][col];
                for (int k = 0; k < 2; ++k) pool[i][k] = pool[i][k] - quot * pool[piv][k];
                // Multiples of (0, x^n-1) are in the module, so column 1 may be reduced freely.
                pool[i][1] = pool[i][1] % xn;
                changed = true;
            }
            if (!changed) {
                std::array<Poly, 2> out = pool[piv];
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(piv));
                return out;
            }
        }
    };
    const auto first = eliminate(0, rows);
    const auto second = eliminate(1, rows);
    return ParityBlocks{RingElem(n, first[0]), RingElem(n, first[1]), RingElem::zero(n, f), RingElem(n, second[1])};
}

Poly monic_reciprocal(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0) throw std::invalid_argument("reciprocal needs a nonzero constant term");
    std::vector<Elem> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(c)).monic();
}

ParityBlocks reciprocal_h_parity_blocks(const TwoGenQc& c) {
    if (!c.factors()) throw std::invalid_argument("reciprocal parity blocks need the factored form (g_i, t_i)");
    const std::size_t n = c.n();
    const TwoGenFactors& fac = *c.factors();
    std::array<RingElem, 4> blk{RingElem::zero(n, c.field()), RingElem::zero(n, c.field()),
                                RingElem::zero(n, c.field()), RingElem::zero(n, c.field())};
    for (int i = 0; i < 4; ++i) {
        const Poly h = cofactor(n, fac.g[i]);
        blk[i] = RingElem(n, monic_reciprocal(h)) * RingElem(n, fac.t[i]).transpose();
    }
    return ParityBlocks{blk[0], blk[2], blk[1], blk[3]};
}

std::size_t hamming_min_distance(const Matrix& m, std::uint64_t budget, unsigned threads) {
    return min_hamming_weight_message_enum(m, budget, threads).minimum;
}

}  // namespace qcsym
