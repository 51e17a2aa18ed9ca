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

#include <cmath>

#include "qcsym/symplectic.hpp"

namespace qcsym {

std::string to_string(Direction d) {
    return d == Direction::kSelfOrthogonal ? "self-orthogonal" : "dual-containing";
}

std::string QuantumParams::to_string() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]_" + std::to_string(q);
}

namespace {

bool fits(std::uint32_t q, std::size_t k, std::uint64_t budget) {
    return static_cast<double>(k) * std::log(static_cast<double>(q)) <= std::log(static_cast<double>(budget)) + 1e-9;
}

QuantumParams finish(const Matrix& g, std::size_t k_c, Direction dir, const Matrix& code, const Matrix& exclude,
                     const QeccOptions& options) {
    const std::size_t n = g.cols() / 2;
    QuantumParams p;
    p.q = g.field().size();
    p.n = n;
    p.direction = dir;
    p.classical_length = 2 * n;
    p.classical_dim = k_c;
    if (dir == Direction::kSelfOrthogonal) {
        if (k_c > n) throw InternalError("self-orthogonal code of dimension " + std::to_string(k_c) + " > n");
        p.k = n - k_c;
    } else {
        if (k_c < n) throw InternalError("dual-containing code of dimension " + std::to_string(k_c) + " < n");
        p.k = k_c - n;
    }

    const WeightReport w = min_symp_weight(code, exclude, options.distance);
    if (!w.minimum) throw InternalError("no nonzero codeword found for the distance");
    p.d = *w.minimum;
    p.exhaustive = w.exhaustive;
    p.distance_lower_bound = w.exhaustive ? p.d : w.lower_bound;
    p.excluded_subcode_applied = w.excluded_subcode_applied;
    p.witness = w.witness;

    if (options.compute_hamming && k_c > 0 && fits(p.q, k_c, options.hamming_budget))
        p.classical_distance = hamming_min_distance(g, options.hamming_budget, options.distance.engine.threads);
    return p;
}

}  // namespace

QuantumParams qecc_from_selforth(const Matrix& g, const QeccOptions& options) {
    if (g.cols() % 2 != 0) throw std::invalid_argument("symplectic code needs an even length");
    if (!is_symplectic_self_orthogonal(g))
        throw VerificationError("G*Omega*G^t = 0", "code is not symplectic self-orthogonal: G*Omega*G^t != 0");
    const Matrix basis = row_basis(g);
    return finish(g, basis.rows(), Direction::kSelfOrthogonal, symplectic_dual(basis), basis, options);
}

QuantumParams qecc_from_dualcontaining(const Matrix& g, const QeccOptions& options) {
    if (g.cols() % 2 != 0) throw std::invalid_argument("symplectic code needs an even length");
    const Matrix basis = row_basis(g);
    const Matrix dual = symplectic_dual(basis);
    const RowSpace space(basis);
    for (std::size_t r = 0; r < dual.rows(); ++r)
        if (!space.contains(dual.row(r)))
            throw VerificationError("C^perp_s in C",
                                    "code is not symplectic dual-containing: a dual basis row lies outside C");
    return finish(g, basis.rows(), Direction::kDualContaining, basis, dual, options);
}

QuantumParams qecc_from_selforth(const OneGenQc& c, const QeccOptions& options) {
    const bool m = onegen_selforth_matrix(c);
    const bool p = onegen_selforth_poly(c);
    const bool direct = is_symplectic_self_orthogonal(c.generator_matrix());
    if (m != p || m != direct) throw InternalError("self-orthogonality criteria disagree");
    if (!p) throw VerificationError("a*conj(b) - b*conj(a) = 0 mod x^n-1", "code is not symplectic self-orthogonal: AB^t != BA^t");
    return qecc_from_selforth(c.generator_matrix(), options);
}

QuantumParams qecc_from_selforth(const TwoGenQc& c, const QeccOptions& options) {
    const bool m = twogen_selforth_matrix(c);
    const bool p = twogen_selforth_poly(c);
    const bool direct = is_symplectic_self_orthogonal(c.generator_matrix());
    if (m != p || m != direct) throw InternalError("self-orthogonality criteria disagree");
    if (!p) throw VerificationError("A_iB_j^t = B_iA_j^t", "code is not symplectic self-orthogonal: a block condition fails");
    return qecc_from_selforth(c.generator_matrix(), options);
}

QuantumParams qecc_from_dualcontaining(const OneGenQc& c, const QeccOptions& options) {
    return qecc_from_dualcontaining(c.generator_matrix(), options);
}

QuantumParams qecc_from_dualcontaining(const TwoGenQc& c, const QeccOptions& options) {
    const ParityBlocks h = dual_parity_blocks(c);
    const bool m = twogen_dualcontaining_matrix(c, h);
    const bool p = twogen_dualcontaining_poly(c, h);
    const bool direct = is_symplectic_dual_containing(c.generator_matrix());
    if (m != p || m != direct) throw InternalError("dual-containing criteria disagree");
    if (!p) throw VerificationError("P_iQ_j^t = Q_iP_j^t", "code is not symplectic dual-containing: a block condition fails");
    return qecc_from_dualcontaining(c.generator_matrix(), options);
}

QuantumParams lengthen(const QuantumParams& p) {
    if (p.k == 0) throw std::invalid_argument("lengthening requires k > 0");
    QuantumParams out = p;
    out.n = p.n + 1;
    out.lengthened = true;
    out.witness.reset();
    return out;
}

}  // namespace qcsym
