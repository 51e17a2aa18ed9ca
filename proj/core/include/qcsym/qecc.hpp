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

#ifndef QCSYM_QECC_HPP
#define QCSYM_QECC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qcsym/matrix.hpp"
#include "qcsym/qc_code.hpp"
#include "qcsym/weight.hpp"

namespace qcsym {

/// A code failed the orthogonality check its construction requires.
class VerificationError : public std::runtime_error {
   public:
    VerificationError(std::string criterion, const std::string& what)
        : std::runtime_error(what), criterion_(std::move(criterion)) {}
    const std::string& criterion() const { return criterion_; }

   private:
    std::string criterion_;
};

/// Broken internal invariant (for example, criteria that should agree do not).
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

enum class Direction { kSelfOrthogonal, kDualContaining };
std::string to_string(Direction d);

/// [[n, k, d]]_q together with where it came from.
struct QuantumParams {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    Direction direction = Direction::kSelfOrthogonal;
    /// False when d is only an upper bound (see distance_lower_bound).
    bool exhaustive = true;
    std::size_t distance_lower_bound = 0;
    /// The distance was taken over the whole dual because the set difference was empty.
    bool excluded_subcode_applied = true;
    /// Obtained by lengthening; no classical code object stands behind it.
    bool lengthened = false;

    // Classical parameters [2n, k_c, d_H] of the underlying code.
    std::size_t classical_length = 0;
    std::size_t classical_dim = 0;
    std::optional<std::size_t> classical_distance;
    std::optional<SympVector> witness;

    /// "[[n,k,d]]_q".
    std::string to_string() const;
};

struct QeccOptions {
    DistanceOptions distance;
    /// Compute the classical Hamming distance when q^k_c is at most this.
    std::uint64_t hamming_budget = 1'000'000'000ULL;
    bool compute_hamming = true;
};

/// [[n, n - k_c, d_s]] with d_s over C^{⊥s} \ C. Throws VerificationError
/// if G Ω G^t != 0.
QuantumParams qecc_from_selforth(const Matrix& g, const QeccOptions& options = {});
/// For QC inputs the matrix and polynomial criteria are checked too, and must
/// agree with G Ω G^t = 0 (InternalError otherwise).
QuantumParams qecc_from_selforth(const OneGenQc& c, const QeccOptions& options = {});
QuantumParams qecc_from_selforth(const TwoGenQc& c, const QeccOptions& options = {});

/// [[n, k_c - n, d_s]] with d_s over C \ C^{⊥s}. Throws VerificationError
/// unless every row of the symplectic dual lies in C.
QuantumParams qecc_from_dualcontaining(const Matrix& g, const QeccOptions& options = {});
QuantumParams qecc_from_dualcontaining(const OneGenQc& c, const QeccOptions& options = {});
QuantumParams qecc_from_dualcontaining(const TwoGenQc& c, const QeccOptions& options = {});

/// [[n, k, d]] -> [[n+1, k, d]]. Throws std::invalid_argument if k = 0.
QuantumParams lengthen(const QuantumParams& p);

}  // namespace qcsym

#endif  // QCSYM_QECC_HPP
