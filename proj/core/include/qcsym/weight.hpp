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

#ifndef QCSYM_WEIGHT_HPP
#define QCSYM_WEIGHT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcsym/matrix.hpp"
#include "qcsym/symplectic.hpp"

namespace qcsym {

/// Thrown when an exact enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class WeightMethod { kMessageEnum, kLowWeightEnum, kRandomProbe };
std::string to_string(WeightMethod m);

/// Minimum symplectic weight over rowspace(code) \ rowspace(exclude).
///
/// `minimum` is empty when no qualifying word was found: for low-weight
/// enumeration that means none of weight <= cap. When `exhaustive` is false
/// the minimum is only an upper bound and `lower_bound` is the proven floor.
///
/// Among minimum-weight words the witness is the lexicographically smallest
/// (interleaved order) scalar-canonical one, so it does not depend on how the
/// search space was partitioned.
struct WeightReport {
    std::optional<std::size_t> minimum;
    std::optional<SympVector> witness;
    WeightMethod method = WeightMethod::kMessageEnum;
    bool exhaustive = true;
    bool excluded_subcode_applied = false;
    std::size_t lower_bound = 1;
    std::uint64_t examined = 0;
};

struct EngineOptions {
    /// Upper bound on q^dim for message enumeration.
    std::uint64_t message_budget = 5'000'000'000ULL;
    unsigned threads = 1;
    /// Number of leading message digits fixed per task (0 picks one from threads).
    unsigned partition_digits = 0;
};

/// Exact minimum symplectic weight by walking every message of a
/// row-reduced basis in q-ary Gray-code order.
///
/// When rowspace(exclude) ∩ rowspace(code) is all of rowspace(code) (the
/// self-dual case), exclusion is dropped, the minimum is taken over all
/// nonzero codewords, and excluded_subcode_applied is false.
///
/// Throws BudgetExceeded if q^dim(code) > options.message_budget.
WeightReport min_symp_weight_message_enum(const Matrix& code, const std::optional<Matrix>& exclude,
                                          const EngineOptions& options = {});

/// Exact minimum symplectic weight of {v : parity_checks v^T = 0} minus
/// rowspace(exclude), searching weights 1..weight_cap.
///
/// Every support of size w and every assignment of nonzero pairs is covered,
/// with the pair at the first support index scaled so its first nonzero
/// entry is 1. The last coordinate is resolved by syndrome lookup rather
/// than by trying all of its pairs. Exclusion is tested only on words that
/// already pass the parity checks. Throws std::invalid_argument if
/// weight_cap > n.
WeightReport min_symp_weight_low_enum(const Matrix& parity_checks, std::size_t weight_cap,
                                      const std::optional<Matrix>& exclude, const EngineOptions& options = {});

/// Exact minimum Hamming weight of nonzero codewords of rowspace(code).
/// Throws BudgetExceeded if q^dim(code) > budget.
struct HammingReport {
    std::size_t minimum = 0;
    std::vector<Elem> witness;
    std::uint64_t examined = 0;
};
HammingReport min_hamming_weight_message_enum(const Matrix& code, std::uint64_t budget, unsigned threads = 1);

struct ProbeOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Smallest symplectic weight seen among random words of code \ exclude.
/// Always non-exhaustive; returns an empty minimum if the difference set is empty.
WeightReport random_probe(const Matrix& code, const std::optional<Matrix>& exclude, const ProbeOptions& options);

struct DistanceOptions {
    EngineOptions engine;
    ProbeOptions probe;
    /// Upper bound on the number of enumeration leaves low-weight search may visit.
    std::uint64_t low_enum_budget = 20'000'000'000ULL;
};

/// Engine selection used by the qecc layer and the CLI: message enumeration
/// when q^dim(code) fits the message budget; otherwise a random probe for an
/// upper bound u, then low-weight enumeration up to u (or the largest cap the
/// low-enum budget allows, in which case the result is not exhaustive).
WeightReport min_symp_weight(const Matrix& code, const std::optional<Matrix>& exclude, const DistanceOptions& options = {});

/// Number of words low-weight enumeration covers at exactly weight w
/// (pairs at the first index scaled): C(n, w) (q^2 - 1)^w / (q - 1).
double low_enum_vectors_at_weight(std::size_t n, std::uint32_t q, std::size_t w);

}  // namespace qcsym

#endif  // QCSYM_WEIGHT_HPP
