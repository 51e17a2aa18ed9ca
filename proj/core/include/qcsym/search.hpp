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

#ifndef QCSYM_SEARCH_HPP
#define QCSYM_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcsym/poly.hpp"
#include "qcsym/qecc.hpp"

namespace qcsym {

/// All monic divisors of x^n - 1, sorted by poly_less.
/// Throws std::invalid_argument if there would be more than `limit`.
std::vector<Poly> enumerate_divisors(std::size_t n, const Field& field, std::size_t limit = 1'000'000);

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed of the RNG stream for one trial; independent of thread scheduling.
std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial_index);

struct GSelector {
    enum class Kind { kExplicit, kAllDivisors, kDegree };
    Kind kind = Kind::kExplicit;
    std::optional<Poly> g;  // kExplicit
    std::size_t degree = 0; // kDegree
};

/// A fixed (g, r1, r2) evaluated ahead of the random trials.
struct InjectedTrial {
    Poly g;
    Poly r1;
    Poly r2;
};

struct SearchConfig {
    Field field = Field::prime(2);
    std::size_t n = 0;
    GSelector g_selector;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    /// Keep only codes whose quantum k equals this.
    std::optional<std::size_t> target_k;
    /// Discard codes with d_s <= distance_floor.
    std::size_t distance_floor = 0;
    std::uint64_t probe_samples = 10'000;
    DistanceOptions distance;
    std::uint64_t hamming_budget = 1'000'000'000ULL;
    unsigned threads = 1;
    std::vector<InjectedTrial> injected;
};

struct SearchHit {
    std::uint64_t trial_index = 0;
    bool injected = false;
    Poly g;
    Poly r1;
    Poly r2;
    QuantumParams params;
};

struct SearchStats {
    std::uint64_t trials = 0;
    std::uint64_t self_orthogonal = 0;
    std::uint64_t dimension_ok = 0;
    std::uint64_t probe_ok = 0;
    std::uint64_t hits = 0;
};

struct SearchTimings {
    double self_orthogonality_s = 0;
    double dimension_s = 0;
    double probe_s = 0;
    double exact_s = 0;
    double total_s = 0;
};

struct SearchRecord {
    SearchConfig config;
    std::vector<SearchHit> hits;  // sorted by trial_index
    SearchStats stats;
    SearchTimings timings;  // wall clock; not part of the reproducible output
};

/// Trial i draws r1, r2 uniformly from R with the stream trial_stream_seed(seed, i),
/// forms (r1 g, r2 g) and runs: polynomial self-orthogonality test, dimension
/// (and target_k), random dual probe, exact distance. Injected trials take
/// indices 0..m-1 and random trials follow. Throws std::invalid_argument if an
/// explicit g does not divide x^n - 1 or no divisor matches the selector.
SearchRecord run_search(const SearchConfig& config);

/// Rebuilds the code from the hit's generators and recomputes everything.
/// Returns true iff the criteria hold and [[n,k,d]] matches.
bool reverify_hit(const SearchHit& hit, const SearchConfig& config);

}  // namespace qcsym

#endif  // QCSYM_SEARCH_HPP
