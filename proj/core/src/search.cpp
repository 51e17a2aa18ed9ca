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

#include "qcsym/search.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <random>

#include "qcsym/parallel.hpp"
#include "qcsym/symplectic.hpp"

namespace qcsym {

std::vector<Poly> enumerate_divisors(std::size_t n, const Field& field, std::size_t limit) {
    const auto factors = factor_xn_minus_1(n, field);
    std::size_t count = 1;
    for (const auto& f : factors) {
        if (count > limit / (f.multiplicity + 1)) throw std::invalid_argument("x^n-1 has more than the allowed number of divisors");
        count *= f.multiplicity + 1;
    }
    if (count > limit) throw std::invalid_argument("x^n-1 has more than the allowed number of divisors");
    std::vector<Poly> out{Poly::constant(field, 1)};
    for (const auto& f : factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * (f.multiplicity + 1));
        for (const auto& d : out) {
            Poly p = d;
            next.push_back(p);
            for (unsigned e = 0; e < f.multiplicity; ++e) {
                p = p * f.poly;
                next.push_back(p);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial_index) {
    return splitmix64(splitmix64(seed) ^ trial_index);
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Poly> candidate_gs(const SearchConfig& cfg) {
    const Poly xn = Poly::x_pow_minus_one(cfg.field, cfg.n);
    std::vector<Poly> gs;
    switch (cfg.g_selector.kind) {
        case GSelector::Kind::kExplicit: {
            if (!cfg.g_selector.g) throw std::invalid_argument("explicit g selector without a polynomial");
            const Poly& g = *cfg.g_selector.g;
            if (g.is_zero() || !divides(g, xn))
                throw std::invalid_argument("g(x) = " + g.to_string() + " does not divide x^" + std::to_string(cfg.n) + "-1");
            gs.push_back(g.monic());
            break;
        }
        case GSelector::Kind::kAllDivisors:
            gs = enumerate_divisors(cfg.n, cfg.field);
            break;
        case GSelector::Kind::kDegree:
            for (auto& d : enumerate_divisors(cfg.n, cfg.field))
                if (d.degree_or_zero() == cfg.g_selector.degree) gs.push_back(std::move(d));
            break;
    }
    // With the shared-g form the quantum k is deg g, so the target prunes g up front.
    if (cfg.target_k && cfg.g_selector.kind != GSelector::Kind::kExplicit)
        std::erase_if(gs, [&](const Poly& g) { return g.degree_or_zero() != *cfg.target_k; });
    if (gs.empty()) throw std::invalid_argument("no divisor of x^n-1 matches the g selector");
    return gs;
}

struct PhaseTimes {
    double so = 0, dim = 0, probe = 0, exact = 0;
};

struct TrialOutcome {
    bool so = false, dim = false, probe = false;
    std::optional<SearchHit> hit;
    PhaseTimes times;
};

Poly random_poly(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::vector<Elem> c(n);
    const std::uint32_t q = f.size();
    for (auto& v : c) v = static_cast<Elem>(rng() % q);
    return Poly(f, std::move(c));
}

TrialOutcome run_trial(const SearchConfig& cfg, std::uint64_t index, const Poly& g, const Poly& r1, const Poly& r2,
                       bool injected, unsigned engine_threads) {
    TrialOutcome out;
    const std::size_t n = cfg.n;

    auto t = Clock::now();
    const OneGenQc code(RingElem(n, r1 * g), RingElem(n, r2 * g));
    out.so = onegen_selforth_poly(code);
    out.times.so = since(t);
    if (!out.so) return out;

    t = Clock::now();
    const std::size_t dim = onegen_dim_gcd(code);
    const std::size_t k = n - dim;
    out.dim = dim > 0 && (!cfg.target_k || k == *cfg.target_k);
    out.times.dim = since(t);
    if (!out.dim) return out;

    t = Clock::now();
    const Matrix& gm = code.generator_matrix();
    const Matrix dual = symplectic_dual(gm);
    ProbeOptions probe_opts{cfg.probe_samples, splitmix64(trial_stream_seed(cfg.seed, index))};
    const WeightReport probe = random_probe(dual, gm, probe_opts);
    out.probe = !probe.minimum || *probe.minimum > cfg.distance_floor;
    out.times.probe = since(t);
    if (!out.probe) return out;

    t = Clock::now();
    QeccOptions opts;
    opts.distance = cfg.distance;
    opts.distance.engine.threads = engine_threads;
    opts.hamming_budget = cfg.hamming_budget;
    QuantumParams p = qecc_from_selforth(code, opts);
    out.times.exact = since(t);
    if (p.d <= cfg.distance_floor) return out;
    out.hit = SearchHit{index, injected, g, r1, r2, std::move(p)};
    return out;
}

}  // namespace

SearchRecord run_search(const SearchConfig& config) {
    const auto start = Clock::now();
    SearchRecord rec;
    rec.config = config;
    if (config.n < 2) throw std::invalid_argument("search needs n >= 2");
    const std::uint64_t injected = config.injected.size();
    const std::uint64_t total = injected + config.trials;
    if (total == 0) return rec;

    const Poly xn = Poly::x_pow_minus_one(config.field, config.n);
    for (const auto& inj : config.injected)
        if (inj.g.is_zero() || !divides(inj.g, xn))
            throw std::invalid_argument("injected g(x) = " + inj.g.to_string() + " does not divide x^n-1");
    const std::vector<Poly> gs = config.trials > 0 ? candidate_gs(config) : std::vector<Poly>{};

    const unsigned threads = std::max(1u, config.threads);
    // Parallelize across trials; a trial's own engines run single-threaded unless there is only one trial.
    const unsigned engine_threads = total == 1 ? threads : 1;
    constexpr std::uint64_t kChunk = 4096;
    std::mutex mu;
    for (std::uint64_t base = 0; base < total; base += kChunk) {
        const std::uint64_t len = std::min(kChunk, total - base);
        std::vector<TrialOutcome> outcomes(len);
        parallel_for(len, threads, [&](std::size_t off) {
            const std::uint64_t index = base + off;
            if (index < injected) {
                const auto& inj = config.injected[index];
                outcomes[off] = run_trial(config, index, inj.g, inj.r1, inj.r2, true, engine_threads);
                return;
            }
            std::mt19937_64 rng(trial_stream_seed(config.seed, index));
            const Poly& g = gs[(index - injected) % gs.size()];
            const Poly r1 = random_poly(config.field, config.n, rng);
            const Poly r2 = random_poly(config.field, config.n, rng);
            outcomes[off] = run_trial(config, index, g, r1, r2, false, engine_threads);
        });
        std::lock_guard lock(mu);
        for (auto& o : outcomes) {
            ++rec.stats.trials;
            rec.stats.self_orthogonal += o.so;
            rec.stats.dimension_ok += o.dim;
            rec.stats.probe_ok += o.probe;
            rec.timings.self_orthogonality_s += o.times.so;
            rec.timings.dimension_s += o.times.dim;
            rec.timings.probe_s += o.times.probe;
            rec.timings.exact_s += o.times.exact;
            if (o.hit) rec.hits.push_back(std::move(*o.hit));
        }
    }
    std::sort(rec.hits.begin(), rec.hits.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.trial_index < b.trial_index; });
    rec.stats.hits = rec.hits.size();
    rec.timings.total_s = since(start);
    return rec;
}

bool reverify_hit(const SearchHit& hit, const SearchConfig& config) {
    const std::size_t n = config.n;
    const Field& f = config.field;
    // Rebuild from coefficient lists so nothing cached in the hit is reused.
    const Poly g(f, std::vector<Elem>(hit.g.coeffs().begin(), hit.g.coeffs().end()));
    const Poly r1(f, std::vector<Elem>(hit.r1.coeffs().begin(), hit.r1.coeffs().end()));
    const Poly r2(f, std::vector<Elem>(hit.r2.coeffs().begin(), hit.r2.coeffs().end()));
    if (!divides(g, Poly::x_pow_minus_one(f, n))) return false;
    const OneGenQc code(RingElem(n, r1 * g), RingElem(n, r2 * g));
    const Matrix& gm = code.generator_matrix();
    if (!onegen_selforth_matrix(code) || !onegen_selforth_poly(code) || !is_symplectic_self_orthogonal(gm)) return false;
    if (rank(gm) != onegen_dim_gcd(code) || rank(gm) != hit.params.classical_dim) return false;

    QeccOptions opts;
    opts.distance = config.distance;
    opts.hamming_budget = config.hamming_budget;
    opts.compute_hamming = hit.params.classical_distance.has_value();
    const QuantumParams p = qecc_from_selforth(gm, opts);
    if (p.n != hit.params.n || p.k != hit.params.k || p.d != hit.params.d || p.exhaustive != hit.params.exhaustive)
        return false;
    if (p.classical_distance != hit.params.classical_distance) return false;
    if (!p.witness) return false;
    // The witness must lie in the dual, outside the code, with the stated weight.
    const auto w = p.witness->word();
    if (symp_weight(w) != p.d) return false;
    const Matrix wm(f, 1, 2 * n, w);
    if (!(apply_omega(gm) * wm.transpose()).is_zero()) return false;
    if (p.excluded_subcode_applied && rowspace_contains(gm, w)) return false;
    return true;
}

}  // namespace qcsym
