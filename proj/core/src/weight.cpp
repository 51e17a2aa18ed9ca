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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "qcsym/parallel.hpp"

namespace qcsym {

std::string to_string(WeightMethod m) {
    switch (m) {
        case WeightMethod::kMessageEnum:
            return "message-enum";
        case WeightMethod::kLowWeightEnum:
            return "low-weight-enum";
        case WeightMethod::kRandomProbe:
            return "random-probe";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// q^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

// Code basis with the rows spanning code ∩ exclude first. A codeword is in
// the excluded subcode iff all of its coordinates on the remaining rows are 0.
struct OrderedBasis {
    Matrix rows;
    std::size_t excluded_rows = 0;
    bool exclusion = false;  // whether membership in exclude is being filtered
    bool applied = false;    // reported as excluded_subcode_applied
};

OrderedBasis ordered_basis(const Matrix& code, const std::optional<Matrix>& exclude) {
    Matrix basis = row_basis(code);
    if (!exclude.has_value()) return {std::move(basis), 0, false, false};
    if (exclude->cols() != code.cols()) throw std::invalid_argument("excluded subcode has a different length");
    Matrix inter = rowspace_intersection(basis, *exclude);
    if (basis.rows() > 0 && inter.rows() == basis.rows()) {
        // Self-dual case: the difference set is empty; fall back to all nonzero words.
        return {std::move(basis), 0, false, false};
    }
    const std::size_t t = inter.rows();
    Matrix ordered = inter;
    for (std::size_t r = 0; r < basis.rows(); ++r)
        if (!rowspace_contains(ordered, basis.row(r))) ordered.append_row(basis.row(r));
    return {std::move(ordered), t, t > 0, true};
}

struct PrimeAdder {
    Elem p;
    Elem operator()(Elem a, Elem b) const {
        const Elem s = a + b;
        return s >= p ? s - p : s;
    }
};

struct TableAdder {
    const std::vector<Elem>* table;
    std::uint32_t q;
    Elem operator()(Elem a, Elem b) const { return (*table)[a * q + b]; }
};

struct FieldAdder {
    const Field* f;
    Elem operator()(Elem a, Elem b) const { return f->add(a, b); }
};

template <class Fn>
decltype(auto) with_adder(const Field& f, std::vector<Elem>& table_storage, Fn&& fn) {
    if (f.is_prime_field()) return fn(PrimeAdder{f.characteristic()});
    if (f.size() <= 256) {
        const std::uint32_t q = f.size();
        table_storage.resize(std::size_t{q} * q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) table_storage[a * q + b] = f.add(a, b);
        return fn(TableAdder{&table_storage, q});
    }
    return fn(FieldAdder{&f});
}

// Best word seen so far, compared by (weight, interleaved lexicographic).
struct Best {
    std::size_t weight = kNone;
    std::vector<Elem> word;
    std::uint64_t examined = 0;

    void offer_canonical(std::size_t w, std::span<const Elem> canonical) {
        if (w < weight || (w == weight && interleaved_less(canonical, word))) {
            weight = w;
            word.assign(canonical.begin(), canonical.end());
        }
    }

    void merge(const Best& other) {
        examined += other.examined;
        if (other.weight == kNone) return;
        offer_canonical(other.weight, other.word);
    }
};

enum class Metric { kSymplectic, kHamming };

struct RowSupport {
    std::vector<std::uint32_t> idx;  // positions (symplectic) or coordinates (Hamming) touched by the row
};

// Walks all q^m messages of the low m digits (Gray order) with the high
// digits fixed to `high_value`, offering each qualifying word to `best`.
template <Metric M, class Adder>
void enumerate_block(const Field& f, const OrderedBasis& ob, const std::vector<RowSupport>& supports, std::size_t m,
                     std::uint64_t high_value, Adder add, Best& best) {
    const Matrix& rows = ob.rows;
    const std::size_t k = rows.rows();
    const std::size_t len = rows.cols();
    const std::size_t n = len / 2;
    const std::uint32_t q = f.size();

    std::vector<Elem> word(len, 0);
    std::size_t ext_nonzero = 0;
    std::uint64_t v = high_value;
    for (std::size_t j = m; j < k; ++j) {
        const Elem d = static_cast<Elem>(v % q);
        v /= q;
        if (d == 0) continue;
        if (j >= ob.excluded_rows) ++ext_nonzero;
        const auto r = rows.row(j);
        for (std::size_t c = 0; c < len; ++c) word[c] = add(word[c], f.mul(d, r[c]));
    }
    std::size_t weight = M == Metric::kSymplectic ? symp_weight(word) : hamming_weight(word);

    std::vector<Elem> gray(m, 0);
    std::vector<Elem> counter(m, 0);
    std::vector<Elem> scratch(len);

    auto visit = [&] {
        ++best.examined;
        const bool qualifies = ob.exclusion ? ext_nonzero > 0 : weight > 0;
        if (!qualifies || weight > best.weight) return;
        std::copy(word.begin(), word.end(), scratch.begin());
        canonicalize_word(f, scratch);
        best.offer_canonical(weight, scratch);
    };

    visit();
    while (true) {
        std::size_t j = 0;
        while (j < m && counter[j] == q - 1) {
            counter[j] = 0;
            ++j;
        }
        if (j == m) break;
        ++counter[j];

        const bool ext = j >= ob.excluded_rows;
        if (ext && gray[j] == 0) ++ext_nonzero;
        gray[j] = gray[j] + 1 == q ? 0 : gray[j] + 1;
        if (ext && gray[j] == 0) --ext_nonzero;

        const auto r = rows.row(j);
        if constexpr (M == Metric::kSymplectic) {
            for (std::uint32_t i : supports[j].idx) {
                const bool before = (word[i] | word[n + i]) != 0;
                word[i] = add(word[i], r[i]);
                word[n + i] = add(word[n + i], r[n + i]);
                const bool after = (word[i] | word[n + i]) != 0;
                weight = weight + after - before;
            }
        } else {
            for (std::uint32_t c : supports[j].idx) {
                const bool before = word[c] != 0;
                word[c] = add(word[c], r[c]);
                weight = weight + (word[c] != 0) - before;
            }
        }
        visit();
    }
}

// Words over F_2 or F_3 with n <= 64 as bit planes: `one` marks entries equal
// to 1, `two` entries equal to 2 (always zero for q = 2).
struct Planes {
    std::uint64_t x1 = 0, x2 = 0, y1 = 0, y2 = 0;
};

template <std::uint32_t Q>
inline void plane_add(std::uint64_t& one, std::uint64_t& two, std::uint64_t r1, std::uint64_t r2) {
    if constexpr (Q == 2) {
        one ^= r1;
    } else {
        const std::uint64_t zero = ~(one | two);
        const std::uint64_t rzero = ~(r1 | r2);
        const std::uint64_t n1 = (one & rzero) | (r1 & zero) | (two & r2);
        const std::uint64_t n2 = (two & rzero) | (r2 & zero) | (one & r1);
        one = n1;
        two = n2;
    }
}

template <std::uint32_t Q>
inline void planes_add(Planes& w, const Planes& r) {
    plane_add<Q>(w.x1, w.x2, r.x1, r.x2);
    plane_add<Q>(w.y1, w.y2, r.y1, r.y2);
}

Planes to_planes(std::span<const Elem> word) {
    const std::size_t n = word.size() / 2;
    Planes p;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (word[i] == 1) p.x1 |= bit;
        if (word[i] == 2) p.x2 |= bit;
        if (word[n + i] == 1) p.y1 |= bit;
        if (word[n + i] == 2) p.y2 |= bit;
    }
    return p;
}

void from_planes(const Planes& p, std::span<Elem> word) {
    const std::size_t n = word.size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        word[i] = static_cast<Elem>(((p.x1 >> i) & 1) | (((p.x2 >> i) & 1) << 1));
        word[n + i] = static_cast<Elem>(((p.y1 >> i) & 1) | (((p.y2 >> i) & 1) << 1));
    }
}

template <Metric M>
inline std::size_t planes_weight(const Planes& p) {
    if constexpr (M == Metric::kSymplectic) return static_cast<std::size_t>(std::popcount(p.x1 | p.x2 | p.y1 | p.y2));
    return static_cast<std::size_t>(std::popcount(p.x1 | p.x2) + std::popcount(p.y1 | p.y2));
}

// Same walk as enumerate_block, on bit planes.
template <Metric M, std::uint32_t Q>
void enumerate_block_planes(const Field& f, const OrderedBasis& ob, std::size_t m, std::uint64_t high_value, Best& best) {
    const Matrix& rows = ob.rows;
    const std::size_t k = rows.rows();
    const std::size_t len = rows.cols();

    std::vector<Planes> prow(k);
    for (std::size_t j = 0; j < k; ++j) prow[j] = to_planes(rows.row(j));

    std::vector<Elem> word(len, 0);
    std::size_t ext_nonzero = 0;
    std::uint64_t v = high_value;
    for (std::size_t j = m; j < k; ++j) {
        const Elem d = static_cast<Elem>(v % Q);
        v /= Q;
        if (d == 0) continue;
        if (j >= ob.excluded_rows) ++ext_nonzero;
        const auto r = rows.row(j);
        for (std::size_t c = 0; c < len; ++c) word[c] = f.add(word[c], f.mul(d, r[c]));
    }
    Planes w = to_planes(word);

    std::vector<Elem> gray(m, 0);
    std::vector<Elem> counter(m, 0);
    std::uint64_t examined = 0;

    auto visit = [&] {
        const std::size_t weight = planes_weight<M>(w);
        const bool qualifies = ob.exclusion ? ext_nonzero > 0 : weight > 0;
        if (!qualifies || weight > best.weight) return;
        from_planes(w, word);
        canonicalize_word(f, word);
        best.offer_canonical(weight, word);
    };

    ++examined;
    visit();
    const std::size_t excluded = ob.excluded_rows;
    while (true) {
        std::size_t j = 0;
        while (j < m && counter[j] == Q - 1) {
            counter[j] = 0;
            ++j;
        }
        if (j == m) break;
        ++counter[j];
        if (j >= excluded) {
            if (gray[j] == 0) ++ext_nonzero;
            gray[j] = gray[j] + 1 == Q ? 0 : gray[j] + 1;
            if (gray[j] == 0) --ext_nonzero;
        }
        planes_add<Q>(w, prow[j]);
        ++examined;
        visit();
    }
    best.examined += examined;
}

template <Metric M>
Best enumerate_messages(const OrderedBasis& ob, unsigned threads, unsigned partition_digits) {
    const Matrix& rows = ob.rows;
    const Field& f = rows.field();
    const std::size_t k = rows.rows();
    const std::size_t n = rows.cols() / 2;
    const std::uint32_t q = f.size();

    std::vector<RowSupport> supports(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto r = rows.row(j);
        if constexpr (M == Metric::kSymplectic) {
            for (std::uint32_t i = 0; i < n; ++i)
                if (r[i] != 0 || r[n + i] != 0) supports[j].idx.push_back(i);
        } else {
            for (std::uint32_t c = 0; c < r.size(); ++c)
                if (r[c] != 0) supports[j].idx.push_back(c);
        }
    }

    std::size_t high = partition_digits;
    if (high == 0 && threads > 1) {
        while (high < k && saturating_pow(q, high) < 16ULL * threads) ++high;
    }
    high = std::min(high, k);
    const std::size_t low = k - high;
    const std::uint64_t tasks = saturating_pow(q, high);

    std::vector<Best> results(tasks);
    std::vector<Elem> table;
    if ((q == 2 || q == 3) && f.is_prime_field() && n <= 64) {
        parallel_for(tasks, threads, [&](std::size_t t) {
            if (q == 2) enumerate_block_planes<M, 2>(f, ob, low, t, results[t]);
            else enumerate_block_planes<M, 3>(f, ob, low, t, results[t]);
        });
    } else {
        with_adder(f, table, [&](auto add) {
            parallel_for(tasks, threads, [&](std::size_t t) {
                enumerate_block<M>(f, ob, supports, low, t, add, results[t]);
            });
            return 0;
        });
    }
    Best merged;
    for (const auto& r : results) merged.merge(r);
    return merged;
}

}  // namespace

WeightReport min_symp_weight_message_enum(const Matrix& code, const std::optional<Matrix>& exclude,
                                          const EngineOptions& options) {
    if (code.cols() % 2 != 0) throw std::invalid_argument("symplectic code needs an even length");
    const OrderedBasis ob = ordered_basis(code, exclude);
    const std::uint64_t messages = saturating_pow(code.field().size(), ob.rows.rows());
    if (messages > options.message_budget)
        throw BudgetExceeded("message enumeration needs q^" + std::to_string(ob.rows.rows()) +
                             " codewords, over budget; use min_symp_weight_low_enum instead");

    const Best best = enumerate_messages<Metric::kSymplectic>(ob, std::max(1u, options.threads), options.partition_digits);
    WeightReport report;
    report.method = WeightMethod::kMessageEnum;
    report.exhaustive = true;
    report.excluded_subcode_applied = ob.applied;
    report.examined = best.examined;
    if (best.weight != kNone) {
        report.minimum = best.weight;
        report.lower_bound = best.weight;
        report.witness = SympVector::from_word(code.field(), best.word);
    }
    return report;
}

HammingReport min_hamming_weight_message_enum(const Matrix& code, std::uint64_t budget, unsigned threads) {
    OrderedBasis ob{row_basis(code), 0, false, false};
    if (ob.rows.rows() == 0) throw std::invalid_argument("zero code has no nonzero codewords");
    const std::uint64_t messages = saturating_pow(code.field().size(), ob.rows.rows());
    if (messages > budget)
        throw BudgetExceeded("exact Hamming distance needs q^" + std::to_string(ob.rows.rows()) +
                             " codewords, over budget; use the low-weight search engine instead");
    // The Hamming engine walks 2n coordinates; an odd length is padded with a zero column.
    if (ob.rows.cols() % 2 != 0) ob.rows = hstack(ob.rows, Matrix(code.field(), ob.rows.rows(), 1));
    const Best best = enumerate_messages<Metric::kHamming>(ob, std::max(1u, threads), 0);
    HammingReport out;
    out.minimum = best.weight;
    out.witness.assign(best.word.begin(), best.word.begin() + static_cast<std::ptrdiff_t>(code.cols()));
    out.examined = best.examined;
    return out;
}

double low_enum_vectors_at_weight(std::size_t n, std::uint32_t q, std::size_t w) {
    if (w == 0 || w > n) return 0;
    double binom = 1;
    for (std::size_t i = 0; i < w; ++i) binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    const double pairs = static_cast<double>(q) * q - 1;
    return std::round(binom * std::pow(pairs, static_cast<double>(w)) / (q - 1));
}

namespace {

// Leaves visited by the lookup-based search at weight w (an upper bound).
double low_enum_leaves(std::size_t n, std::uint32_t q, std::size_t w) {
    if (w == 0 || w > n) return 0;
    const double pairs = static_cast<double>(q) * q - 1;
    if (w == 1) return static_cast<double>(n) * (q + 1);
    double binom = 1;
    for (std::size_t i = 0; i < w - 1; ++i) binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return binom * (q + 1) * std::pow(pairs, static_cast<double>(w - 2));
}

struct Pair {
    Elem a;
    Elem b;
};

template <std::size_t W>
struct KeyHash {
    std::size_t operator()(const std::array<std::uint64_t, W>& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto v : k) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

template <std::size_t W>
class LowWeightSearch {
   public:
    using Key = std::array<std::uint64_t, W>;

    LowWeightSearch(const Matrix& checks, std::size_t n, const std::optional<RowSpace>& exclude)
        : f_(checks.field()), n_(n), m_(checks.rows()), exclude_(exclude) {
        const std::uint32_t q = f_.size();
        bits_ = std::max(1, static_cast<int>(std::bit_width(q - 1)));
        per_word_ = 64 / bits_;
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                if (a == 0 && b == 0) continue;
                pairs_.push_back({a, b});
                if (a == 1 || (a == 0 && b == 1)) normalized_.push_back(pairs_.size() - 1);
            }
        contrib_.assign(n_ * pairs_.size() * m_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t p = 0; p < pairs_.size(); ++p) {
                Elem* s = contribution(i, p);
                for (std::size_t r = 0; r < m_; ++r)
                    s[r] = f_.add(f_.mul(pairs_[p].a, checks.at(r, i)), f_.mul(pairs_[p].b, checks.at(r, n_ + i)));
            }
        // Syndrome -> (index, pair) entries, index-ordered within each key.
        std::vector<std::tuple<Key, std::uint32_t, std::uint32_t>> all;
        all.reserve(n_ * pairs_.size());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t p = 0; p < pairs_.size(); ++p)
                all.emplace_back(pack(contribution(i, p), false), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(p));
        std::sort(all.begin(), all.end());
        for (std::size_t e = 0; e < all.size();) {
            std::size_t end = e;
            while (end < all.size() && std::get<0>(all[end]) == std::get<0>(all[e])) ++end;
            index_.emplace(std::get<0>(all[e]), std::make_pair(static_cast<std::uint32_t>(entries_.size()),
                                                               static_cast<std::uint32_t>(entries_.size() + end - e)));
            for (std::size_t t = e; t < end; ++t) entries_.push_back({std::get<1>(all[t]), std::get<2>(all[t])});
            e = end;
        }
    }

    // Minimum-weight qualifying word at exactly weight w, or kNone.
    Best search_weight(std::size_t w, unsigned threads) const {
        Best merged;
        if (w == 1) {
            Best b;
            std::vector<std::uint32_t> pos(1), pr(1);
            std::vector<Elem> word(2 * n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t p : normalized_) {
                    ++b.examined;
                    if (!is_zero(contribution(i, p))) continue;
                    pos[0] = static_cast<std::uint32_t>(i);
                    pr[0] = static_cast<std::uint32_t>(p);
                    offer(pos, pr, 1, word, b);
                }
            merged.merge(b);
            return merged;
        }
        const std::size_t first_choices = (n_ - w + 1) * normalized_.size();
        std::vector<Best> results(first_choices);
        parallel_for(first_choices, threads, [&](std::size_t t) {
            const std::size_t i = t / normalized_.size();
            const std::size_t p = normalized_[t % normalized_.size()];
            Frame frame(w, m_, n_);
            frame.pos[0] = static_cast<std::uint32_t>(i);
            frame.pair[0] = static_cast<std::uint32_t>(p);
            std::copy(contribution(i, p), contribution(i, p) + m_, frame.partial.begin());
            dfs(frame, 1, w, results[t]);
        });
        for (const auto& r : results) merged.merge(r);
        return merged;
    }

   private:
    struct Frame {
        std::vector<std::uint32_t> pos, pair;
        std::vector<Elem> partial;  // (depth) x m partial syndromes
        std::vector<Elem> word;
        Frame(std::size_t w, std::size_t m, std::size_t n) : pos(w), pair(w), partial(w * m, 0), word(2 * n, 0) {}
    };

    const Elem* contribution(std::size_t i, std::size_t p) const { return &contrib_[(i * pairs_.size() + p) * m_]; }
    Elem* contribution(std::size_t i, std::size_t p) { return &contrib_[(i * pairs_.size() + p) * m_]; }

    bool is_zero(const Elem* s) const {
        for (std::size_t r = 0; r < m_; ++r)
            if (s[r] != 0) return false;
        return true;
    }

    Key pack(const Elem* s, bool negate) const {
        Key key{};
        for (std::size_t r = 0; r < m_; ++r) {
            const Elem v = negate ? f_.neg(s[r]) : s[r];
            key[r / per_word_] |= std::uint64_t{v} << ((r % per_word_) * bits_);
        }
        return key;
    }

    void dfs(Frame& fr, std::size_t depth, std::size_t w, Best& best) const {
        const Elem* partial = &fr.partial[(depth - 1) * m_];
        if (depth == w - 1) {
            ++best.examined;
            auto it = index_.find(pack(partial, true));
            if (it == index_.end()) return;
            const std::uint32_t last = fr.pos[depth - 1];
            for (std::uint32_t e = it->second.first; e < it->second.second; ++e) {
                if (entries_[e].index <= last) continue;
                fr.pos[depth] = entries_[e].index;
                fr.pair[depth] = entries_[e].pair;
                offer(fr.pos, fr.pair, w, fr.word, best);
            }
            return;
        }
        Elem* next = &fr.partial[depth * m_];
        for (std::size_t i = fr.pos[depth - 1] + 1; i + (w - depth) <= n_; ++i) {
            for (std::size_t p = 0; p < pairs_.size(); ++p) {
                const Elem* c = contribution(i, p);
                for (std::size_t r = 0; r < m_; ++r) next[r] = f_.add(partial[r], c[r]);
                fr.pos[depth] = static_cast<std::uint32_t>(i);
                fr.pair[depth] = static_cast<std::uint32_t>(p);
                dfs(fr, depth + 1, w, best);
            }
        }
    }

    void offer(const std::vector<std::uint32_t>& pos, const std::vector<std::uint32_t>& pair, std::size_t w,
               std::vector<Elem>& word, Best& best) const {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t d = 0; d < w; ++d) {
            word[pos[d]] = pairs_[pair[d]].a;
            word[n_ + pos[d]] = pairs_[pair[d]].b;
        }
        if (exclude_ && exclude_->contains(word)) return;
        best.offer_canonical(w, word);
    }

    struct Entry {
        std::uint32_t index;
        std::uint32_t pair;
    };

    Field f_;
    std::size_t n_;
    std::size_t m_;
    const std::optional<RowSpace>& exclude_;
    int bits_ = 1;
    std::size_t per_word_ = 64;
    std::vector<Pair> pairs_;
    std::vector<std::size_t> normalized_;
    std::vector<Elem> contrib_;
    std::vector<Entry> entries_;
    std::unordered_map<Key, std::pair<std::uint32_t, std::uint32_t>, KeyHash<W>> index_;
};

template <std::size_t W>
WeightReport run_low_enum(const Matrix& checks, std::size_t n, std::size_t cap, const std::optional<RowSpace>& exclude,
                          bool applied, unsigned threads) {
    LowWeightSearch<W> search(checks, n, exclude);
    WeightReport report;
    report.method = WeightMethod::kLowWeightEnum;
    report.exhaustive = true;
    report.excluded_subcode_applied = applied;
    report.lower_bound = cap + 1;
    const std::uint32_t q = checks.field().size();
    for (std::size_t w = 1; w <= cap; ++w) {
        const Best best = search.search_weight(w, threads);
        report.examined += static_cast<std::uint64_t>(low_enum_vectors_at_weight(n, q, w));
        if (best.weight != kNone) {
            report.minimum = w;
            report.lower_bound = w;
            report.witness = SympVector::from_word(checks.field(), best.word);
            return report;
        }
    }
    return report;
}

}  // namespace

WeightReport min_symp_weight_low_enum(const Matrix& parity_checks, std::size_t weight_cap,
                                      const std::optional<Matrix>& exclude, const EngineOptions& options) {
    if (parity_checks.cols() % 2 != 0) throw std::invalid_argument("symplectic code needs an even length");
    const std::size_t n = parity_checks.cols() / 2;
    if (weight_cap > n) throw std::invalid_argument("weight cap exceeds n");
    const Field& f = parity_checks.field();
    const Matrix checks = row_basis(parity_checks);

    std::optional<RowSpace> excl;
    bool applied = false;
    if (exclude.has_value()) {
        if (exclude->cols() != parity_checks.cols()) throw std::invalid_argument("excluded subcode has a different length");
        const Matrix code_basis = nullspace(checks);
        const std::size_t inter = rowspace_intersection_dim(code_basis, *exclude);
        if (!(code_basis.rows() > 0 && inter == code_basis.rows())) {
            applied = true;
            excl.emplace(*exclude);
        }
    }

    const int bits = std::max(1, static_cast<int>(std::bit_width(f.size() - 1)));
    const std::size_t per_word = 64 / static_cast<std::size_t>(bits);
    const std::size_t words = (checks.rows() + per_word - 1) / per_word;
    const unsigned threads = std::max(1u, options.threads);
    if (words <= 1) return run_low_enum<1>(checks, n, weight_cap, excl, applied, threads);
    if (words <= 2) return run_low_enum<2>(checks, n, weight_cap, excl, applied, threads);
    if (words <= 4) return run_low_enum<4>(checks, n, weight_cap, excl, applied, threads);
    if (words <= 8) return run_low_enum<8>(checks, n, weight_cap, excl, applied, threads);
    if (words <= 16) return run_low_enum<16>(checks, n, weight_cap, excl, applied, threads);
    throw std::invalid_argument("too many parity checks for low-weight enumeration");
}

WeightReport random_probe(const Matrix& code, const std::optional<Matrix>& exclude, const ProbeOptions& options) {
    const OrderedBasis ob = ordered_basis(code, exclude);
    const Field& f = code.field();
    const std::uint32_t q = f.size();
    const std::size_t k = ob.rows.rows();
    const std::size_t len = ob.rows.cols();

    WeightReport report;
    report.method = WeightMethod::kRandomProbe;
    report.exhaustive = false;
    report.excluded_subcode_applied = ob.applied;
    if (k == 0 || (ob.exclusion && ob.excluded_rows == k)) return report;

    std::mt19937_64 rng(options.seed);
    std::vector<Elem> digits(k), word(len);
    Best best;
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        bool ext = false;
        for (std::size_t j = 0; j < k; ++j) {
            digits[j] = static_cast<Elem>(rng() % q);
            if (j >= ob.excluded_rows && digits[j] != 0) ext = true;
        }
        if (!ext) continue;  // in the excluded subcode, or zero
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t j = 0; j < k; ++j) {
            if (digits[j] == 0) continue;
            const auto r = ob.rows.row(j);
            for (std::size_t c = 0; c < len; ++c)
                if (r[c] != 0) word[c] = f.add(word[c], f.mul(digits[j], r[c]));
        }
        ++best.examined;
        const std::size_t w = symp_weight(word);
        if (w > best.weight) continue;
        canonicalize_word(f, word);
        best.offer_canonical(w, word);
    }
    report.examined = best.examined;
    if (best.weight != kNone) {
        report.minimum = best.weight;
        report.witness = SympVector::from_word(f, best.word);
    }
    return report;
}

WeightReport min_symp_weight(const Matrix& code, const std::optional<Matrix>& exclude, const DistanceOptions& options) {
    const std::size_t dim = rank(code);
    if (saturating_pow(code.field().size(), dim) <= options.engine.message_budget)
        return min_symp_weight_message_enum(code, exclude, options.engine);

    WeightReport probe = random_probe(code, exclude, options.probe);
    if (!probe.minimum) {
        // Large code whose sampled words all fell in the excluded subcode; enumerate by weight instead.
        probe.minimum = code.cols() / 2;
    }
    const std::size_t n = code.cols() / 2;
    const std::uint32_t q = code.field().size();
    const std::size_t upper = *probe.minimum;
    std::size_t cap = 0;
    double spent = 0;
    while (cap < upper) {
        const double next = low_enum_leaves(n, q, cap + 1);
        if (spent + next > static_cast<double>(options.low_enum_budget)) break;
        spent += next;
        ++cap;
    }
    if (cap == 0) return probe;

    WeightReport exact = min_symp_weight_low_enum(nullspace(code), cap, exclude, options.engine);
    if (exact.minimum) return exact;
    if (cap == upper && probe.witness) throw std::logic_error("low-weight enumeration missed a sampled codeword");
    probe.method = WeightMethod::kLowWeightEnum;
    probe.exhaustive = false;
    probe.lower_bound = cap + 1;
    probe.examined += exact.examined;
    probe.excluded_subcode_applied = exact.excluded_subcode_applied;
    return probe;
}

}  // namespace qcsym
