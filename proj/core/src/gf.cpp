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

#include "qcsym/gf.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qcsym {

namespace {

// Dense polynomials over F_p with ascending coefficients, used only to build
// and validate extension fields.
using PrimePoly = std::vector<std::uint64_t>;

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod_p(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

PrimePoly poly_rem(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = pow_mod_p(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        trim(a);
    }
    return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_rem(std::move(r), m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod m by k-fold Frobenius.
PrimePoly x_pow_p_pow(std::uint64_t k, const PrimePoly& m, std::uint64_t p) {
    PrimePoly cur = poly_rem(PrimePoly{0, 1}, m, p);
    for (std::uint64_t step = 0; step < k; ++step) {
        PrimePoly acc{1};
        PrimePoly base = cur;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, base, m, p);
            base = poly_mulmod(base, base, m, p);
            e >>= 1;
        }
        cur = std::move(acc);
    }
    return cur;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_by_division(const PrimePoly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Rabin's test: f of degree r is irreducible iff x^(p^r) = x mod f and
// gcd(x^(p^(r/l)) - x, f) = 1 for every prime l dividing r.
bool irreducible_by_rabin(const PrimePoly& f, std::uint64_t p) {
    const std::uint64_t r = f.size() - 1;
    auto minus_x = [&](PrimePoly a) {
        if (a.size() < 2) a.resize(2, 0);
        a[1] = (a[1] + p - 1) % p;
        trim(a);
        return a;
    };
    if (!minus_x(x_pow_p_pow(r, f, p)).empty()) return false;
    for (std::uint64_t l : prime_factors(r)) {
        PrimePoly g = poly_gcd(minus_x(x_pow_p_pow(r / l, f, p)), f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

bool irreducible_over_prime(const PrimePoly& f, std::uint64_t p) {
    if (f.size() < 2) return false;
    if (f.size() - 1 <= 4) return irreducible_by_division(f, p);
    return irreducible_by_rabin(f, p);
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

struct Field::Tables {
    std::uint32_t p = 0;
    unsigned r = 1;
    std::uint32_t q = 0;
    std::vector<Elem> modulus;  // ascending, monic, length r + 1
    // Extension fields with q <= kMaxTabulatedSize.
    std::vector<Elem> exp;  // length 2(q - 1)
    std::vector<std::uint32_t> log;

    Elem add_digits(Elem a, Elem b) const {
        if (p == 2) return a ^ b;
        Elem out = 0;
        Elem scale = 1;
        for (unsigned i = 0; i < r; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return out;
    }

    Elem neg_digits(Elem a) const {
        Elem out = 0;
        Elem scale = 1;
        for (unsigned i = 0; i < r; ++i) {
            out += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        return out;
    }

    // Schoolbook product in F_p[x]/(modulus), no tables.
    Elem mul_slow(Elem a, Elem b) const {
        std::vector<std::uint64_t> da(r), db(r), prod(2 * r, 0);
        for (unsigned i = 0; i < r; ++i) {
            da[i] = a % p;
            db[i] = b % p;
            a /= p;
            b /= p;
        }
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (unsigned k = 2 * r - 1; k >= r; --k) {
            const std::uint64_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (unsigned i = 0; i < r; ++i) prod[k - r + i] = (prod[k - r + i] + (p - c) * modulus[i]) % p;
        }
        Elem out = 0;
        Elem scale = 1;
        for (unsigned i = 0; i < r; ++i) {
            out += static_cast<Elem>(prod[i]) * scale;
            scale *= p;
        }
        return out;
    }

    Elem mul(Elem a, Elem b) const {
        if (r == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
        if (a == 0 || b == 0) return 0;
        if (!log.empty()) return exp[log[a] + log[b]];
        return mul_slow(a, b);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem acc = 1;
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }

    void build_log_tables() {
        const std::uint32_t order = q - 1;
        const auto factors = prime_factors(order);
        Elem gen = 0;
        for (Elem g = 2; g < q && gen == 0; ++g) {
            bool primitive = true;
            for (auto l : factors) {
                if (pow(g, order / l) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) gen = g;
        }
        if (gen == 0) gen = 1;  // only reachable for q = 2, which is a prime field
        exp.assign(2 * std::size_t{order}, 0);
        log.assign(q, 0);
        Elem cur = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp[i] = cur;
            exp[i + order] = cur;
            log[cur] = i;
            cur = mul_slow(cur, gen);
        }
    }
};

Field::Field(std::shared_ptr<const Tables> t) : t_(std::move(t)), p_(t_->p), q_(t_->q) {}

Field Field::prime(std::uint32_t p) {
    if (p > kMaxSize || !is_prime(p)) throw std::invalid_argument("field characteristic must be a prime <= 2^20");
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->r = 1;
    t->q = p;
    t->modulus = {0, 1};
    return Field(std::move(t));
}

Field Field::extension(std::uint32_t p, unsigned r, std::vector<Elem> modulus) {
    if (r == 0) throw std::invalid_argument("extension degree must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxSize) throw std::invalid_argument("field size exceeds 2^20");
    }
    if (r == 1 && modulus.empty()) return prime(p);

    if (modulus.empty()) {
        std::uint64_t count = q;  // p^r candidates for the lower coefficients
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly f(r + 1, 0);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < r; ++i) {
                f[i] = v % p;
                v /= p;
            }
            f[r] = 1;
            if (irreducible_over_prime(f, p)) {
                modulus.assign(f.begin(), f.end());
                break;
            }
        }
    } else {
        if (modulus.size() != r + 1 || modulus.back() != 1)
            throw std::invalid_argument("field modulus must be monic of degree r");
        for (Elem c : modulus)
            if (c >= p) throw std::invalid_argument("field modulus coefficient out of range");
        PrimePoly f(modulus.begin(), modulus.end());
        if (!irreducible_over_prime(f, p)) throw std::invalid_argument("field modulus is not irreducible");
    }
    if (r == 1) return prime(p);

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->r = r;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = std::move(modulus);
    if (q <= kMaxTabulatedSize) t->build_log_tables();
    return Field(std::move(t));
}

Field Field::parse(std::string_view spec) {
    auto parse_uint = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("invalid field spec '" + std::string(spec) + "'");
        return v;
    };
    const auto caret = spec.find('^');
    if (caret == std::string_view::npos) return prime(parse_uint(spec));
    return extension(parse_uint(spec.substr(0, caret)), parse_uint(spec.substr(caret + 1)));
}

std::uint32_t Field::characteristic() const { return p_; }
unsigned Field::degree() const { return t_->r; }
std::uint32_t Field::size() const { return q_; }
bool Field::is_prime_field() const { return t_->r == 1; }
std::span<const Elem> Field::modulus() const { return t_->modulus; }

std::string Field::name() const {
    if (t_->r == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(p_) + "^" + std::to_string(t_->r);
}

Elem Field::add(Elem a, Elem b) const {
    if (t_->r == 1) {
        const Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    return t_->add_digits(a, b);
}

Elem Field::neg(Elem a) const {
    if (t_->r == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return t_->neg_digits(a);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const { return t_->mul(a, b); }

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    if (t_->r == 1) return static_cast<Elem>(pow_mod_p(a, p_ - 2, p_));
    if (!t_->log.empty()) return t_->exp[(q_ - 1 - t_->log[a]) % (q_ - 1)];
    return t_->pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const { return t_->pow(a, e); }

Elem Field::from_int(std::int64_t v) const {
    const std::int64_t p = p_;
    return static_cast<Elem>(((v % p) + p) % p);
}

bool operator==(const Field& a, const Field& b) {
    if (a.t_ == b.t_) return true;
    return a.p_ == b.p_ && a.t_->r == b.t_->r && a.t_->modulus == b.t_->modulus;
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) throw std::invalid_argument("field element out of range");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }

FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace qcsym
