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

#include "qcsym/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qcsym {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("polynomials over different fields");
}

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("cannot parse polynomial '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        if (!field_.contains(c)) throw std::invalid_argument("polynomial coefficient outside the field");
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Field field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(Field field, std::size_t degree, Elem c) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(Field field, std::size_t n) {
    std::vector<Elem> v(n + 1, 0);
    v[0] = field.neg(1);
    v[n] = 1;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::parse(Field field, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    const std::uint32_t q = field.size();
    auto elem = [&](std::uint64_t v) {
        if (v >= q) throw std::invalid_argument("coefficient " + std::to_string(v) + " not in [0, q) in '" + s + "'");
        return static_cast<Elem>(v);
    };

    if (s.find('x') == std::string::npos) {
        std::vector<Elem> coeffs;
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            const auto tok = std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            coeffs.push_back(elem(parse_number(tok, s)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return Poly(std::move(field), std::move(coeffs));
    }

    std::map<std::size_t, Elem> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negate = false;
        if (s[i] == '+' || s[i] == '-') {
            negate = s[i] == '-';
            ++i;
        }
        std::size_t end = i;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term = std::string_view(s).substr(i, end - i);
        if (term.empty()) throw std::invalid_argument("cannot parse polynomial '" + s + "'");
        const auto xpos = term.find('x');
        Elem coeff = 1;
        std::size_t degree = 0;
        if (xpos == std::string_view::npos) {
            coeff = elem(parse_number(term, s));
        } else {
            auto c = term.substr(0, xpos);
            if (!c.empty() && c.back() == '*') c.remove_suffix(1);
            if (!c.empty()) coeff = elem(parse_number(c, s));
            auto rest = term.substr(xpos + 1);
            if (rest.empty()) {
                degree = 1;
            } else if (rest.front() == '^') {
                degree = parse_number(rest.substr(1), s);
            } else {
                throw std::invalid_argument("cannot parse polynomial '" + s + "'");
            }
        }
        if (negate) coeff = field.neg(coeff);
        terms[degree] = field.add(terms[degree], coeff);
        i = end;
    }
    std::vector<Elem> coeffs(terms.rbegin()->first + 1, 0);
    for (auto [d, c] : terms) coeffs[d] = c;
    return Poly(std::move(field), std::move(coeffs));
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
    std::vector<Elem> v;
    if (coeffs_.size() > 1) v.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), coeffs_[i]);
    return Poly(field_, std::move(v));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
    return Poly(field_, std::move(v));
}

Elem Poly::evaluate(Elem x) const {
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Elem c = coeffs_[k];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (k > 1) out += '^' + std::to_string(k);
    }
    return out;
}

std::string Poly::to_coeff_list() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.neg(coeffs_[i]);
    return Poly(field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = a.field_;
    std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(f, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field_;
    if (a.coeffs_.size() < b.coeffs_.size()) return {Poly(f), a};
    std::vector<Elem> rem = a.coeffs_;
    std::vector<Elem> quot(a.coeffs_.size() - b.coeffs_.size() + 1, 0);
    const Elem lead_inv = f.inv(b.leading());
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = rem.size(); k-- > db;) {
        const Elem c = f.mul(rem[k], lead_inv);
        if (c == 0) continue;
        const std::size_t shift = k - db;
        quot[shift] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b.coeffs_[i]));
    }
    rem.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return Poly::divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return Poly::divmod(a, b).second; }

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lcm requires nonzero polynomials");
    return (a * (b / gcd(a, b))).monic();
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    Poly acc = Poly::constant(base.field(), 1) % modulus;
    Poly b = base % modulus;
    while (e) {
        if (e & 1) acc = (acc * b) % modulus;
        e >>= 1;
        if (e) b = (b * b) % modulus;
    }
    return acc;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
}

namespace {

bool is_one(const Poly& a) { return a.coeffs().size() == 1 && a.coeffs()[0] == 1; }

// f(x) = g(x)^p for f with f' = 0; returns g.
Poly pth_root(const Poly& f) {
    const Field& field = f.field();
    const std::uint32_t p = field.characteristic();
    // a^(1/p) = a^(q/p) in F_q.
    const std::uint64_t root_exp = field.size() / p;
    std::vector<Elem> v(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v[i / p] = field.pow(f.coeffs()[i], root_exp);
    return Poly(field, std::move(v));
}

void square_free(const Poly& f, unsigned scale, std::vector<Factor>& out) {
    const Poly d = f.derivative();
    if (d.is_zero()) {
        square_free(pth_root(f), scale * f.field().characteristic(), out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    unsigned i = 1;
    while (!is_one(w)) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (!is_one(fac)) out.push_back({fac.monic(), i * scale});
        ++i;
        w = y;
        c = c / y;
    }
    if (!is_one(c)) square_free(pth_root(c), scale * f.field().characteristic(), out);
}

// Input monic square-free; output (product of all degree-d irreducible factors, d).
std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const Field& field = f.field();
    const Poly x = Poly::monomial(field, 1);
    Poly h = x % f;
    for (std::size_t i = 1; f.degree_or_zero() >= 2 * i; ++i) {
        h = pow_mod(h, field.size(), f);
        Poly g = gcd(f, h - x);
        if (!is_one(g)) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree_or_zero() > 0) out.emplace_back(f.monic(), f.degree_or_zero());
    return out;
}

void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const std::size_t deg = f.degree_or_zero();
    if (deg == d) {
        out.push_back(f.monic());
        return;
    }
    const Field& field = f.field();
    const std::uint32_t q = field.size();
    while (true) {
        std::vector<Elem> coeffs(deg);
        for (auto& c : coeffs) c = static_cast<Elem>(rng() % q);
        Poly a(field, std::move(coeffs));
        if (a.degree_or_zero() == 0) continue;
        Poly b(field);
        if (field.characteristic() == 2) {
            // Trace map a + a^2 + ... + a^(2^(rd-1)).
            const std::size_t terms = std::size_t{field.degree()} * d;
            Poly t = a % f;
            b = t;
            for (std::size_t k = 1; k < terms; ++k) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2).
            Poly t = a % f;
            Poly norm = Poly::constant(field, 1);
            for (std::size_t k = 0; k < d; ++k) {
                norm = (norm * t) % f;
                t = pow_mod(t, q, f);
            }
            b = pow_mod(norm, (q - 1) / 2, f) - Poly::constant(field, 1);
        }
        if (b.is_zero()) continue;
        Poly g = gcd(f, b);
        const std::size_t dg = g.degree_or_zero();
        if (dg > 0 && dg < deg) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Factor> factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<Factor> square_free_parts;
    if (f.degree_or_zero() > 0) square_free(f.monic(), 1, square_free_parts);

    std::mt19937_64 rng(0x5eed'f00d'cafe'0001ULL);
    std::map<std::vector<Elem>, Factor> merged;
    for (const auto& part : square_free_parts) {
        for (const auto& [block, d] : distinct_degree(part.poly)) {
            std::vector<Poly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) {
                std::vector<Elem> key(g.coeffs().begin(), g.coeffs().end());
                auto it = merged.find(key);
                if (it == merged.end()) {
                    merged.emplace(std::move(key), Factor{std::move(g), part.multiplicity});
                } else {
                    it->second.multiplicity += part.multiplicity;
                }
            }
        }
    }
    std::vector<Factor> out;
    for (auto& [key, fac] : merged) out.push_back(std::move(fac));
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

std::vector<Factor> factor_xn_minus_1(std::size_t n, const Field& field) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return factor(Poly::x_pow_minus_one(field, n));
}

bool is_irreducible(const Poly& f) {
    // Rabin: x^(q^d) = x mod f, and gcd(x^(q^(d/l)) - x, f) = 1 for primes l | d.
    const std::size_t d = f.degree_or_zero();
    if (d == 0) return false;
    const Field& field = f.field();
    const Poly x = Poly::monomial(field, 1);
    auto frobenius_x = [&](std::size_t k) {
        Poly h = x % f;
        for (std::size_t i = 0; i < k; ++i) h = pow_mod(h, field.size(), f);
        return h;
    };
    if (!((frobenius_x(d) - x) % f).is_zero()) return false;
    std::size_t rest = d;
    for (std::size_t l = 2; l <= rest; ++l) {
        if (rest % l != 0) continue;
        while (rest % l == 0) rest /= l;
        const Poly g = gcd(f, frobenius_x(d / l) - x);
        if (g.degree_or_zero() > 0) return false;
    }
    return true;
}

Poly expand(std::span<const Factor> factors, const Field& field) {
    Poly acc = Poly::constant(field, 1);
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.poly;
    return acc;
}

std::string factors_to_string(std::span<const Factor> factors) {
    std::ostringstream out;
    for (const auto& f : factors) {
        out << '(' << f.poly.to_string() << ')';
        if (f.multiplicity > 1) out << '^' << f.multiplicity;
    }
    return out.str();
}

RingElem::RingElem(std::size_t n, Poly poly) : n_(n), poly_(poly.field()) {
    if (n < 2) throw std::invalid_argument("ring length n must be >= 2");
    const Field& f = poly.field();
    std::vector<Elem> v(std::min(n, poly.coeffs().size()), 0);
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) v[i % n] = f.add(v[i % n], poly.coeffs()[i]);
    poly_ = Poly(f, std::move(v));
}

RingElem::RingElem(std::size_t n, Field field, std::vector<Elem> coeffs) : RingElem(n, Poly(std::move(field), std::move(coeffs))) {}

RingElem RingElem::zero(std::size_t n, Field field) { return RingElem(n, Poly(std::move(field))); }
RingElem RingElem::one(std::size_t n, Field field) { return RingElem(n, Poly::constant(std::move(field), 1)); }

std::vector<Elem> RingElem::dense() const {
    std::vector<Elem> v(n_, 0);
    std::copy(poly_.coeffs().begin(), poly_.coeffs().end(), v.begin());
    return v;
}

RingElem RingElem::transpose() const {
    const auto t = dense();
    std::vector<Elem> out(n_);
    out[0] = t[0];
    for (std::size_t i = 1; i < n_; ++i) out[i] = t[n_ - i];
    return RingElem(n_, Poly(field(), std::move(out)));
}

namespace {
void require_same_ring(const RingElem& a, const RingElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("ring elements with different n");
    if (!(a.field() == b.field())) throw std::invalid_argument("ring elements over different fields");
}
}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
    require_same_ring(a, b);
    return RingElem(a.n_, a.poly_ + b.poly_);
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    require_same_ring(a, b);
    return RingElem(a.n_, a.poly_ - b.poly_);
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    require_same_ring(a, b);
    const Field& f = a.field();
    const std::size_t n = a.n_;
    const auto ac = a.poly_.coeffs();
    const auto bc = b.poly_.coeffs();
    std::vector<Elem> v(n, 0);
    if (f.is_prime_field()) {
        const std::uint64_t p = f.characteristic();
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < ac.size(); ++i) {
            if (ac[i] == 0) continue;
            for (std::size_t j = 0; j < bc.size(); ++j) {
                std::size_t k = i + j;
                if (k >= n) k -= n;
                acc[k] += std::uint64_t{ac[i]} * bc[j];
            }
        }
        for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<Elem>(acc[k] % p);
    } else {
        for (std::size_t i = 0; i < ac.size(); ++i) {
            if (ac[i] == 0) continue;
            for (std::size_t j = 0; j < bc.size(); ++j) {
                const std::size_t k = (i + j) % n;
                v[k] = f.add(v[k], f.mul(ac[i], bc[j]));
            }
        }
    }
    return RingElem(n, Poly(f, std::move(v)));
}

bool operator==(const RingElem& a, const RingElem& b) { return a.n_ == b.n_ && a.poly_ == b.poly_; }

RingElem transpose_poly(const RingElem& t) { return t.transpose(); }

}  // namespace qcsym
