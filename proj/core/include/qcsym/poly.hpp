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

#ifndef QCSYM_POLY_HPP
#define QCSYM_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcsym/gf.hpp"

namespace qcsym {

/// Univariate polynomial over F_q with ascending coefficients and no trailing
/// zeros. The zero polynomial has an empty coefficient vector and no degree.
class Poly {
   public:
    explicit Poly(Field field);
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(Field field, Elem c);
    static Poly monomial(Field field, std::size_t degree, Elem c = 1);
    /// x^n - 1.
    static Poly x_pow_minus_one(Field field, std::size_t n);

    /// Accepts "1,2,0,1" (ascending) or "x^3+2x+1" (human form).
    static Poly parse(Field field, std::string_view text);

    const Field& field() const { return field_; }
    std::span<const Elem> coeffs() const { return coeffs_; }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    /// Degree, or 0 for the zero polynomial. Only for callers that handle zero separately.
    std::size_t degree_or_zero() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }

    Poly monic() const;
    Poly derivative() const;
    Poly scaled(Elem c) const;
    Elem evaluate(Elem x) const;

    /// Descending terms, zero terms omitted, unit coefficients omitted: "x^3+2x+1".
    std::string to_string() const;
    /// Ascending comma-separated coefficients: "1,2,0,1".
    std::string to_coeff_list() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Quotient and remainder. Throws std::domain_error on division by zero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

   private:
    void normalize();
    Field field_;
    std::vector<Elem> coeffs_;
};

/// Monic gcd. Throws std::invalid_argument if both are zero.
Poly gcd(const Poly& a, const Poly& b);
/// Monic lcm. Throws std::invalid_argument if either is zero.
Poly lcm(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus);

/// Orders by degree, then lexicographically from the leading coefficient down
/// (the order terms are written in).
bool poly_less(const Poly& a, const Poly& b);

struct Factor {
    Poly poly;
    unsigned multiplicity = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Factorization of a nonzero polynomial into monic irreducibles, sorted by
/// poly_less. The leading coefficient is dropped.
///
/// Square-free decomposition, then distinct-degree and equal-degree
/// (Cantor-Zassenhaus) splitting. The splitting step draws from a fixed-seed
/// generator, so output is deterministic.
std::vector<Factor> factor(const Poly& f);
std::vector<Factor> factor_xn_minus_1(std::size_t n, const Field& field);
bool is_irreducible(const Poly& f);
/// Product of factors with multiplicities.
Poly expand(std::span<const Factor> factors, const Field& field);
std::string factors_to_string(std::span<const Factor> factors);

/// Residue class in R = F_q[x]/(x^n - 1), stored as the canonical
/// representative of degree < n.
class RingElem {
   public:
    RingElem(std::size_t n, Poly poly);
    RingElem(std::size_t n, Field field, std::vector<Elem> coeffs);
    static RingElem zero(std::size_t n, Field field);
    static RingElem one(std::size_t n, Field field);

    std::size_t n() const { return n_; }
    const Field& field() const { return poly_.field(); }
    const Poly& poly() const { return poly_; }
    Elem coeff(std::size_t i) const { return poly_.coeff(i); }
    bool is_zero() const { return poly_.is_zero(); }
    /// Dense coefficient vector of length n.
    std::vector<Elem> dense() const;

    /// x^n t(x^-1): constant term fixed, remaining coefficients reversed.
    RingElem transpose() const;

    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    friend bool operator==(const RingElem& a, const RingElem& b);

   private:
    std::size_t n_;
    Poly poly_;
};

RingElem transpose_poly(const RingElem& t);

}  // namespace qcsym

#endif  // QCSYM_POLY_HPP
