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

#ifndef QCSYM_GF_HPP
#define QCSYM_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcsym {

/// Canonical index of a field element in [0, q).
///
/// For prime fields this is the residue mod p. For F_{p^r} it is the base-p
/// encoding sum(c_i * p^i) of the coefficient vector of the element in the
/// polynomial basis defined by the field modulus.
using Elem = std::uint32_t;

/// The finite field F_q, q = p^r.
///
/// A Field is a cheap handle to immutable arithmetic tables and may be copied
/// and shared across threads freely. Two handles compare equal iff they have
/// the same characteristic, degree and modulus.
class Field {
   public:
    static constexpr std::uint32_t kMaxSize = 1u << 20;
    static constexpr std::uint32_t kMaxTabulatedSize = 1u << 16;

    /// F_p. Throws std::invalid_argument if p is not prime or p > 2^20.
    static Field prime(std::uint32_t p);

    /// F_{p^r} defined by `modulus` (ascending coefficients, monic, degree r).
    /// An empty modulus selects the default: the irreducible monic polynomial
    /// of degree r whose ascending coefficient vector is smallest when read as
    /// a base-p integer.
    static Field extension(std::uint32_t p, unsigned r, std::vector<Elem> modulus = {});

    /// Parses "p" or "p^r".
    static Field parse(std::string_view spec);

    std::uint32_t characteristic() const;
    unsigned degree() const;
    std::uint32_t size() const;
    bool is_prime_field() const;
    /// Ascending coefficients of the defining polynomial; {0, 1} for prime fields.
    std::span<const Elem> modulus() const;
    std::string name() const;

    bool contains(Elem a) const { return a < size(); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws std::domain_error("zero has no inverse") on a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;

    friend bool operator==(const Field& a, const Field& b);

   private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> t);
    std::shared_ptr<const Tables> t_;
    // Hoisted out of Tables so the prime-field fast path does one load.
    std::uint32_t p_ = 0;
    std::uint32_t q_ = 0;
};

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws std::invalid_argument.
class FieldElement {
   public:
    FieldElement(Field field, Elem value);

    const Field& field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement inv() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);

   private:
    Field field_;
    Elem value_;
};

bool is_prime(std::uint64_t v);

}  // namespace qcsym

#endif  // QCSYM_GF_HPP
