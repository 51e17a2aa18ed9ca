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

#ifndef QCSYM_SYMPLECTIC_HPP
#define QCSYM_SYMPLECTIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qcsym/gf.hpp"
#include "qcsym/matrix.hpp"

namespace qcsym {

/// A word (x | y) of F_q^{2n}.
struct SympVector {
    Field field;
    std::vector<Elem> x;
    std::vector<Elem> y;

    SympVector(Field f, std::vector<Elem> xs, std::vector<Elem> ys);
    /// Splits a length-2n word into halves.
    static SympVector from_word(Field f, std::span<const Elem> word);

    std::size_t n() const { return x.size(); }
    std::vector<Elem> word() const;
    friend bool operator==(const SympVector&, const SympVector&);
};

/// <u, v>_s = <u.x, v.y> - <v.x, u.y>.
Elem symp_inner(const SympVector& u, const SympVector& v);
/// Same form on raw length-2n words.
Elem symp_inner(const Field& f, std::span<const Elem> u, std::span<const Elem> v);

/// Number of i with (x_i, y_i) != (0, 0).
std::size_t symp_weight(const SympVector& u);
std::size_t symp_weight(std::span<const Elem> word);
std::size_t hamming_weight(std::span<const Elem> word);

/// The block matrix (0 I // -I 0) of size 2n.
Matrix omega(const Field& f, std::size_t n);
/// m * Omega without forming Omega: (A | B) -> (-B | A).
Matrix apply_omega(const Matrix& m);

/// Basis of C^{⊥s} = nullspace(G * Omega). Throws on an odd column count.
Matrix symplectic_dual(const Matrix& g);

/// G * Omega * G^T = 0.
bool is_symplectic_self_orthogonal(const Matrix& g);
/// Every basis row of C^{⊥s} lies in rowspace(G).
bool is_symplectic_dual_containing(const Matrix& g);

/// Scales a length-2n word so that its first nonzero entry in the
/// interleaved order x_0, y_0, x_1, y_1, ... equals 1.
void canonicalize_word(const Field& f, std::span<Elem> word);
/// Lexicographic comparison in interleaved order.
bool interleaved_less(std::span<const Elem> a, std::span<const Elem> b);

}  // namespace qcsym

#endif  // QCSYM_SYMPLECTIC_HPP
