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

#include "qcsym/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcsym {

SympVector::SympVector(Field f, std::vector<Elem> xs, std::vector<Elem> ys)
    : field(std::move(f)), x(std::move(xs)), y(std::move(ys)) {
    if (x.size() != y.size()) throw std::invalid_argument("symplectic halves differ in length");
}

SympVector SympVector::from_word(Field f, std::span<const Elem> word) {
    if (word.size() % 2 != 0) throw std::invalid_argument("symplectic word must have even length");
    const std::size_t n = word.size() / 2;
    return SympVector(std::move(f), std::vector<Elem>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n)),
                      std::vector<Elem>(word.begin() + static_cast<std::ptrdiff_t>(n), word.end()));
}

std::vector<Elem> SympVector::word() const {
    std::vector<Elem> w(x);
    w.insert(w.end(), y.begin(), y.end());
    return w;
}

bool operator==(const SympVector& a, const SympVector& b) { return a.field == b.field && a.x == b.x && a.y == b.y; }

Elem symp_inner(const SympVector& u, const SympVector& v) {
    if (!(u.field == v.field)) throw std::invalid_argument("symplectic vectors over different fields");
    if (u.n() != v.n()) throw std::invalid_argument("symplectic vectors of different length");
    const Field& f = u.field;
    Elem acc = 0;
    for (std::size_t i = 0; i < u.n(); ++i) {
        acc = f.add(acc, f.mul(u.x[i], v.y[i]));
        acc = f.sub(acc, f.mul(v.x[i], u.y[i]));
    }
    return acc;
}

Elem symp_inner(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
    return symp_inner(SympVector::from_word(f, u), SympVector::from_word(f, v));
}

std::size_t symp_weight(const SympVector& u) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < u.n(); ++i) w += (u.x[i] != 0 || u.y[i] != 0);
    return w;
}

std::size_t symp_weight(std::span<const Elem> word) {
    const std::size_t n = word.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += (word[i] != 0 || word[n + i] != 0);
    return w;
}

std::size_t hamming_weight(std::span<const Elem> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem v) { return v != 0; }));
}

Matrix omega(const Field& f, std::size_t n) {
    Matrix m(f, 2 * n, 2 * n);
    const Elem minus_one = f.neg(1);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, n + i, 1);
        m.set(n + i, i, minus_one);
    }
    return m;
}

Matrix apply_omega(const Matrix& m) {
    if (m.cols() % 2 != 0) throw std::invalid_argument("symplectic matrices need an even column count");
    const Field& f = m.field();
    const std::size_t n = m.cols() / 2;
    Matrix out(f, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t i = 0; i < n; ++i) {
            out.set(r, i, f.neg(m.at(r, n + i)));
            out.set(r, n + i, m.at(r, i));
        }
    return out;
}

Matrix symplectic_dual(const Matrix& g) { return nullspace(apply_omega(g)); }

bool is_symplectic_self_orthogonal(const Matrix& g) { return (apply_omega(g) * g.transpose()).is_zero(); }

bool is_symplectic_dual_containing(const Matrix& g) {
    const Matrix dual = symplectic_dual(g);
    const RowSpace space(g);
    for (std::size_t r = 0; r < dual.rows(); ++r)
        if (!space.contains(dual.row(r))) return false;
    return true;
}

void canonicalize_word(const Field& f, std::span<Elem> word) {
    const std::size_t n = word.size() / 2;
    Elem lead = 0;
    for (std::size_t i = 0; i < n && lead == 0; ++i) lead = word[i] != 0 ? word[i] : word[n + i];
    if (lead == 0 || lead == 1) return;
    const Elem s = f.inv(lead);
    for (auto& v : word) v = f.mul(v, s);
}

bool interleaved_less(std::span<const Elem> a, std::span<const Elem> b) {
    const std::size_t n = a.size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
        if (a[n + i] != b[n + i]) return a[n + i] < b[n + i];
    }
    return false;
}

}  // namespace qcsym
