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

#include "qcsym/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qcsym {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match rows x cols");
    for (Elem v : e_)
        if (!field_.contains(v)) throw std::invalid_argument("matrix entry outside the field");
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
    std::vector<Elem> e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(e));
}

void Matrix::append_row(std::span<const Elem> v) {
    if (v.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
    e_.insert(e_.end(), v.begin(), v.end());
    ++rows_;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Elem v) { return v == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::row_slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > rows_) throw std::out_of_range("row slice out of range");
    return Matrix(field_, end - begin, cols_,
                  std::vector<Elem>(e_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
                                    e_.begin() + static_cast<std::ptrdiff_t>(end * cols_)));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("matrices over different fields");
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    const Field& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    if (f.is_prime_field()) {
        const std::uint64_t p = f.characteristic();
        std::vector<std::uint64_t> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t v = a.at(i, k);
                if (v == 0) continue;
                const auto brow = b.row(k);
                for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += v * brow[j];
                // Keep headroom: p^2 <= 2^40, so reduce every 2^20 terms at most.
                if ((k & 0xfffff) == 0xfffff)
                    for (auto& x : acc) x %= p;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) out.set(i, j, static_cast<Elem>(acc[j] % p));
        }
        return out;
    }
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Elem v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.set(i, j, f.add(out.at(i, j), f.mul(v, b.at(k, j))));
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape or field mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = a.field_.add(a.e_[i], b.e_[i]);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference shape or field mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = a.field_.sub(a.e_[i], b.e_[i]);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix out(left.field(), left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        auto dst = out.row(r);
        std::copy(left.row(r).begin(), left.row(r).end(), dst.begin());
        std::copy(right.row(r).begin(), right.row(r).end(), dst.begin() + static_cast<std::ptrdiff_t>(left.cols()));
    }
    return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
    std::vector<Elem> e(top.entries().begin(), top.entries().end());
    e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(e));
}

Matrix circulant(const RingElem& gen) {
    const std::size_t n = gen.n();
    const auto g = gen.dense();
    Matrix m(gen.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, (i + j) % n, g[j]);
    return m;
}

Matrix transpose(const Matrix& m) { return m.transpose(); }

Echelon row_reduce(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        const Elem inv = f.inv(a.at(r, c));
        for (auto& v : a.row(r)) v = f.mul(v, inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const Elem factor = a.at(i, c);
            if (factor == 0) continue;
            const Elem neg = f.neg(factor);
            auto dst = a.row(i);
            auto src = a.row(r);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(neg, src[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return {a.row_slice(0, r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix nullspace(const Matrix& m) {
    const Field& f = m.field();
    const Echelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    Matrix out(f, 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = f.neg(ech.reduced.at(i, free));
        out.append_row(v);
    }
    return out;
}

Matrix row_basis(const Matrix& m) { return row_reduce(m).reduced; }

RowSpace::RowSpace(const Matrix& m) : ech_(row_reduce(m)) {}

std::vector<Elem> RowSpace::coordinates(std::span<const Elem> v) const {
    if (v.size() != cols()) throw std::invalid_argument("vector length does not match matrix width");
    const Field& f = ech_.reduced.field();
    std::vector<Elem> rest(v.begin(), v.end());
    std::vector<Elem> coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        const Elem c = rest[ech_.pivots[i]];
        coords[i] = c;
        if (c == 0) continue;
        const Elem neg = f.neg(c);
        const auto row = ech_.reduced.row(i);
        for (std::size_t j = 0; j < rest.size(); ++j)
            if (row[j] != 0) rest[j] = f.add(rest[j], f.mul(neg, row[j]));
    }
    if (std::any_of(rest.begin(), rest.end(), [](Elem x) { return x != 0; })) return {};
    return coords;
}

bool RowSpace::contains(std::span<const Elem> v) const {
    if (v.size() != cols()) throw std::invalid_argument("vector length does not match matrix width");
    if (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; })) return true;
    return !coordinates(v).empty();
}

bool rowspace_contains(const Matrix& m, std::span<const Elem> v) { return RowSpace(m).contains(v); }

std::size_t rowspace_intersection_dim(const Matrix& m1, const Matrix& m2) {
    if (m1.cols() != m2.cols()) throw std::invalid_argument("row space intersection needs equal column counts");
    return rank(m1) + rank(m2) - rank(vstack(m1, m2));
}

Matrix rowspace_intersection(const Matrix& m1, const Matrix& m2) {
    if (m1.cols() != m2.cols()) throw std::invalid_argument("row space intersection needs equal column counts");
    const Field& f = m1.field();
    const Matrix b1 = row_basis(m1);
    const Matrix b2 = row_basis(m2);
    // (u | w) with u B1 - w B2 = 0 spans the pairs; the intersection is {u B1}.
    Matrix neg_b2 = b2;
    for (std::size_t r = 0; r < neg_b2.rows(); ++r)
        for (auto& v : neg_b2.row(r)) v = f.neg(v);
    const Matrix kernel = nullspace(vstack(b1, neg_b2).transpose());
    Matrix us(f, kernel.rows(), b1.rows());
    for (std::size_t r = 0; r < kernel.rows(); ++r)
        for (std::size_t c = 0; c < b1.rows(); ++c) us.set(r, c, kernel.at(r, c));
    if (b1.rows() == 0) return Matrix(f, 0, m1.cols());
    return row_basis(us * b1);
}

}  // namespace qcsym
