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

#ifndef QCSYM_MATRIX_HPP
#define QCSYM_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qcsym/gf.hpp"
#include "qcsym/poly.hpp"

namespace qcsym {

/// Dense row-major matrix over F_q.
class Matrix {
   public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::span<const Elem> entries() const { return e_; }

    Elem at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { e_[r * cols_ + c] = v; }
    std::span<const Elem> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {e_.data() + r * cols_, cols_}; }
    void append_row(std::span<const Elem> v);

    bool is_zero() const;
    Matrix transpose() const;
    /// Rows [begin, end).
    Matrix row_slice(std::size_t begin, std::size_t end) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

   private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> e_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// n x n matrix whose row i holds the coefficients of x^i * gen mod (x^n - 1).
Matrix circulant(const RingElem& gen);

Matrix transpose(const Matrix& m);

/// Reduced row echelon form. Pivots are taken at the first nonzero entry of
/// each column in row order, so the result is deterministic.
struct Echelon {
    Matrix reduced;                   // rank rows, each with a leading 1
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};
Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Rows form a basis of {v : m v^T = 0}; cols - rank(m) rows.
Matrix nullspace(const Matrix& m);
/// Basis of the row space (the nonzero rows of the reduced echelon form).
Matrix row_basis(const Matrix& m);
bool rowspace_contains(const Matrix& m, std::span<const Elem> v);
std::size_t rowspace_intersection_dim(const Matrix& m1, const Matrix& m2);
/// Basis of rowspace(m1) ∩ rowspace(m2).
Matrix rowspace_intersection(const Matrix& m1, const Matrix& m2);

/// Precomputed echelon form for repeated row-space membership tests.
class RowSpace {
   public:
    explicit RowSpace(const Matrix& m);
    std::size_t dim() const { return ech_.rank(); }
    std::size_t cols() const { return ech_.reduced.cols(); }
    bool contains(std::span<const Elem> v) const;
    /// Coordinates of v against the echelon basis; empty if v is not in the space.
    std::vector<Elem> coordinates(std::span<const Elem> v) const;
    const Matrix& basis() const { return ech_.reduced; }

   private:
    Echelon ech_;
};

}  // namespace qcsym

#endif  // QCSYM_MATRIX_HPP
