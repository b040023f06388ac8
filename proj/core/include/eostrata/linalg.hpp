/*
 * Copyright 2026 The eostrata Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Dense matrices over a gf::Field and the exact elimination routines the
// geometry is built on.

#include <span>
#include <vector>

#include "eostrata/gf.hpp"

namespace eostrata::linalg {

using gf::Elem;
using gf::FieldPtr;
using Vector = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, int rows, int cols);

  static Matrix identity(FieldPtr field, int n);
  static Matrix from_rows(FieldPtr field, int cols, const std::vector<Vector>& rows);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::span<const Elem> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }
  Vector row_vector(int i) const;
  void append_row(std::span<const Elem> r);

  Matrix transpose() const;
  // Entrywise a -> a^(p^r).
  Matrix frobenius(int r) const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);

  Vector apply(std::span<const Elem> x) const;  // M x, x a column
  Matrix negated() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  const std::vector<Elem>& data() const { return data_; }

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

// Reduced row echelon form with zero rows removed. `pivots` receives the
// pivot column of each remaining row.
Matrix rref(const Matrix& m, std::vector<int>* pivots = nullptr);
int rank(const Matrix& m);
// Basis (as rows) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
// Basis (as rows) of {x : x m = 0}, i.e. the left kernel.
Matrix left_nullspace(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

Elem dot(const gf::Field& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace eostrata::linalg
