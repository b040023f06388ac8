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

#include "eostrata/linalg.hpp"

#include <utility>

#include "eostrata/error.hpp"

namespace eostrata::linalg {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  require(field_ != nullptr, "Matrix: null field");
  require(rows >= 0 && cols >= 0, "Matrix: negative dimension");
}

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, int cols, const std::vector<Vector>& rows) {
  Matrix m(std::move(field), static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == cols, "from_rows: ragged rows");
    for (int j = 0; j < cols; ++j) {
      const Elem v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      require(m.field_->contains(v), "from_rows: entry outside the field");
      m.at(i, j) = v;
    }
  }
  return m;
}

Vector Matrix::row_vector(int i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

void Matrix::append_row(std::span<const Elem> r) {
  require(static_cast<int>(r.size()) == cols_, "append_row: wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Matrix Matrix::frobenius(int r) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_->frobenius(v, r);
  return out;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  require(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_, "block: out of range");
  Matrix b(field_, nr, nc);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  require(r0 >= 0 && c0 >= 0 && r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_,
          "set_block: out of range");
  for (int i = 0; i < b.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
  }
}

Vector Matrix::apply(std::span<const Elem> x) const {
  require(static_cast<int>(x.size()) == cols_, "apply: dimension mismatch");
  Vector y(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) y[static_cast<std::size_t>(i)] = dot(*field_, row(i), x);
  return y;
}

Matrix Matrix::negated() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_->neg(v);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_, "matrix field mismatch");
  require(a.cols_ == b.rows_, "matrix product: dimension mismatch");
  const auto& f = *a.field_;
  Matrix c(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Elem aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Elem bkj = b.at(k, j);
        if (bkj == 0) continue;
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, bkj));
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.negated(); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Elem dot(const gf::Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), "dot: length mismatch");
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 || b[i] == 0) continue;
    s = f.add(s, f.mul(a[i], b[i]));
  }
  return s;
}

Matrix rref(const Matrix& m, std::vector<int>* pivots) {
  const auto& f = *m.field();
  Matrix a = m;
  std::vector<int> piv;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int sel = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.at(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    }
    const Elem scale = f.inv(a.at(r, col));
    for (int j = col; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), scale);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = a.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < a.cols(); ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
      }
    }
    piv.push_back(col);
    ++r;
  }
  if (pivots) *pivots = piv;
  return a.block(0, 0, r, a.cols());
}

int rank(const Matrix& m) { return rref(m).rows(); }

Matrix nullspace(const Matrix& m) {
  const auto& f = *m.field();
  std::vector<int> piv;
  const Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix basis(m.field(), 0, m.cols());
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(static_cast<std::size_t>(m.cols()), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < r.rows(); ++i) {
      v[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = f.neg(r.at(i, free));
    }
    basis.append_row(v);
  }
  return basis;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), "inverse: matrix not square");
  const int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  std::vector<int> piv;
  const Matrix r = rref(aug, &piv);
  require(r.rows() == n && (n == 0 || piv.back() < n), "inverse: matrix is singular");
  return r.block(0, n, n, n);
}

}  // namespace eostrata::linalg
