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

// Subspaces, flags and relative positions inside a symplectic space over a
// finite field.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "eostrata/gf.hpp"
#include "eostrata/linalg.hpp"
#include "eostrata/weyl.hpp"

namespace eostrata::symplectic {

using gf::Elem;
using gf::FieldPtr;
using linalg::Matrix;
using linalg::Vector;

// A subspace of F^N stored by its reduced row echelon basis, so equal
// subspaces compare equal byte for byte.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldPtr field, int ambient);
  static Subspace full(FieldPtr field, int ambient);
  static Subspace span(const Matrix& rows);
  static Subspace span(FieldPtr field, int ambient, const std::vector<Vector>& rows);

  const FieldPtr& field() const { return basis_.field(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the echelon basis; v must lie in the subspace.
  Vector coordinates(std::span<const Elem> v) const;

  // Span of the entrywise p^r-th powers of the basis.
  Subspace twist(int r) const;
  // Image under the matrix g acting on column vectors.
  Subspace apply(const Matrix& g) const;
  // True when twist(r) == *this.
  bool is_rational(int r) const { return twist(r) == *this; }

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Matrix basis_;
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
// Basis of the standard-dot annihilator {x : <u, x> = 0 for u in U}.
Subspace annihilator(const Subspace& u);

class SymplecticSpace {
 public:
  // Antidiagonal form: +1 at (i, 2n+1-i) for i <= n, -1 below the center.
  static SymplecticSpace standard(FieldPtr field, int n);
  // Any alternating nondegenerate Gram matrix of even size.
  SymplecticSpace(FieldPtr field, Matrix gram);

  const FieldPtr& field() const { return field_; }
  int n() const { return gram_.rows() / 2; }
  int dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Elem pairing(std::span<const Elem> x, std::span<const Elem> y) const;
  Subspace perp(const Subspace& u) const;
  bool is_isotropic(const Subspace& u) const;
  bool is_lagrangian(const Subspace& u) const { return u.dim() == n() && is_isotropic(u); }
  bool preserves_form(const Matrix& g) const;

  Subspace zero() const { return Subspace::zero(field_, dim()); }
  Subspace full() const { return Subspace::full(field_, dim()); }

 private:
  FieldPtr field_;
  Matrix gram_;
};

// prod_{i=1..n} (q^i + 1).
std::uint64_t lagrangian_count(std::uint64_t q, int n);
// All Lagrangians, sorted by echelon form. The count is checked against
// lagrangian_count.
std::vector<Subspace> enumerate_lagrangians(const SymplecticSpace& space);

// A chain 0 = F_0 < F_1 < ... < F_k = ambient.
class Flag {
 public:
  Flag() = default;
  // Sorts, drops duplicates and adds 0 and the ambient space if missing.
  // Throws if the members are not totally ordered.
  static Flag from_members(FieldPtr field, int ambient, std::vector<Subspace> members);
  // {0, U, ambient}.
  static Flag lagrangian(const Subspace& u);

  const std::vector<Subspace>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  const Subspace& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
  const FieldPtr& field() const { return members_.front().field(); }
  int ambient() const { return members_.front().ambient(); }
  std::vector<int> dims() const;
  bool has_dim(int d) const;
  // {s_i : i not a member dimension} in W_n, n = ambient / 2.
  weyl::ParabolicType type() const;

  Flag twist(int r) const;
  Flag apply(const Matrix& g) const;
  bool is_self_dual(const SymplecticSpace& space) const;
  // Adds the perps of all members.
  Flag self_dual_closure(const SymplecticSpace& space) const;

  friend bool operator==(const Flag&, const Flag&) = default;

 private:
  std::vector<Subspace> members_;
};

// dim(C_a ∩ D_b) for all member pairs.
std::vector<std::vector<int>> intersection_table(const Flag& c, const Flag& d);
// True when dim(C_a ∩ D_b) = r_w(dim D_b, dim C_a) for every pair.
bool matches_rank_table(const weyl::WeylElement& w, const Flag& c, const Flag& d,
                        const std::vector<std::vector<int>>& table);
// The unique w in the minimal double coset representatives for
// (type C, type D) matching the intersection table. Both flags must be self-dual.
weyl::WeylElement relpos(const Flag& c, const Flag& d);

// The flag generated by (C_{i+1} ∩ D_j) + C_i.
Flag refine(const Flag& c, const Flag& d);
// As refine, and checks that the result has type I ∩ w J w^-1, w = relpos(c, d).
Flag refine_checked(const SymplecticSpace& space, const Flag& c, const Flag& d);

// Deterministic product of random symplectic transvections.
Matrix random_symplectic(const SymplecticSpace& space, std::uint64_t seed, int factors = 0);

}  // namespace eostrata::symplectic
