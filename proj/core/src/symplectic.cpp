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

#include "eostrata/symplectic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "eostrata/bedard.hpp"
#include "eostrata/error.hpp"

namespace eostrata::symplectic {

namespace {

Matrix stack(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field() && a.cols() == b.cols(), "stack: shape mismatch");
  Matrix out = a;
  for (int i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

void check_same_ambient(const Subspace& u, const Subspace& v) {
  require(u.field() == v.field(), "subspaces over different fields");
  require(u.ambient() == v.ambient(), "subspaces in different ambient spaces");
}

}  // namespace

// ---------------------------------------------------------------------------

Subspace Subspace::zero(FieldPtr field, int ambient) {
  Subspace s;
  s.basis_ = Matrix(std::move(field), 0, ambient);
  return s;
}

Subspace Subspace::full(FieldPtr field, int ambient) {
  Subspace s;
  s.basis_ = Matrix::identity(std::move(field), ambient);
  for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  s.basis_ = linalg::rref(rows, &s.pivots_);
  return s;
}

Subspace Subspace::span(FieldPtr field, int ambient, const std::vector<Vector>& rows) {
  return span(Matrix::from_rows(std::move(field), ambient, rows));
}

bool Subspace::contains(std::span<const Elem> v) const {
  require(static_cast<int>(v.size()) == ambient(), "contains: wrong vector length");
  const auto& f = *field();
  Vector r(v.begin(), v.end());
  for (int i = 0; i < dim(); ++i) {
    const Elem c = r[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
    if (c == 0) continue;
    for (int j = 0; j < ambient(); ++j) {
      const Elem b = basis_.at(i, j);
      if (b != 0) r[static_cast<std::size_t>(j)] = f.sub(r[static_cast<std::size_t>(j)], f.mul(c, b));
    }
  }
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Elem> v) const {
  require(contains(v), "coordinates: vector not in subspace");
  Vector c(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    c[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
  }
  return c;
}

Subspace Subspace::twist(int r) const {
  // Frobenius fixes 0 and 1, so an echelon basis stays echelon.
  Subspace s;
  s.basis_ = basis_.frobenius(r);
  s.pivots_ = pivots_;
  return s;
}

Subspace Subspace::apply(const Matrix& g) const {
  require(g.rows() == ambient() && g.cols() == ambient(), "apply: matrix size mismatch");
  if (dim() == 0) return *this;
  return span(basis_ * g.transpose());
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient() == b.ambient() && a.basis_.data() == b.basis_.data() && a.dim() == b.dim();
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis_.data() < b.basis_.data();
}

Subspace annihilator(const Subspace& u) { return Subspace::span(linalg::nullspace(u.basis())); }

Subspace sum(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  if (u.dim() == 0) return v;
  if (v.dim() == 0) return u;
  return Subspace::span(stack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  if (u.contains(v)) return v;
  if (v.contains(u)) return u;
  const Matrix both = stack(linalg::nullspace(u.basis()), linalg::nullspace(v.basis()));
  return Subspace::span(linalg::nullspace(both));
}

// ---------------------------------------------------------------------------

SymplecticSpace SymplecticSpace::standard(FieldPtr field, int n) {
  require(n >= 1, "symplectic space needs n >= 1");
  Matrix g(field, 2 * n, 2 * n);
  const Elem minus_one = field->neg(1);
  for (int i = 0; i < 2 * n; ++i) g.at(i, 2 * n - 1 - i) = i < n ? 1 : minus_one;
  return SymplecticSpace(std::move(field), std::move(g));
}

SymplecticSpace::SymplecticSpace(FieldPtr field, Matrix gram) : field_(std::move(field)), gram_(std::move(gram)) {
  require(gram_.field() == field_, "gram matrix over a different field");
  require(gram_.rows() == gram_.cols() && gram_.rows() % 2 == 0 && gram_.rows() > 0,
          "gram matrix must be square of even size");
  for (int i = 0; i < gram_.rows(); ++i) {
    require(gram_.at(i, i) == 0, "gram matrix is not alternating");
    for (int j = 0; j < i; ++j) {
      require(gram_.at(i, j) == field_->neg(gram_.at(j, i)), "gram matrix is not alternating");
    }
  }
  require(linalg::is_invertible(gram_), "gram matrix is degenerate");
}

Elem SymplecticSpace::pairing(std::span<const Elem> x, std::span<const Elem> y) const {
  return linalg::dot(*field_, x, gram_.apply(y));
}

Subspace SymplecticSpace::perp(const Subspace& u) const {
  require(u.field() == field_ && u.ambient() == dim(), "perp: subspace not in this space");
  if (u.dim() == 0) return full();
  return Subspace::span(linalg::nullspace(u.basis() * gram_));
}

bool SymplecticSpace::is_isotropic(const Subspace& u) const {
  require(u.field() == field_ && u.ambient() == dim(), "is_isotropic: subspace not in this space");
  const Matrix m = u.basis() * gram_ * u.basis().transpose();
  return std::all_of(m.data().begin(), m.data().end(), [](Elem x) { return x == 0; });
}

bool SymplecticSpace::preserves_form(const Matrix& g) const {
  if (g.rows() != dim() || g.cols() != dim()) return false;
  return g.transpose() * gram_ * g == gram_;
}

std::uint64_t lagrangian_count(std::uint64_t q, int n) {
  std::uint64_t total = 1;
  std::uint64_t qi = 1;
  for (int i = 1; i <= n; ++i) {
    qi *= q;
    total *= qi + 1;
  }
  return total;
}

std::vector<Subspace> enumerate_lagrangians(const SymplecticSpace& space) {
  const auto& f = *space.field();
  const int dim = space.dim();
  const std::uint64_t q = f.order();
  const std::uint64_t expected = lagrangian_count(q, space.n());
  require(expected <= 2'000'000, "enumerate_lagrangians: too many points for enumeration");

  std::set<Subspace> level{space.zero()};
  for (int k = 0; k < space.n(); ++k) {
    std::set<Subspace> next;
    for (const Subspace& u : level) {
      // Complement of U inside U^perp: kill the pivot coordinates of U.
      Matrix cond = u.dim() == 0 ? Matrix(space.field(), 0, dim) : u.basis() * space.gram();
      for (int p : u.pivots()) {
        Vector e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(p)] = 1;
        cond.append_row(e);
      }
      const Matrix w = linalg::nullspace(cond);
      const int d = w.rows();
      // One normalized coefficient vector per projective point of W.
      for (int lead = 0; lead < d; ++lead) {
        const int free = d - 1 - lead;
        std::uint64_t total = 1;
        for (int i = 0; i < free; ++i) total *= q;
        Vector coeff(static_cast<std::size_t>(d), 0);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          coeff[static_cast<std::size_t>(lead)] = 1;
          std::uint64_t t = idx;
          for (int i = lead + 1; i < d; ++i) {
            coeff[static_cast<std::size_t>(i)] = static_cast<Elem>(t % q);
            t /= q;
          }
          Vector v(static_cast<std::size_t>(dim), 0);
          for (int i = lead; i < d; ++i) {
            const Elem c = coeff[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j < dim; ++j) {
              v[static_cast<std::size_t>(j)] = f.add(v[static_cast<std::size_t>(j)], f.mul(c, w.at(i, j)));
            }
          }
          Matrix rows = u.basis();
          rows.append_row(v);
          next.insert(Subspace::span(rows));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Subspace> out(level.begin(), level.end());
  ensure(out.size() == expected, "Lagrangian count " + std::to_string(out.size()) + " differs from " +
                                     std::to_string(expected));
  return out;
}

// ---------------------------------------------------------------------------

Flag Flag::from_members(FieldPtr field, int ambient, std::vector<Subspace> members) {
  members.push_back(Subspace::zero(field, ambient));
  members.push_back(Subspace::full(field, ambient));
  for (const auto& m : members) {
    require(m.field() == field && m.ambient() == ambient, "flag member in a different space");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t i = 1; i < members.size(); ++i) {
    require(members[i - 1].dim() < members[i].dim() && members[i].contains(members[i - 1]),
            "flag members are not totally ordered");
  }
  Flag flag;
  flag.members_ = std::move(members);
  return flag;
}

Flag Flag::lagrangian(const Subspace& u) { return from_members(u.field(), u.ambient(), {u}); }

std::vector<int> Flag::dims() const {
  std::vector<int> d;
  for (const auto& m : members_) d.push_back(m.dim());
  return d;
}

bool Flag::has_dim(int d) const {
  return std::any_of(members_.begin(), members_.end(), [d](const Subspace& m) { return m.dim() == d; });
}

weyl::ParabolicType Flag::type() const {
  const int n = ambient() / 2;
  weyl::ParabolicType t(n);
  for (int i = 1; i <= n; ++i) {
    if (!has_dim(i)) t.insert(i);
  }
  return t;
}

Flag Flag::twist(int r) const {
  Flag out = *this;
  for (auto& m : out.members_) m = m.twist(r);
  return out;
}

Flag Flag::apply(const Matrix& g) const {
  Flag out = *this;
  for (auto& m : out.members_) m = m.apply(g);
  return out;
}

bool Flag::is_self_dual(const SymplecticSpace& space) const {
  for (const auto& m : members_) {
    const Subspace p = space.perp(m);
    if (std::find(members_.begin(), members_.end(), p) == members_.end()) return false;
  }
  return true;
}

Flag Flag::self_dual_closure(const SymplecticSpace& space) const {
  std::vector<Subspace> all = members_;
  for (const auto& m : members_) all.push_back(space.perp(m));
  return from_members(field(), ambient(), std::move(all));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> intersection_table(const Flag& c, const Flag& d) {
  std::vector<std::vector<int>> table(static_cast<std::size_t>(c.size()));
  for (int a = 0; a < c.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      table[static_cast<std::size_t>(a)].push_back(intersect(c[a], d[b]).dim());
    }
  }
  return table;
}

bool matches_rank_table(const weyl::WeylElement& w, const Flag& c, const Flag& d,
                        const std::vector<std::vector<int>>& table) {
  for (int a = 0; a < c.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      if (table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
          weyl::rank_count(w, d[b].dim(), c[a].dim())) {
        return false;
      }
    }
  }
  return true;
}

weyl::WeylElement relpos(const Flag& c, const Flag& d) {
  require(c.field() == d.field() && c.ambient() == d.ambient(), "relpos: flags in different spaces");
  require(c.ambient() % 2 == 0, "relpos: odd ambient dimension");
  const auto table = intersection_table(c, d);
  const auto& reps = weyl::double_coset_reps(c.type(), d.type());
  const weyl::WeylElement* found = nullptr;
  int hits = 0;
  for (const auto& w : reps) {
    if (matches_rank_table(w, c, d, table)) {
      found = &w;
      ++hits;
    }
  }
  ensure(hits == 1, "relpos: " + std::to_string(hits) + " double coset representatives match the rank table");
  return *found;
}

Flag refine(const Flag& c, const Flag& d) {
  require(c.field() == d.field() && c.ambient() == d.ambient(), "refine: flags in different spaces");
  std::vector<Subspace> out;
  for (int i = 0; i + 1 < c.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) out.push_back(sum(intersect(c[i + 1], d[j]), c[i]));
  }
  return Flag::from_members(c.field(), c.ambient(), std::move(out));
}

Flag refine_checked(const SymplecticSpace& space, const Flag& c, const Flag& d) {
  Flag r = refine(c, d);
  ensure(r.is_self_dual(space), "refinement of self-dual flags is not self-dual");
  const weyl::WeylElement w = relpos(c, d);
  ensure(r.type() == (c.type() & bedard::conjugate_type(w, d.type())),
         "refinement type differs from I ∩ wJw^-1");
  return r;
}

Matrix random_symplectic(const SymplecticSpace& space, std::uint64_t seed, int factors) {
  const auto& f = *space.field();
  const int dim = space.dim();
  if (factors <= 0) factors = 4 * dim;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> any(0, f.order() - 1);
  std::uniform_int_distribution<Elem> nonzero(1, f.order() - 1);
  Matrix g = Matrix::identity(space.field(), dim);
  for (int t = 0; t < factors; ++t) {
    Vector v(static_cast<std::size_t>(dim));
    do {
      for (auto& x : v) x = any(rng);
    } while (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; }));
    const Elem a = nonzero(rng);
    // x -> x + a <v, x> v
    Matrix col(space.field(), dim, 1);
    for (int i = 0; i < dim; ++i) col.at(i, 0) = f.mul(a, v[static_cast<std::size_t>(i)]);
    Matrix row(space.field(), 1, dim);
    for (int i = 0; i < dim; ++i) row.at(0, i) = v[static_cast<std::size_t>(i)];
    const Matrix t_mat = Matrix::identity(space.field(), dim) + col * (row * space.gram());
    g = t_mat * g;
  }
  ensure(space.preserves_form(g), "random_symplectic: product does not preserve the form");
  return g;
}

}  // namespace eostrata::symplectic
