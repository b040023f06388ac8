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

#include <doctest.h>

#include <random>

#include "eostrata/error.hpp"
#include "eostrata/symplectic.hpp"
#include "oracle.hpp"

using namespace eostrata;
using namespace eostrata::symplectic;
using weyl::WeylElement;

namespace {

Subspace random_subspace(const gf::FieldPtr& f, int dim, int ambient, std::mt19937_64& rng) {
  return Subspace::span(f, ambient, oracle::random_vectors(*f, dim, ambient, rng));
}

Subspace coord(const gf::FieldPtr& f, int ambient, std::vector<int> axes) {
  std::vector<Vector> rows;
  for (int a : axes) {
    Vector e(static_cast<std::size_t>(ambient), 0);
    e[static_cast<std::size_t>(a)] = 1;
    rows.push_back(e);
  }
  return Subspace::span(f, ambient, rows);
}

}  // namespace

TEST_CASE("the standard form is alternating and nondegenerate") {
  const auto f = gf::Field::get(3, 2);
  const auto s = SymplecticSpace::standard(f, 2);
  CHECK(s.gram().at(0, 3) == 1);
  CHECK(s.gram().at(3, 0) == f->neg(1));
  CHECK(s.gram().at(1, 2) == 1);
  linalg::Matrix bad = s.gram();
  bad.at(0, 0) = 1;
  CHECK_THROWS_AS(SymplecticSpace(f, bad), InvalidArgument);
  CHECK_THROWS_AS(SymplecticSpace(f, linalg::Matrix(f, 2, 2)), InvalidArgument);
  // The coordinate flag is self-dual.
  for (int d = 0; d <= 4; ++d) {
    std::vector<int> axes;
    for (int i = 0; i < d; ++i) axes.push_back(i);
    std::vector<int> rest;
    for (int i = 0; i < 4 - d; ++i) rest.push_back(i);
    CHECK(s.perp(coord(f, 4, axes)) == coord(f, 4, rest));
  }
}

TEST_CASE("subspace operations") {
  const auto f = gf::Field::get(2, 2);
  std::mt19937_64 rng(3);
  const auto s = SymplecticSpace::standard(f, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace u = random_subspace(f, trial % 4, 4, rng);
    const Subspace v = random_subspace(f, (trial / 4) % 4, 4, rng);
    REQUIRE(intersect(u, u) == u);
    REQUIRE(sum(u, s.zero()) == u);
    const Subspace i = intersect(u, v);
    const Subspace t = sum(u, v);
    REQUIRE(i.dim() + t.dim() == u.dim() + v.dim());
    REQUIRE(i.dim() == oracle::brute_dim_intersection(u, v));
    REQUIRE(u.contains(i));
    REQUIRE(t.contains(u));
    REQUIRE(u.dim() + s.perp(u).dim() == 4);
    REQUIRE(s.perp(s.perp(u)) == u);
    if (u.contains(v)) REQUIRE(s.perp(v).contains(s.perp(u)));
  }
}

TEST_CASE("echelon forms are canonical") {
  const auto f = gf::Field::get(3, 2);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace u = random_subspace(f, 3, 6, rng);
    // A different spanning set of the same space.
    linalg::Matrix rows(f, 0, 6);
    for (int i = 0; i < u.dim(); ++i) {
      Vector r(6, 0);
      for (int j = 0; j < u.dim(); ++j) {
        const gf::Elem c = static_cast<gf::Elem>((i + 2 * j + trial) % 9);
        for (int x = 0; x < 6; ++x) r[static_cast<std::size_t>(x)] = f->add(r[static_cast<std::size_t>(x)], f->mul(c, u.basis().at(j, x)));
      }
      rows.append_row(r);
    }
    rows.append_row(u.basis().row(0));
    const Subspace w = Subspace::span(rows);
    if (w.dim() == u.dim()) REQUIRE(w.basis().data() == u.basis().data());
  }
  CHECK_THROWS_AS(intersect(Subspace::zero(f, 4), Subspace::zero(f, 6)), InvalidArgument);
}

TEST_CASE("twists") {
  const auto f = gf::Field::get(2, 4);
  const auto s = SymplecticSpace::standard(f, 2);
  std::mt19937_64 rng(21);
  const auto f4 = gf::Field::get(2, 2);
  const gf::Embedding emb(f4, f);
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace u = random_subspace(f, 1 + trial % 3, 4, rng);
    const Subspace v = random_subspace(f, 1 + trial % 2, 4, rng);
    REQUIRE(u.twist(1).twist(-1) == u);
    REQUIRE(u.twist(4) == u);
    REQUIRE(intersect(u, v).twist(1) == intersect(u.twist(1), v.twist(1)));
    REQUIRE(sum(u, v).twist(3) == sum(u.twist(3), v.twist(3)));
    REQUIRE(s.perp(u).twist(1) == s.perp(u.twist(1)));
    // Prime-field subspaces are fixed by every twist.
    std::vector<Vector> rows = oracle::random_vectors(*gf::Field::get(2, 1), 2, 4, rng);
    const Subspace r = Subspace::span(f, 4, rows);
    REQUIRE(r.twist(1) == r);
    // Subspaces over F_4 are fixed by the square of Frobenius.
    auto small = oracle::random_vectors(*f4, 2, 4, rng);
    for (auto& row : small) {
      for (auto& x : row) x = emb.apply(x);
    }
    const Subspace w = Subspace::span(f, 4, small);
    REQUIRE(w.is_rational(2));
  }
}

TEST_CASE("Lagrangian enumeration") {
  CHECK(enumerate_lagrangians(SymplecticSpace::standard(gf::Field::get(2, 2), 1)).size() == 5);
  CHECK(enumerate_lagrangians(SymplecticSpace::standard(gf::Field::get(2, 2), 2)).size() == 85);
  CHECK(enumerate_lagrangians(SymplecticSpace::standard(gf::Field::get(3, 2), 2)).size() == 820);
  for (int q_p : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      const auto space = SymplecticSpace::standard(gf::Field::get(q_p, 1), n);
      const auto all = enumerate_lagrangians(space);
      REQUIRE(all.size() == lagrangian_count(static_cast<std::uint64_t>(q_p), n));
      for (const auto& u : all) REQUIRE(space.is_lagrangian(u));
      REQUIRE(std::is_sorted(all.begin(), all.end()));
    }
  }
  CHECK(lagrangian_count(4, 3) == 5 * 17 * 65);
  CHECK(lagrangian_count(9, 3) == 10 * 82 * 730);
  for (auto [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const auto space = SymplecticSpace::standard(gf::Field::get(p, k), 2);
    CHECK(oracle::brute_lagrangian_count(space) == enumerate_lagrangians(space).size());
  }
  const auto space = SymplecticSpace::standard(gf::Field::get(2, 2), 3);
  CHECK(enumerate_lagrangians(space).size() == lagrangian_count(4, 3));
}

TEST_CASE("flags") {
  const auto f = gf::Field::get(2, 2);
  const auto s = SymplecticSpace::standard(f, 2);
  const Subspace u = coord(f, 4, {0, 1});
  const Flag lag = Flag::lagrangian(u);
  CHECK(lag.dims() == std::vector<int>{0, 2, 4});
  CHECK(lag.type() == weyl::ParabolicType::siegel(2));
  CHECK(lag.is_self_dual(s));
  const Flag line = Flag::from_members(f, 4, {coord(f, 4, {0})});
  CHECK_FALSE(line.is_self_dual(s));
  CHECK(line.self_dual_closure(s).dims() == std::vector<int>{0, 1, 3, 4});
  CHECK_THROWS_AS(Flag::from_members(f, 4, {coord(f, 4, {0}), coord(f, 4, {1})}), InvalidArgument);
}

TEST_CASE("relative position of two Lagrangian lines") {
  const auto f = gf::Field::get(2, 2);
  const auto s = SymplecticSpace::standard(f, 1);
  const auto lines = enumerate_lagrangians(s);
  for (const auto& a : lines) {
    for (const auto& b : lines) {
      const auto w = relpos(Flag::lagrangian(a), Flag::lagrangian(b));
      CHECK(w == (a == b ? WeylElement::identity(1) : weyl::simple_reflection(1, 1)));
    }
  }
}

TEST_CASE("relative positions match a brute-force search of the whole group") {
  for (auto [p, k] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const auto f = gf::Field::get(p, k);
    const auto s = SymplecticSpace::standard(f, 2);
    std::mt19937_64 rng(100 + static_cast<unsigned>(p));
    for (int trial = 0; trial < 60; ++trial) {
      const Flag c = oracle::random_self_dual_flag(s, rng);
      const Flag d = oracle::random_self_dual_flag(s, rng);
      REQUIRE(c.is_self_dual(s));
      const WeylElement w = relpos(c, d);
      CHECK(relpos(c, c).is_identity());
      // Brute-force dims and every group element matching them.
      std::set<WeylElement> reps;
      for (const auto& [perm, len] : oracle::cayley_lengths(2)) {
        bool ok = true;
        for (int a = 0; a < c.size() && ok; ++a) {
          for (int b = 0; b < d.size() && ok; ++b) {
            ok = (p == 2 ? oracle::brute_dim_intersection(c[a], d[b]) : intersect(c[a], d[b]).dim()) ==
                 oracle::rank(perm, d[b].dim(), c[a].dim());
          }
        }
        if (ok) {
          reps.insert(oracle::to_weyl(oracle::min_in_double_coset(perm, c.type().members(), d.type().members())));
        }
      }
      REQUIRE(reps.size() == 1);
      REQUIRE(*reps.begin() == w);
      // Swapping the flags inverts the position.
      REQUIRE(relpos(d, c) == weyl::min_double_coset_rep(w.inverse(), d.type(), c.type()));
      // Simultaneous symplectic change of basis.
      const auto g = random_symplectic(s, rng());
      REQUIRE(relpos(c.apply(g), d.apply(g)) == w);
    }
  }
}

TEST_CASE("refinement") {
  const auto f = gf::Field::get(2, 2);
  const auto s = SymplecticSpace::standard(f, 2);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Flag c = oracle::random_self_dual_flag(s, rng);
    const Flag d = oracle::random_self_dual_flag(s, rng);
    REQUIRE(refine(c, c) == c);
    const Flag r = refine_checked(s, c, d);
    for (const auto& m : c.members()) REQUIRE(std::find(r.members().begin(), r.members().end(), m) != r.members().end());
    REQUIRE(refine(r, d) == r);
    // Same full-group element matches both rank tables.
    const auto tc = intersection_table(c, d);
    const auto tr = intersection_table(r, d);
    std::set<WeylElement> both;
    for (const auto& w : weyl::enumerate_group(2)) {
      if (matches_rank_table(w, c, d, tc) && matches_rank_table(w, r, d, tr)) both.insert(w);
    }
    REQUIRE_FALSE(both.empty());
    REQUIRE(relpos(r, d) == relpos(c, d));
  }
}

TEST_CASE("random symplectic matrices") {
  const auto f = gf::Field::get(3, 2);
  const auto s = SymplecticSpace::standard(f, 2);
  CHECK(s.preserves_form(linalg::Matrix::identity(f, 4)));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_symplectic(s, seed);
    REQUIRE(s.preserves_form(g));
    REQUIRE(g == random_symplectic(s, seed));
    REQUIRE(s.preserves_form(g * random_symplectic(s, seed + 1000)));
  }
  CHECK_FALSE(random_symplectic(s, 1) == random_symplectic(s, 2));
}
