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

#include <map>
#include <set>

#include "eostrata/bedard.hpp"
#include "eostrata/error.hpp"
#include "oracle.hpp"

using namespace eostrata;
using namespace eostrata::weyl;
using namespace eostrata::bedard;

namespace {

WeylElement word(int n, std::vector<int> letters) { return evaluate_word(n, letters); }

}  // namespace

TEST_CASE("Frobenius actions must preserve the Coxeter matrix") {
  CHECK(FrobeniusAction::identity(3).is_identity());
  CHECK_THROWS_AS(FrobeniusAction::from_images(3, {3, 2, 1}), InvalidArgument);
  CHECK_THROWS_AS(FrobeniusAction::from_images(3, {1, 1, 3}), InvalidArgument);
  CHECK(coxeter_matrix_entry(2, 1, 2) == 4);
  CHECK(coxeter_matrix_entry(3, 1, 2) == 3);
  CHECK(coxeter_matrix_entry(3, 1, 3) == 2);
  CHECK(coxeter_matrix_entry(3, 2, 2) == 1);
}

TEST_CASE("conjugate types") {
  const auto J = ParabolicType(3, {1, 3});
  CHECK(conjugate_type(WeylElement::identity(3), J) == J);
  CHECK(conjugate_type(simple_reflection(1, 2), ParabolicType(2, {1})) == ParabolicType(2, {1}));
  // s2 (1 2)(3 4) s2 = (1 3)(2 4), not simple.
  const auto s2 = simple_reflection(2, 2);
  const auto conj = s2 * simple_reflection(1, 2) * s2.inverse();
  CHECK(conj.one_line() == std::vector<int>{3, 4, 1, 2});
  CHECK(conjugate_type(s2, ParabolicType(2, {1})).empty());
  // Brute force: t in the result iff t = w s w^-1 for a simple s in J.
  for (int n = 1; n <= 3; ++n) {
    for (const auto& w : enumerate_group(n)) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto j = ParabolicType::from_mask(n, mask);
        ParabolicType expected(n);
        for (int s : j.members()) {
          const auto t = w * simple_reflection(s, n) * w.inverse();
          for (int i = 1; i <= n; ++i) {
            if (t == simple_reflection(i, n)) expected.insert(i);
          }
        }
        REQUIRE(conjugate_type(w, j) == expected);
      }
    }
  }
}

TEST_CASE("rank-1 sequences for the empty type") {
  const auto seqs = enumerate_sequences(ParabolicType(1), FrobeniusAction::identity(1));
  REQUIRE(seqs.size() == 2);
  for (const auto& s : seqs) {
    CHECK(s.type_inf.empty());
    for (const auto& st : s.steps) {
      CHECK(st.type.empty());
      CHECK(st.u == s.u_inf);
    }
  }
}

TEST_CASE("the rank-2 Siegel table") {
  const auto I = ParabolicType(2, {1});
  const auto F = FrobeniusAction::identity(2);
  const auto& table = sequence_table(I, F);
  REQUIRE(table.size() == 4);
  std::set<WeylElement> u_inf;
  for (const auto& s : table) u_inf.insert(s.u_inf);
  const auto iw = enumerate_IW(2);
  CHECK(u_inf == std::set<WeylElement>(iw.begin(), iw.end()));
  CHECK(sequence_for(word(2, {2}), I, F).u_inf == word(2, {2}));
  const auto& e = sequence_for(WeylElement::identity(2), I, F);
  for (const auto& st : e.steps) {
    CHECK(st.u.is_identity());
    CHECK(st.type == I);
  }
  CHECK_THROWS_AS(sequence_for(simple_reflection(1, 2), I, F), InvalidArgument);
  CHECK(enumerate_sequences(ParabolicType::siegel(3), FrobeniusAction::identity(3)).size() == 8);
}

TEST_CASE("sequence invariants and the bijection for every type up to rank 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto F = FrobeniusAction::identity(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto I = ParabolicType::from_mask(n, mask);
      const auto& table = sequence_table(I, F);
      std::map<WeylElement, int> hits;
      for (const auto& s : table) {
        ++hits[s.u_inf];
        REQUIRE(s.initial == I);
        REQUIRE(s.steps.size() >= 2);
        REQUIRE(static_cast<int>(s.steps.size()) <= I.size() + 2);
        REQUIRE(s.steps.front().type == I);
        for (std::size_t k = 0; k < s.steps.size(); ++k) {
          const auto& st = s.steps[k];
          REQUIRE(weyl::is_min_left_rep(st.u, st.type));
          REQUIRE(weyl::is_min_right_rep(st.u, F.apply(st.type)));
          if (k + 1 < s.steps.size()) {
            const auto& nx = s.steps[k + 1];
            REQUIRE(nx.type == (st.type & conjugate_type(st.u, F.apply(st.type))));
            REQUIRE(nx.type.is_subset_of(st.type));
            REQUIRE(min_double_coset_rep(nx.u, nx.type, F.apply(st.type)) ==
                    min_double_coset_rep(st.u, nx.type, F.apply(st.type)));
          }
        }
        const auto& last = s.steps.back();
        const auto& prev = s.steps[s.steps.size() - 2];
        REQUIRE(last.u == prev.u);
        REQUIRE(last.type == prev.type);
        REQUIRE(last.u == s.u_inf);
        REQUIRE(last.type == s.type_inf);
        REQUIRE(min_double_coset_rep(s.u_inf, I, F.apply(I)) == min_double_coset_rep(s.steps.front().u, I, F.apply(I)));
      }
      std::size_t expected = 0;
      for (const auto& w : enumerate_group(n)) {
        if (is_min_left_rep(w, I)) {
          ++expected;
          REQUIRE(hits[w] == 1);
        }
      }
      REQUIRE(hits.size() == expected);
    }
  }
}

TEST_CASE("flag variety dimensions") {
  CHECK(flag_variety_dim(ParabolicType::full(3)) == 0);
  CHECK(flag_variety_dim(ParabolicType(1)) == 1);
  CHECK(flag_variety_dim(ParabolicType(2, {1})) == 3);
  CHECK(flag_variety_dim(ParabolicType::siegel(3)) == 6);
}

TEST_CASE("stratum dimension is the length for the trivial Frobenius") {
  const auto I2 = ParabolicType(2, {1});
  CHECK(stratum_dimension(WeylElement::identity(2), I2, FrobeniusAction::identity(2)) == 0);
  CHECK(stratum_dimension(word(2, {2, 1, 2}), I2, FrobeniusAction::identity(2)) == 3);
  for (int c = 1; c <= 4; ++c) {
    const auto F = FrobeniusAction::identity(c);
    for (const auto& w : enumerate_IW(c)) {
      REQUIRE(stratum_dimension(w, ParabolicType::siegel(c), F) == length(w));
    }
  }
}

TEST_CASE("irreducibility") {
  const auto F2 = FrobeniusAction::identity(2);
  CHECK(is_irreducible(WeylElement::identity(2), ParabolicType::full(2), F2));
  CHECK(is_irreducible(word(2, {2, 1, 2}), ParabolicType(2, {1}), F2));
  CHECK_FALSE(is_irreducible(WeylElement::identity(1), ParabolicType(1), FrobeniusAction::identity(1)));
  CHECK(is_irreducible(simple_reflection(1, 1), ParabolicType(1), FrobeniusAction::identity(1)));
  CHECK(f_closure(ParabolicType(3, {1}), FrobeniusAction::identity(3)) == ParabolicType(3, {1}));
}

TEST_CASE("exact-class elements have full support after lowering the rank") {
  for (int g = 2; g <= 8; ++g) {
    for (const auto& w : enumerate_IW(g)) {
      const auto c = class_c(w);
      if (!c || *c == 0) continue;
      const auto r = r_map(w, *c);
      REQUIRE(support(r) == ParabolicType::full(*c));
      REQUIRE(is_irreducible(r, ParabolicType::siegel(*c), FrobeniusAction::identity(*c)));
    }
  }
  // Elements of class c - 1 viewed in rank c miss s_1.
  for (int g = 4; g <= 8; ++g) {
    for (int c = 2; 2 * c <= g; ++c) {
      for (const auto& w : enumerate_IW(g)) {
        const auto k = class_c(w);
        if (!k || *k != c - 1) continue;
        REQUIRE_FALSE(support(r_map(w, c)).contains(1));
      }
    }
  }
}
