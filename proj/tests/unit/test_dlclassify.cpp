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

#include "eostrata/bedard.hpp"
#include "eostrata/dlclassify.hpp"
#include "eostrata/error.hpp"
#include "oracle.hpp"

using namespace eostrata;
using namespace eostrata::dlclassify;
using weyl::ParabolicType;

namespace {

std::map<std::string, std::uint64_t> counts(int c, int p, int m) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& r : census(c, p, m)) out[weyl::reduced_word(r.label).to_string()] = r.count;
  return out;
}

}  // namespace

TEST_CASE("census over small fields") {
  CHECK(counts(1, 2, 1) == std::map<std::string, std::uint64_t>{{"e", 5}, {"s1", 0}});
  CHECK(counts(1, 2, 2) == std::map<std::string, std::uint64_t>{{"e", 5}, {"s1", 12}});
  CHECK(counts(1, 3, 2) == std::map<std::string, std::uint64_t>{{"e", 10}, {"s1", 72}});
  const auto c2 = counts(2, 2, 2);
  CHECK(c2.at("e") == 85);
  CHECK(c2.at("s2") == 1020);
  CHECK(c2.at("s2s1") == 0);
  CHECK(c2.at("s2s1s2") == 3264);
  const auto detail = census_detailed(2, 2, 1);
  CHECK(detail.ok());
  CHECK(detail.total == 85);
  CHECK(detail.records.size() == 4);
  CHECK(detail.records.front().label.is_identity());
  CHECK(detail.records.front().count == 85);
}

TEST_CASE("census totals and label sets") {
  for (auto [c, p, m] : {std::tuple{1, 2, 1}, std::tuple{1, 2, 2}, std::tuple{1, 3, 1}, std::tuple{2, 3, 1}}) {
    const auto r = census_detailed(c, p, m);
    REQUIRE(r.ok());
    const auto q = static_cast<std::uint64_t>(std::pow(p, 2 * m));
    REQUIRE(r.expected == symplectic::lagrangian_count(q, c));
    // One record per element of the Siegel quotient, in a fixed order.
    std::uint64_t n_min = 0;
    for (const auto& [perm, len] : oracle::cayley_lengths(c)) n_min += oracle::siegel_min_left(perm) ? 1 : 0;
    REQUIRE(r.records.size() == n_min);
    for (std::size_t i = 1; i < r.records.size(); ++i) {
      REQUIRE(weyl::length_then_lex(r.records[i - 1].label, r.records[i].label));
    }
  }
}

TEST_CASE("rational Lagrangians are exactly the identity stratum") {
  for (auto [c, p, m] : {std::tuple{1, 2, 2}, std::tuple{2, 2, 2}, std::tuple{1, 3, 2}}) {
    const auto space = census_space(c, p, m);
    for (const auto& u : symplectic::enumerate_lagrangians(space)) {
      REQUIRE(classify_fine(space, u).is_identity() == u.is_rational(2));
    }
  }
}

TEST_CASE("fine classification agrees with the combinatorial sequences") {
  const auto space = census_space(2, 2, 2);
  const ParabolicType siegel = ParabolicType::siegel(2);
  const auto frob = bedard::FrobeniusAction::identity(2);
  int seen_long = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto u = random_lagrangian(space, seed);
    const auto fc = classify_fine_detailed(space, u);
    REQUIRE(weyl::is_min_left_rep(fc.label, siegel));
    const auto& seq = bedard::sequence_for(fc.label, siegel, frob);
    REQUIRE(seq.steps.size() == fc.steps.size());
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
      REQUIRE(seq.steps[k].u == fc.steps[k].u);
      REQUIRE(seq.steps[k].type == fc.steps[k].type);
    }
    REQUIRE(fc.type_inf == seq.steps.back().type);
    for (const auto& f : fc.flags) REQUIRE(f.is_self_dual(space));
    REQUIRE(alternative_route_agrees(space, u, fc.label));
    REQUIRE(classify_coarse(space, u) == coarse_of_fine(fc.label));
    seen_long += weyl::length(fc.label) == 3 ? 1 : 0;
  }
  CHECK(seen_long > 0);
}

TEST_CASE("the label is invariant under rational symplectic changes of basis") {
  const auto rep = equivariance_report(2, 2, 2, 200, 7);
  CHECK(rep.trials == 200);
  CHECK(rep.ok());
  CHECK(equivariance_check(1, 3, 2, 50, 3));
}

TEST_CASE("negative control: a generic change of basis moves points between strata") {
  // Over F_16 a symplectic matrix that is not defined over F_4 does not
  // commute with the twist, so the label is not preserved in general.
  const auto space = census_space(1, 2, 2);
  int moved = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto u = random_lagrangian(space, seed);
    const auto g = symplectic::random_symplectic(space, seed + 500);
    moved += classify_fine(space, u) == classify_fine(space, u.apply(g)) ? 0 : 1;
  }
  CHECK(moved > 0);
}

TEST_CASE("other twists") {
  // With twist 1 the identity stratum is the set of F_p-rational points.
  const auto space = census_space(1, 2, 1);
  int identity = 0;
  for (const auto& u : symplectic::enumerate_lagrangians(space)) {
    const auto w = classify_fine(space, u, 1);
    REQUIRE(weyl::is_min_left_rep(w, ParabolicType::siegel(1)));
    REQUIRE(w.is_identity() == u.is_rational(1));
    identity += w.is_identity() ? 1 : 0;
  }
  CHECK(identity == 3);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(census(0, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(census(1, 4, 1), InvalidArgument);
  const auto space = census_space(1, 2, 1);
  CHECK_THROWS_AS(classify_fine(space, space.zero()), InvalidArgument);
}
