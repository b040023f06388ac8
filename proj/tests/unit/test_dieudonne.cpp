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

#include "eostrata/dieudonne.hpp"
#include "eostrata/dlclassify.hpp"
#include "eostrata/error.hpp"
#include "oracle.hpp"

using namespace eostrata;
using namespace eostrata::dieudonne;
using weyl::ParabolicType;

namespace {

SymplecticSpace space_over(int c, int p, int k) {
  return SymplecticSpace::standard(gf::Field::get(p, k), c);
}

}  // namespace

TEST_CASE("semilinear maps compose with the twist on the left factor") {
  const auto f = gf::Field::get(2, 4);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = Matrix::from_rows(f, 3, oracle::random_vectors(*f, 3, 3, rng));
    const auto b = Matrix::from_rows(f, 3, oracle::random_vectors(*f, 3, 3, rng));
    const SemilinearMap sa(a, 1 + trial % 2);
    const SemilinearMap sb(b, -1);
    const auto x = oracle::random_vectors(*f, 1, 3, rng).front();
    REQUIRE(compose(sa, sb).apply(x) == sa.apply(sb.apply(x)));
    REQUIRE(compose(sa, sb).twist() == sa.twist() + sb.twist());
    // Kernel and image dimensions.
    REQUIRE(sa.kernel().dim() + sa.image().dim() == 3);
    for (int i = 0; i < sa.kernel().dim(); ++i) {
      const auto y = sa.apply(sa.kernel().basis().row(i));
      REQUIRE(std::all_of(y.begin(), y.end(), [](Elem e) { return e == 0; }));
    }
  }
}

TEST_CASE("modules attached to Lagrangians") {
  for (auto [c, g, p, k] : {std::tuple{1, 2, 2, 2}, std::tuple{1, 3, 2, 4}, std::tuple{2, 4, 2, 4},
                            std::tuple{2, 5, 3, 2}}) {
    const auto space = space_over(c, p, k);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto u = dlclassify::random_lagrangian(space, seed);
      const auto m = DieudonneModule::from_lagrangian(space, u, g);
      REQUIRE(m.dim() == 2 * g);
      REQUIRE(m.is_bt1());
      REQUIRE(m.satisfies_adjunction());
      REQUIRE(m.satisfies_kernel_identities());
      REQUIRE(m.slot_offsets() == std::vector<int>{0, c, g - c, g + c, 2 * g - c, 2 * g});
      REQUIRE(m.F().kernel().dim() == g);
      REQUIRE(m.V().kernel() == m.F().image());
      REQUIRE(m.F().kernel() == m.V().image());
      REQUIRE(m.space().is_lagrangian(m.V().kernel()));
    }
  }
  const auto space = space_over(2, 2, 2);
  CHECK_THROWS_AS(DieudonneModule::from_lagrangian(space, space.zero(), 4), InvalidArgument);
  CHECK_THROWS_AS(DieudonneModule::from_lagrangian(space, dlclassify::random_lagrangian(space, 1), 3),
                  InvalidArgument);
}

TEST_CASE("graded pull-backs agree with V-preimages") {
  for (auto [c, g] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 4}, std::pair{2, 5}}) {
    const auto space = space_over(c, 2, 4);
    std::mt19937_64 rng(static_cast<unsigned>(10 * c + g));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto m = DieudonneModule::from_lagrangian(space, dlclassify::random_lagrangian(space, seed), g);
      for (int i = 0; i <= 2; ++i) {
        const int d = m.slot_dim(i + 2);
        if (d == 0) continue;
        for (int trial = 0; trial < 4; ++trial) {
          const auto h = Subspace::span(m.field(), d, oracle::random_vectors(*m.field(), trial % (d + 1), d, rng));
          REQUIRE(graded_v_preimage(m, i, h) == v_preimage(m, m.slot_pullback(i + 2, h)));
        }
      }
    }
  }
}

TEST_CASE("canonical flags and final types") {
  const auto space = space_over(2, 2, 4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = dlclassify::random_lagrangian(space, seed);
    const auto m = DieudonneModule::from_lagrangian(space, u, 4);
    const auto cf = canonical_flag(m);
    REQUIRE(cf.flag.is_self_dual(m.space()));
    REQUIRE(cf.flag.size() == static_cast<int>(cf.fdims.size()));
    REQUIRE(cf.rounds <= 16);
    for (const auto& member : cf.flag.members()) {
      REQUIRE(cf.flag.has_dim(m.space().perp(member).dim()));
      REQUIRE(v_preimage(m, member).dim() >= member.dim() / 2);
    }
    REQUIRE(std::find(cf.flag.members().begin(), cf.flag.members().end(), m.V().kernel()) !=
            cf.flag.members().end());
    const auto t = eo_type(m, cf);
    REQUIRE(weyl::is_min_left_rep(t.w, ParabolicType::siegel(4)));
    REQUIRE(t.psi == final_type(t.w));
  }
}

TEST_CASE("final types") {
  for (int g = 1; g <= 4; ++g) {
    const ParabolicType siegel = ParabolicType::siegel(g);
    for (const auto& w : weyl::enumerate_group(g)) {
      if (!weyl::is_min_left_rep(w, siegel)) continue;
      const auto psi = final_type(w);
      REQUIRE(psi == oracle::psi(oracle::from_weyl(w), g));
      REQUIRE(psi.front() == 0);
      REQUIRE(psi.back() == g);
      for (int i = 0; i < 2 * g; ++i) {
        const int step = psi[static_cast<std::size_t>(i + 1)] - psi[static_cast<std::size_t>(i)];
        REQUIRE((step == 0 || step == 1));
      }
      for (int i = 0; i <= 2 * g; ++i) {
        REQUIRE(psi[static_cast<std::size_t>(2 * g - i)] == psi[static_cast<std::size_t>(i)] + g - i);
      }
    }
  }
}

TEST_CASE("superspecial modules") {
  for (int g = 1; g <= 4; ++g) {
    const auto m = DieudonneModule::superspecial(gf::Field::get(3, 2), g);
    REQUIRE(m.is_bt1());
    REQUIRE(m.satisfies_adjunction());
    REQUIRE_FALSE(m.has_slots());
    const auto cf = canonical_flag(m);
    REQUIRE(cf.rounds <= 2);
    REQUIRE(eo_type(m, cf).w.is_identity());
  }
}

TEST_CASE("the sign of the middle piece does not change the final type") {
  const auto space = space_over(2, 2, 4);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto u = dlclassify::random_lagrangian(space, seed);
    const auto a = DieudonneModule::from_lagrangian(space, u, 5, FSign::kStandard);
    const auto b = DieudonneModule::from_lagrangian(space, u, 5, FSign::kFlipMiddle);
    REQUIRE(b.is_bt1());
    REQUIRE(eo_type(a).w == eo_type(b).w);
  }
}

TEST_CASE("final type of the module equals the lifted fine label") {
  for (auto [c, g, p, k] : {std::tuple{1, 2, 2, 2}, std::tuple{1, 3, 2, 4}, std::tuple{2, 4, 2, 4},
                            std::tuple{2, 4, 3, 2}}) {
    const auto space = space_over(c, p, k);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto u = dlclassify::random_lagrangian(space, seed);
      REQUIRE(verify_pullback(space, u, g));
      const auto fine = dlclassify::classify_fine(space, u);
      REQUIRE(eo_type(DieudonneModule::from_lagrangian(space, u, g)).w == weyl::r_map_inv(fine, g));
    }
  }
}

TEST_CASE("the final type is invariant under rational changes of basis") {
  const auto space = dlclassify::census_space(2, 2, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto u = dlclassify::random_lagrangian(space, seed);
    const auto h = dlclassify::random_rational_symplectic(space, 2, seed + 77);
    REQUIRE(eo_type(DieudonneModule::from_lagrangian(space, u, 4)).w ==
            eo_type(DieudonneModule::from_lagrangian(space, u.apply(h), 4)).w);
  }
}
