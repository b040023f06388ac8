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

#include "eostrata/dlclassify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "eostrata/bedard.hpp"
#include "eostrata/error.hpp"

namespace eostrata::dlclassify {

namespace {

void check_point(const SymplecticSpace& space, const Subspace& u) {
  require(space.is_lagrangian(u), "point is not a Lagrangian subspace");
}

int max_rounds(const SymplecticSpace& space) { return 2 * space.n() * (space.n() + 1); }

}  // namespace

FineClassification classify_fine_detailed(const SymplecticSpace& space, const Subspace& u, int twist) {
  check_point(space, u);
  const int n = space.n();
  const ParabolicType siegel = ParabolicType::siegel(n);

  FineClassification out;
  Flag d = Flag::lagrangian(u);
  out.flags.push_back(d);
  for (int round = 0;; ++round) {
    ensure(round <= max_rounds(space), "fine classification did not stabilize");
    const Flag fd = d.twist(twist);
    out.steps.push_back({symplectic::relpos(d, fd), d.type()});
    Flag next = symplectic::refine_checked(space, d, fd);
    if (next == d) break;
    d = std::move(next);
    out.flags.push_back(d);
  }
  out.label = out.steps.back().u;
  out.type_inf = out.steps.back().type;
  // Repeat the stable step, matching the convention of the sequence tables.
  out.steps.push_back(out.steps.back());

  ensure(weyl::is_min_left_rep(out.label, siegel), "fine label is not a minimal left coset representative");
  const auto& seq = bedard::sequence_for(out.label, siegel, bedard::FrobeniusAction::identity(n));
  ensure(seq.type_inf == out.type_inf, "stable flag type differs from the sequence table");
  ensure(seq.steps.size() == out.steps.size(), "refinement length differs from the sequence table");
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    ensure(seq.steps[k].u == out.steps[k].u && seq.steps[k].type == out.steps[k].type,
           "refinement step " + std::to_string(k) + " differs from the sequence table");
  }
  return out;
}

WeylElement classify_fine(const SymplecticSpace& space, const Subspace& u, int twist) {
  return classify_fine_detailed(space, u, twist).label;
}

AlternativeRoute alternative_route(const SymplecticSpace& space, const Subspace& u, int twist) {
  check_point(space, u);
  const Flag d0 = Flag::lagrangian(u);
  AlternativeRoute out;
  Flag d = d0;
  out.flags.push_back(d);
  for (int round = 0;; ++round) {
    ensure(round <= max_rounds(space), "alternative refinement did not stabilize");
    Flag next = symplectic::refine(d0, d.twist(twist));
    ensure(next.is_self_dual(space), "alternative refinement is not self-dual");
    if (next == d) break;
    d = std::move(next);
    out.flags.push_back(d);
  }
  out.type_inf = d.type();
  out.position = symplectic::relpos(d0, d.twist(twist));
  return out;
}

bool alternative_route_agrees(const SymplecticSpace& space, const Subspace& u, const WeylElement& fine,
                              int twist) {
  const AlternativeRoute alt = alternative_route(space, u, twist);
  const ParabolicType siegel = ParabolicType::siegel(space.n());
  return alt.position == weyl::min_double_coset_rep(fine, siegel, alt.type_inf);
}

WeylElement classify_coarse(const SymplecticSpace& space, const Subspace& u, int twist) {
  check_point(space, u);
  const Flag d0 = Flag::lagrangian(u);
  return symplectic::relpos(d0, d0.twist(twist));
}

WeylElement coarse_of_fine(const WeylElement& fine) {
  const ParabolicType siegel = ParabolicType::siegel(fine.rank());
  return weyl::min_double_coset_rep(fine, siegel, siegel);
}

SymplecticSpace census_space(int c, int p, int m) {
  require(c >= 1 && c <= weyl::kMaxRank, "rank c out of range");
  require(gf::is_prime(p), "p must be prime");
  require(m >= 1, "m must be positive");
  return SymplecticSpace::standard(gf::Field::get(p, 2 * m), c);
}

CensusResult census_detailed(int c, int p, int m, bool cross_check) {
  const SymplecticSpace space = census_space(c, p, m);
  CensusResult out;
  out.expected = symplectic::lagrangian_count(space.field()->order(), c);
  std::map<WeylElement, std::uint64_t> counts;
  for (const auto& w : weyl::enumerate_IW(c)) counts[w] = 0;

  for (const Subspace& u : symplectic::enumerate_lagrangians(space)) {
    const WeylElement fine = classify_fine(space, u);
    auto it = counts.find(fine);
    ensure(it != counts.end(), "fine label outside the index set");
    ++it->second;
    ++out.total;
    if (cross_check) {
      if (classify_coarse(space, u) != coarse_of_fine(fine)) ++out.coarse_mismatches;
      if (!alternative_route_agrees(space, u, fine)) ++out.alternative_mismatches;
    }
  }
  for (const auto& [w, n] : counts) out.records.push_back({p, m, c, w, n});
  std::sort(out.records.begin(), out.records.end(),
            [](const CensusRecord& a, const CensusRecord& b) { return weyl::length_then_lex(a.label, b.label); });
  return out;
}

std::vector<CensusRecord> census(int c, int p, int m) {
  CensusResult r = census_detailed(c, p, m, false);
  ensure(r.total == r.expected, "census does not partition the Lagrangians");
  return std::move(r.records);
}

Subspace random_lagrangian(const SymplecticSpace& space, std::uint64_t seed) {
  const int n = space.n();
  std::vector<linalg::Vector> rows;
  for (int i = 0; i < n; ++i) {
    linalg::Vector e(static_cast<std::size_t>(2 * n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    rows.push_back(e);
  }
  const Subspace std_lagrangian = Subspace::span(space.field(), 2 * n, rows);
  return std_lagrangian.apply(symplectic::random_symplectic(space, seed));
}

linalg::Matrix random_rational_symplectic(const SymplecticSpace& space, int p, std::uint64_t seed) {
  const auto small_field = gf::Field::get(p, 2);
  const SymplecticSpace small = SymplecticSpace::standard(small_field, space.n());
  const linalg::Matrix g_small = symplectic::random_symplectic(small, seed);
  const gf::Embedding embed(small_field, space.field());
  linalg::Matrix g(space.field(), g_small.rows(), g_small.cols());
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) g.at(i, j) = embed.apply(g_small.at(i, j));
  }
  ensure(space.preserves_form(g), "embedded symplectic matrix does not preserve the form");
  return g;
}

EquivarianceReport equivariance_report(int c, int p, int m, int trials, std::uint64_t seed) {
  require(trials >= 0, "trials must be non-negative");
  const SymplecticSpace space = census_space(c, p, m);
  EquivarianceReport report;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t base = seed * 1000003ULL + static_cast<std::uint64_t>(t) * 2;
    const Subspace u = random_lagrangian(space, base);
    const linalg::Matrix g = random_rational_symplectic(space, p, base + 1);
    ++report.trials;
    if (classify_fine(space, u.apply(g)) == classify_fine(space, u)) ++report.passed;
  }
  return report;
}

bool equivariance_check(int c, int p, int m, int trials, std::uint64_t seed) {
  return equivariance_report(c, p, m, trials, seed).ok();
}

}  // namespace eostrata::dlclassify
