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

// Fine and coarse stratification of the Lagrangian Grassmannian by the
// relative position of a point and its Frobenius twist.

#include <cstdint>
#include <vector>

#include "eostrata/symplectic.hpp"
#include "eostrata/weyl.hpp"

namespace eostrata::dlclassify {

using symplectic::Flag;
using symplectic::Subspace;
using symplectic::SymplecticSpace;
using weyl::ParabolicType;
using weyl::WeylElement;

inline constexpr int kDefaultTwist = 2;

struct FineStep {
  WeylElement u;       // relpos(D_k, twist(D_k))
  ParabolicType type;  // type of D_k
};

struct FineClassification {
  WeylElement label;
  std::vector<Flag> flags;  // D_0, D_1, ..., D_inf
  std::vector<FineStep> steps;
  ParabolicType type_inf;
};

// Iterates D_{k+1} = refine(D_k, twist(D_k)) from D_0 = {0, U, L} and
// checks every step against the Bedard sequence of the label.
FineClassification classify_fine_detailed(const SymplecticSpace& space, const Subspace& u,
                                          int twist = kDefaultTwist);
WeylElement classify_fine(const SymplecticSpace& space, const Subspace& u, int twist = kDefaultTwist);

struct AlternativeRoute {
  std::vector<Flag> flags;  // D'_0, D'_1, ..., D'_inf
  WeylElement position;     // relpos(D_0, twist(D'_inf))
  ParabolicType type_inf;
};

// D'_{k+1} = refine(D_0, twist(D'_k)).
AlternativeRoute alternative_route(const SymplecticSpace& space, const Subspace& u, int twist = kDefaultTwist);
// relpos(D_0, twist(D'_inf)) and the fine label lie in the same
// W_I \ W / W_{I_inf} double coset.
bool alternative_route_agrees(const SymplecticSpace& space, const Subspace& u, const WeylElement& fine,
                              int twist = kDefaultTwist);

// relpos({0,U,L}, twist): a minimal representative of W_I \ W / W_I.
WeylElement classify_coarse(const SymplecticSpace& space, const Subspace& u, int twist = kDefaultTwist);
// Coarse class of a fine label.
WeylElement coarse_of_fine(const WeylElement& fine);

struct CensusRecord {
  int p = 0;
  int m = 0;
  int c = 0;
  WeylElement label;
  std::uint64_t count = 0;
};

struct CensusResult {
  std::vector<CensusRecord> records;  // one per label, sorted by length then one-line
  std::uint64_t total = 0;
  std::uint64_t expected = 0;
  std::uint64_t coarse_mismatches = 0;
  std::uint64_t alternative_mismatches = 0;
  bool ok() const { return total == expected && coarse_mismatches == 0 && alternative_mismatches == 0; }
};

// Classifies every Lagrangian of F_{p^{2m}}^{2c}.
CensusResult census_detailed(int c, int p, int m, bool cross_check = true);
std::vector<CensusRecord> census(int c, int p, int m);

// The field F_{p^{2m}} and the standard space of rank c over it.
SymplecticSpace census_space(int c, int p, int m);

// A Lagrangian g * span(e_1..e_c) for a random symplectic g.
Subspace random_lagrangian(const SymplecticSpace& space, std::uint64_t seed);
// Symplectic matrix with entries in F_{p^2}, embedded in the field of `space`.
linalg::Matrix random_rational_symplectic(const SymplecticSpace& space, int p, std::uint64_t seed);

struct EquivarianceReport {
  int trials = 0;
  int passed = 0;
  bool ok() const { return trials == passed; }
};

// classify_fine(gU) == classify_fine(U) for random U over F_{p^{2m}} and
// random symplectic g over F_{p^2}.
EquivarianceReport equivariance_report(int c, int p, int m, int trials, std::uint64_t seed);
bool equivariance_check(int c, int p, int m, int trials, std::uint64_t seed = 1);

}  // namespace eostrata::dlclassify
