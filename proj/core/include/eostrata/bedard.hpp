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

// Bédard sequences: the combinatorial labels of fine Deligne-Lusztig
// varieties, and the dimension / irreducibility data attached to them.

#include <vector>

#include "eostrata/weyl.hpp"

namespace eostrata::bedard {

using weyl::ParabolicType;
using weyl::WeylElement;

// An automorphism of the Coxeter system (S_n, m). For Sp_2n only the
// identity exists; the parameter marks where twisted forms would enter.
class FrobeniusAction {
 public:
  static FrobeniusAction identity(int n);
  // Validates that `images` permutes {1..n} and preserves the Coxeter matrix.
  static FrobeniusAction from_images(int n, std::vector<int> images);

  int rank() const { return n_; }
  int apply(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  ParabolicType apply(const ParabolicType& J) const;
  bool is_identity() const;

  friend bool operator==(const FrobeniusAction&, const FrobeniusAction&) = default;

 private:
  int n_ = 0;
  std::vector<int> images_;
};

// Order of s_i s_j in W_n.
int coxeter_matrix_entry(int n, int i, int j);

struct BedardStep {
  WeylElement u;
  ParabolicType type;
};

// A sequence (u_k, I_k) in T(I). `steps` runs from k = 0 up to and including
// the first k with (u_k, I_k) = (u_{k-1}, I_{k-1}), so the last two entries
// always agree.
struct BedardSequence {
  ParabolicType initial;
  std::vector<BedardStep> steps;
  WeylElement u_inf;
  ParabolicType type_inf;
};

// {w s w^{-1} : s in J} intersected with the simple reflections.
ParabolicType conjugate_type(const WeylElement& w, const ParabolicType& J);

// All of T(I) by forward branching. Throws InvariantViolation if the u_inf
// values do not hit every element of ^IW exactly once.
std::vector<BedardSequence> enumerate_sequences(const ParabolicType& I, const FrobeniusAction& F);

// Memoized enumerate_sequences; the table is immutable once built.
const std::vector<BedardSequence>& sequence_table(const ParabolicType& I, const FrobeniusAction& F);

// The unique sequence with u_inf = w.
const BedardSequence& sequence_for(const WeylElement& w, const ParabolicType& I,
                                   const FrobeniusAction& F);

// dim P_J = l(w_0) - l(w_0,J), read off as the length of the minimal
// representative of w_0 W_J.
int flag_variety_dim(const ParabolicType& J);

int stratum_dimension(const WeylElement& w, const ParabolicType& I, const FrobeniusAction& F);

// Smallest F-stable subset of S_n containing X.
ParabolicType f_closure(const ParabolicType& X, const FrobeniusAction& F);

// Irreducibility of the fine variety P_I(w): true iff the F-closure of
// I_inf together with supp(u_inf) is all of S_n.
bool is_irreducible(const WeylElement& w, const ParabolicType& I, const FrobeniusAction& F);

}  // namespace eostrata::bedard
