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

// Mod-p Dieudonne modules as semilinear algebra: the split graded module
// attached to a Lagrangian, the canonical flag, and the final type.

#include <optional>
#include <span>
#include <vector>

#include "eostrata/symplectic.hpp"
#include "eostrata/weyl.hpp"

namespace eostrata::dieudonne {

using gf::Elem;
using linalg::Matrix;
using linalg::Vector;
using symplectic::Flag;
using symplectic::Subspace;
using symplectic::SymplecticSpace;
using weyl::WeylElement;

// x -> M * x^(p^r), the power taken entrywise before the linear map.
class SemilinearMap {
 public:
  SemilinearMap(Matrix matrix, int twist);

  const Matrix& matrix() const { return matrix_; }
  int twist() const { return twist_; }
  const gf::FieldPtr& field() const { return matrix_.field(); }

  Vector apply(std::span<const Elem> x) const;
  Subspace image(const Subspace& c) const;
  Subspace image() const;
  Subspace kernel() const;
  // {x : M x^(p^r) in C}
  Subspace preimage(const Subspace& c) const;

  // (A, r) o (B, s) = (A * B^(p^r), r + s)
  friend SemilinearMap compose(const SemilinearMap& a, const SemilinearMap& b);

 private:
  Matrix matrix_;
  int twist_ = 0;
};

SemilinearMap compose(const SemilinearMap& a, const SemilinearMap& b);

// Sign of the middle graded piece of F. kFlipMiddle breaks the pairing
// compatibility and is only used to show the final type does not see it.
enum class FSign { kStandard, kFlipMiddle };

class DieudonneModule {
 public:
  // F must have twist +1, V twist -1. Checks ker F = im V, ker V = im F,
  // dim ker F = g and <Fx, y> = <x, Vy>^p on basis vectors.
  DieudonneModule(gf::FieldPtr field, int g, SemilinearMap f, SemilinearMap v, Matrix pairing);

  // Slots [U | K | L^(p) | K^(p) | L/U] of dims [c, g-2c, 2c, g-2c, c].
  static DieudonneModule from_lagrangian(const SymplecticSpace& space, const Subspace& u, int g,
                                         FSign sign = FSign::kStandard);
  // Direct sum of g copies of F e1 = e2, V e1 = -e2, <e1, e2> = 1.
  static DieudonneModule superspecial(gf::FieldPtr field, int g);

  const gf::FieldPtr& field() const { return space_.field(); }
  int g() const { return g_; }
  int dim() const { return 2 * g_; }
  const SemilinearMap& F() const { return f_; }
  const SemilinearMap& V() const { return v_; }
  const Matrix& pairing() const { return space_.gram(); }
  const SymplecticSpace& space() const { return space_; }

  bool has_slots() const { return !slot_offsets_.empty(); }
  // Offsets of the five slots plus the total dimension.
  const std::vector<int>& slot_offsets() const { return slot_offsets_; }
  int slot_dim(int j) const;
  const std::optional<Subspace>& lagrangian() const { return u_; }

  // {x : slots before j vanish, slot j lies in H}. H lives in the slot's coordinates.
  Subspace slot_pullback(int j, const Subspace& h) const;
  // The block of the linear part of V from slot i to slot i + 2.
  Matrix graded_v_block(int i) const;

  bool is_bt1() const;
  bool satisfies_adjunction() const;
  // ker F = pr_2^-1(U) read in the twisted frame and ker V = pr_2^-1(U^(p)).
  bool satisfies_kernel_identities() const;

 private:
  DieudonneModule(gf::FieldPtr field, int g, SemilinearMap f, SemilinearMap v, Matrix pairing, bool check_adjunction);

  int g_ = 0;
  SemilinearMap f_;
  SemilinearMap v_;
  SymplecticSpace space_;
  std::vector<int> slot_offsets_;
  std::optional<Subspace> u_;
};

// {x : V x in C^(p)}.
Subspace v_preimage(const DieudonneModule& m, const Subspace& c);
// Slot pull-back of gr^i(V)^-1(H^(p)) for H inside slot i + 2, i in {0, 1, 2}.
Subspace graded_v_preimage(const DieudonneModule& m, int i, const Subspace& h);

struct CanonicalFlag {
  Flag flag;
  std::vector<int> fdims;  // dim F(C^(p)) per member
  int rounds = 0;
};

// Smallest flag containing ker V and closed under V-preimage and perp.
CanonicalFlag canonical_flag(const DieudonneModule& m);

// psi_w(i) = #{a <= i : w(a) > g} = i - r_w(i, g), i = 0..2g.
std::vector<int> final_type(const WeylElement& w);

struct EOType {
  WeylElement w;
  std::vector<int> psi;  // i = 0..2g
};

EOType eo_type(const DieudonneModule& m, const CanonicalFlag& flag);
EOType eo_type(const DieudonneModule& m);

// eo_type(from_lagrangian(U, g)).w == r_map_inv(classify_fine(U), g)
bool verify_pullback(const SymplecticSpace& space, const Subspace& u, int g);

}  // namespace eostrata::dieudonne
