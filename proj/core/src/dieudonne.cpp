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

#include "eostrata/dieudonne.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "eostrata/dlclassify.hpp"
#include "eostrata/error.hpp"

namespace eostrata::dieudonne {

namespace {

Subspace zero_like(const gf::FieldPtr& field, int n) { return Subspace::zero(field, n); }

}  // namespace

SemilinearMap::SemilinearMap(Matrix matrix, int twist) : matrix_(std::move(matrix)), twist_(twist) {
  require(matrix_.field() != nullptr, "SemilinearMap: empty matrix");
}

Vector SemilinearMap::apply(std::span<const Elem> x) const {
  require(static_cast<int>(x.size()) == matrix_.cols(), "SemilinearMap: dimension mismatch");
  Vector y(x.begin(), x.end());
  for (auto& e : y) e = field()->frobenius(e, twist_);
  return matrix_.apply(y);
}

Subspace SemilinearMap::image(const Subspace& c) const {
  require(c.ambient() == matrix_.cols(), "SemilinearMap::image: dimension mismatch");
  if (c.dim() == 0) return zero_like(field(), matrix_.rows());
  return Subspace::span(c.twist(twist_).basis() * matrix_.transpose());
}

Subspace SemilinearMap::image() const { return image(Subspace::full(field(), matrix_.cols())); }

Subspace SemilinearMap::kernel() const { return Subspace::span(linalg::nullspace(matrix_)).twist(-twist_); }

Subspace SemilinearMap::preimage(const Subspace& c) const {
  require(c.ambient() == matrix_.rows(), "SemilinearMap::preimage: dimension mismatch");
  const Matrix ann = linalg::nullspace(c.basis());
  if (ann.rows() == 0) return Subspace::full(field(), matrix_.cols());
  return Subspace::span(linalg::nullspace(ann * matrix_)).twist(-twist_);
}

SemilinearMap compose(const SemilinearMap& a, const SemilinearMap& b) {
  return SemilinearMap(a.matrix_ * b.matrix_.frobenius(a.twist_), a.twist_ + b.twist_);
}

// ---------------------------------------------------------------------------

DieudonneModule::DieudonneModule(gf::FieldPtr field, int g, SemilinearMap f, SemilinearMap v, Matrix pairing)
    : DieudonneModule(std::move(field), g, std::move(f), std::move(v), std::move(pairing), true) {}

DieudonneModule::DieudonneModule(gf::FieldPtr field, int g, SemilinearMap f, SemilinearMap v, Matrix pairing,
                                 bool check_adjunction)
    : g_(g), f_(std::move(f)), v_(std::move(v)), space_(std::move(field), std::move(pairing)) {
  require(g >= 1, "module needs g >= 1");
  require(space_.dim() == 2 * g, "pairing has the wrong size");
  require(f_.twist() == 1 && v_.twist() == -1, "F must have twist 1 and V twist -1");
  for (const Matrix* m : {&f_.matrix(), &v_.matrix()}) {
    require(m->field() == space_.field() && m->rows() == 2 * g && m->cols() == 2 * g,
            "F and V must be square of size 2g over the module field");
  }
  ensure(is_bt1(), "module violates ker F = im V, ker V = im F or dim ker F = g");
  if (check_adjunction) ensure(satisfies_adjunction(), "module violates <Fx, y> = <x, Vy>^p");
}

bool DieudonneModule::is_bt1() const {
  const Subspace kf = f_.kernel();
  return kf.dim() == g_ && kf == v_.image() && v_.kernel() == f_.image();
}

bool DieudonneModule::satisfies_adjunction() const {
  // <F e_i, e_j> = (F^T P)_ij and <e_i, V e_j>^p = sigma(P V)_ij.
  const Matrix& p = pairing();
  return f_.matrix().transpose() * p == (p * v_.matrix()).frobenius(1);
}

DieudonneModule DieudonneModule::from_lagrangian(const SymplecticSpace& space, const Subspace& u, int g,
                                                 FSign sign) {
  require(space.is_lagrangian(u), "from_lagrangian: U is not Lagrangian");
  const int c = space.n();
  require(2 * c <= g, "from_lagrangian: need 2c <= g");
  const auto& field = space.field();
  const auto& fld = *field;
  const int k = g - 2 * c;
  const std::vector<int> o = {0, c, c + k, 3 * c + k, 3 * c + 2 * k, 4 * c + 2 * k};
  const int n = 2 * g;

  const Matrix& ub = u.basis();
  const Matrix sub = u.twist(1).basis();
  const std::vector<int>& piv = u.pivots();
  std::vector<int> np;
  for (int j = 0; j < 2 * c; ++j) {
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) np.push_back(j);
  }
  const Elem minus_one = fld.neg(1);

  // Linear part of V, from N to N^(p).
  Matrix a(field, n, n);
  for (int i = 0; i < c; ++i) {
    for (int r = 0; r < 2 * c; ++r) a.at(o[2] + r, o[0] + i) = ub.at(i, r);
  }
  for (int t = 0; t < k; ++t) a.at(o[3] + t, o[1] + t) = 1;
  for (int j = 0; j < c; ++j) {
    a.at(o[4] + j, o[2] + np[static_cast<std::size_t>(j)]) = 1;
    for (int i = 0; i < c; ++i) {
      a.at(o[4] + j, o[2] + piv[static_cast<std::size_t>(i)]) = fld.neg(sub.at(i, np[static_cast<std::size_t>(j)]));
    }
  }

  // Linear part of F, from N^(p) to N.
  Matrix b(field, n, n);
  for (int i = 0; i < c; ++i) {
    for (int r = 0; r < 2 * c; ++r) b.at(o[2] + r, o[0] + i) = fld.neg(sub.at(i, r));
  }
  for (int t = 0; t < k; ++t) b.at(o[3] + t, o[1] + t) = sign == FSign::kStandard ? minus_one : 1;
  for (int j = 0; j < c; ++j) {
    b.at(o[4] + j, o[2] + np[static_cast<std::size_t>(j)]) = minus_one;
    for (int i = 0; i < c; ++i) {
      b.at(o[4] + j, o[2] + piv[static_cast<std::size_t>(i)]) = ub.at(i, np[static_cast<std::size_t>(j)]);
    }
  }

  // Pairing: U against L/U through the form of L, the form of L on the
  // middle slot, identity between K and K^(p).
  Matrix p(field, n, n);
  const Matrix ug = ub * space.gram();
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      const Elem v = ug.at(i, np[static_cast<std::size_t>(j)]);
      p.at(o[0] + i, o[4] + j) = fld.neg(v);
      p.at(o[4] + j, o[0] + i) = v;
    }
  }
  p.set_block(o[2], o[2], space.gram());
  for (int t = 0; t < k; ++t) {
    p.at(o[1] + t, o[3] + t) = 1;
    p.at(o[3] + t, o[1] + t) = minus_one;
  }

  DieudonneModule m(field, g, SemilinearMap(std::move(b), 1), SemilinearMap(a.frobenius(-1), -1), std::move(p),
                    sign == FSign::kStandard);
  m.slot_offsets_ = o;
  m.u_ = u;
  ensure(m.satisfies_kernel_identities(), "split module violates ker F = pr2^-1(U) or ker V = pr2^-1(U^(p))");
  return m;
}

DieudonneModule DieudonneModule::superspecial(gf::FieldPtr field, int g) {
  require(g >= 1, "superspecial: need g >= 1");
  const int n = 2 * g;
  Matrix f(field, n, n);
  Matrix v(field, n, n);
  Matrix p(field, n, n);
  const Elem minus_one = field->neg(1);
  for (int t = 0; t < g; ++t) {
    f.at(2 * t + 1, 2 * t) = 1;
    v.at(2 * t + 1, 2 * t) = minus_one;
    p.at(2 * t, 2 * t + 1) = 1;
    p.at(2 * t + 1, 2 * t) = minus_one;
  }
  return DieudonneModule(field, g, SemilinearMap(std::move(f), 1), SemilinearMap(std::move(v), -1), std::move(p));
}

int DieudonneModule::slot_dim(int j) const {
  require(has_slots(), "module has no slot structure");
  require(j >= 0 && j < 5, "slot index out of range");
  return slot_offsets_[static_cast<std::size_t>(j + 1)] - slot_offsets_[static_cast<std::size_t>(j)];
}

Subspace DieudonneModule::slot_pullback(int j, const Subspace& h) const {
  const int d = slot_dim(j);
  require(h.ambient() == d && h.field() == field(), "slot_pullback: subspace not in the slot");
  const int o = slot_offsets_[static_cast<std::size_t>(j)];
  const int end = slot_offsets_[static_cast<std::size_t>(j + 1)];
  Matrix rows(field(), 0, dim());
  for (int i = 0; i < h.dim(); ++i) {
    Vector r(static_cast<std::size_t>(dim()), 0);
    for (int t = 0; t < d; ++t) r[static_cast<std::size_t>(o + t)] = h.basis().at(i, t);
    rows.append_row(r);
  }
  for (int t = end; t < dim(); ++t) {
    Vector r(static_cast<std::size_t>(dim()), 0);
    r[static_cast<std::size_t>(t)] = 1;
    rows.append_row(r);
  }
  return Subspace::span(rows);
}

Matrix DieudonneModule::graded_v_block(int i) const {
  require(i >= 0 && i <= 2, "graded_v_block: i must be 0, 1 or 2");
  // V = sigma^-1(A) sigma^-1, so the linear block is sigma(V's matrix).
  const Matrix a = v_.matrix().frobenius(1);
  return a.block(slot_offsets_[static_cast<std::size_t>(i + 2)], slot_offsets_[static_cast<std::size_t>(i)],
                 slot_dim(i + 2), slot_dim(i));
}

bool DieudonneModule::satisfies_kernel_identities() const {
  if (!u_) return false;
  // ker of the linear part of F, a subspace of N^(p).
  const Subspace kf = Subspace::span(linalg::nullspace(f_.matrix()));
  const Subspace kv = v_.kernel();
  return kf == slot_pullback(2, *u_) && kv == slot_pullback(2, u_->twist(1));
}

// ---------------------------------------------------------------------------

Subspace v_preimage(const DieudonneModule& m, const Subspace& c) {
  // V x in C^(p) with V x = sigma^-1(A x) is the same as V x in C.
  return m.V().preimage(c);
}

Subspace graded_v_preimage(const DieudonneModule& m, int i, const Subspace& h) {
  const Matrix block = m.graded_v_block(i);
  const Subspace ht = h.twist(1);
  const Matrix ann = linalg::nullspace(ht.basis());
  const Subspace g = ann.rows() == 0 ? Subspace::full(m.field(), m.slot_dim(i))
                                     : Subspace::span(linalg::nullspace(ann * block));
  return m.slot_pullback(i, g);
}

CanonicalFlag canonical_flag(const DieudonneModule& m) {
  std::set<Subspace> members{m.V().kernel()};
  CanonicalFlag out;
  for (;;) {
    ensure(out.rounds <= 4 * m.g(), "canonical flag did not stabilize");
    std::set<Subspace> next = members;
    for (const Subspace& c : members) {
      const Subspace pre = v_preimage(m, c);
      next.insert(pre);
      next.insert(m.space().perp(pre));
      next.insert(m.space().perp(c));
    }
    ++out.rounds;
    if (next == members) break;
    members = std::move(next);
  }
  out.flag = Flag::from_members(m.field(), m.dim(), std::vector<Subspace>(members.begin(), members.end()));
  ensure(out.flag.is_self_dual(m.space()), "canonical flag is not self-dual");
  for (const Subspace& c : out.flag.members()) {
    const Subspace pre = v_preimage(m, c);
    ensure(std::find(out.flag.members().begin(), out.flag.members().end(), pre) != out.flag.members().end(),
           "canonical flag is not closed under V-preimage");
    out.fdims.push_back(m.F().image(c).dim());
  }
  return out;
}

std::vector<int> final_type(const WeylElement& w) {
  const int g = w.rank();
  std::vector<int> psi(static_cast<std::size_t>(2 * g + 1), 0);
  for (int i = 1; i <= 2 * g; ++i) psi[static_cast<std::size_t>(i)] = psi[static_cast<std::size_t>(i - 1)] + (w(i) > g ? 1 : 0);
  return psi;
}

EOType eo_type(const DieudonneModule& m, const CanonicalFlag& cf) {
  const int g = m.g();
  const std::vector<int> dims = cf.flag.dims();
  std::vector<int> psi(static_cast<std::size_t>(2 * g + 1), 0);
  for (std::size_t s = 0; s + 1 < dims.size(); ++s) {
    const int d0 = dims[s];
    const int d1 = dims[s + 1];
    const int f0 = cf.fdims[s];
    const int inc = cf.fdims[s + 1] - f0;
    ensure(inc == 0 || inc == d1 - d0,
           "F-image dimension neither constant nor injective on a canonical gap");
    for (int i = d0; i <= d1; ++i) psi[static_cast<std::size_t>(i)] = f0 + (inc == 0 ? 0 : i - d0);
  }
  const WeylElement* found = nullptr;
  int hits = 0;
  const std::vector<WeylElement> table = weyl::enumerate_IW(g);
  for (const auto& w : table) {
    if (final_type(w) == psi) {
      found = &w;
      ++hits;
    }
  }
  ensure(hits == 1, "final type matches " + std::to_string(hits) + " elements");
  const std::vector<int> check = final_type(*found);
  for (std::size_t s = 0; s < dims.size(); ++s) {
    ensure(check[static_cast<std::size_t>(dims[s])] == cf.fdims[s], "final type disagrees at a canonical member");
  }
  return {*found, psi};
}

EOType eo_type(const DieudonneModule& m) { return eo_type(m, canonical_flag(m)); }

bool verify_pullback(const SymplecticSpace& space, const Subspace& u, int g) {
  const EOType t = eo_type(DieudonneModule::from_lagrangian(space, u, g));
  return t.w == weyl::r_map_inv(dlclassify::classify_fine(space, u), g);
}

}  // namespace eostrata::dieudonne
