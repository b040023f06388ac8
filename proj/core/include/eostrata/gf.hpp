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

// Small finite fields F_{p^k} in a polynomial basis.
//
// Elements are encoded as integers: the element sum c_i t^i (0 <= c_i < p)
// has code sum c_i p^i. The modulus for each (p, k) is the monic irreducible
// polynomial of degree k whose lower coefficients, read as such a code, are
// smallest; this makes every serialized value reproducible.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace eostrata::gf {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxOrder = 1u << 20;

class Field {
 public:
  // Shared, immutable context for (p, k). Throws for non-prime p or
  // p^k > kMaxOrder.
  static std::shared_ptr<const Field> get(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  Elem order() const { return q_; }
  // Coefficients c_0..c_k of the monic modulus (c_k = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // The class of t modulo the modulus.
  Elem generator() const;
  Elem from_int(long long v) const;
  Elem from_coefficients(std::span<const int> coeffs) const;
  std::vector<int> coefficients(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // a^(p^r); r may be negative and is reduced mod k.
  Elem frobenius(Elem a, int r) const;

  bool contains(Elem a) const { return a < q_; }
  std::string describe() const;

 private:
  Field(int p, int k);
  Elem mul_poly(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b) const;

  int p_ = 2;
  int k_ = 1;
  Elem q_ = 2;
  std::vector<int> modulus_;
  std::vector<Elem> pow_p_;  // p^i
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> inv_table_;
  std::vector<Elem> frob_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int p);
// Irreducibility of a polynomial over F_p given by coefficients c_0..c_d.
bool is_irreducible(int p, std::span<const int> coeffs);

// Value type pairing a context with an element code.
class GFElem {
 public:
  GFElem(FieldPtr field, Elem code);
  static GFElem zero(FieldPtr field) { return GFElem(field, 0); }
  static GFElem one(FieldPtr field) { return GFElem(field, 1); }

  const FieldPtr& field() const { return field_; }
  Elem code() const { return code_; }
  std::vector<int> coefficients() const { return field_->coefficients(code_); }
  bool is_zero() const { return code_ == 0; }

  GFElem inv() const;
  GFElem frobenius(int r) const;

  friend GFElem operator+(const GFElem& a, const GFElem& b);
  friend GFElem operator-(const GFElem& a, const GFElem& b);
  friend GFElem operator-(const GFElem& a);
  friend GFElem operator*(const GFElem& a, const GFElem& b);
  friend GFElem operator/(const GFElem& a, const GFElem& b);
  friend bool operator==(const GFElem& a, const GFElem& b);

 private:
  FieldPtr field_;
  Elem code_ = 0;
};

// A fixed ring embedding F_{p^k} -> F_{p^{km}}: t goes to the first root of
// the source modulus (in code order) inside the target.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem image_of_generator() const { return t_image_; }
  Elem apply(Elem a) const;
  GFElem apply(const GFElem& a) const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  Elem t_image_ = 0;
  std::vector<Elem> table_;
};

}  // namespace eostrata::gf
