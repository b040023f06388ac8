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

#include "eostrata/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "eostrata/error.hpp"

namespace eostrata::gf {

namespace {

constexpr Elem kTableLimit = 256;
constexpr Elem kFrobTableLimit = 1u << 12;

// Remainder of a modulo the monic-or-not polynomial b over F_p (coefficient
// vectors, lowest degree first).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = static_cast<int>(b.size()) - 1;
  while (db > 0 && b[static_cast<std::size_t>(db)] == 0) --db;
  int lead_inv = 1;
  {
    const int lead = b[static_cast<std::size_t>(db)];
    while ((lead * lead_inv) % p != 1) ++lead_inv;
  }
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[static_cast<std::size_t>(i)] % p;
    if (c == 0) continue;
    const int factor = (c * lead_inv) % p;
    for (int j = 0; j <= db; ++j) {
      auto& slot = a[static_cast<std::size_t>(i - db + j)];
      slot = ((slot - factor * b[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  a.resize(static_cast<std::size_t>(db));
  return a;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, std::span<const int> coeffs) {
  require(is_prime(p), "is_irreducible: p must be prime");
  std::vector<int> f(coeffs.begin(), coeffs.end());
  while (!f.empty() && f.back() % p == 0) f.pop_back();
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int e = 1; 2 * e <= d; ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<int> divisor(static_cast<std::size_t>(e + 1));
      std::uint64_t c = code;
      for (int i = 0; i < e; ++i) {
        divisor[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
        c /= static_cast<std::uint64_t>(p);
      }
      divisor[static_cast<std::size_t>(e)] = 1;
      const auto r = poly_mod(f, divisor, p);
      bool zero = true;
      for (int x : r) zero = zero && (x == 0);
      if (zero) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::get(int p, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const Field>(new Field(p, k));
  cache.emplace(key, field);
  return field;
}

Field::Field(int p, int k) : p_(p), k_(k) {
  require(is_prime(p), "Field: characteristic " + std::to_string(p) + " is not prime");
  require(k >= 1, "Field: degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    require(q <= kMaxOrder, "Field: order p^k exceeds the desk-scale guard 2^20");
  }
  q_ = static_cast<Elem>(q);
  pow_p_.resize(static_cast<std::size_t>(k + 1));
  pow_p_[0] = 1;
  for (int i = 1; i <= k; ++i) pow_p_[static_cast<std::size_t>(i)] = pow_p_[static_cast<std::size_t>(i - 1)] * static_cast<Elem>(p);

  for (Elem code = 0; code < q_; ++code) {
    std::vector<int> f(static_cast<std::size_t>(k + 1));
    Elem c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<Elem>(p));
      c /= static_cast<Elem>(p);
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(p, f)) {
      modulus_ = std::move(f);
      break;
    }
  }
  ensure(!modulus_.empty(), "Field: no irreducible modulus found");

  if (q_ <= kTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    inv_table_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) {
        add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
        const Elem ab = mul_poly(a, b);
        mul_table_[static_cast<std::size_t>(a) * q_ + b] = ab;
        if (ab == 1) inv_table_[a] = b;
      }
    }
  }
  if (q_ <= kFrobTableLimit) {
    frob_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) frob_table_[a] = pow(a, static_cast<std::uint64_t>(p_));
  }
}

Elem Field::generator() const {
  if (k_ >= 2) return static_cast<Elem>(p_);
  return from_int(-modulus_[0]);
}

Elem Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::from_coefficients(std::span<const int> coeffs) const {
  require(static_cast<int>(coeffs.size()) <= k_, "from_coefficients: too many coefficients");
  Elem code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    require(coeffs[i] >= 0 && coeffs[i] < p_, "from_coefficients: coefficient not reduced mod p");
    code += static_cast<Elem>(coeffs[i]) * pow_p_[i];
  }
  return code;
}

std::vector<int> Field::coefficients(Elem a) const {
  require(contains(a), "coefficients: element code out of range");
  std::vector<int> out(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<Elem>(p_));
    a /= static_cast<Elem>(p_);
  }
  return out;
}

Elem Field::add_digits(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  const Elem p = static_cast<Elem>(p_);
  for (int i = 0; i < k_; ++i) {
    const Elem d = (a % p + b % p) % p;
    out += d * pow_p_[static_cast<std::size_t>(i)];
    a /= p;
    b /= p;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  return add_digits(a, b);
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem out = 0;
  const Elem p = static_cast<Elem>(p_);
  for (int i = 0; i < k_; ++i) {
    const Elem d = a % p;
    out += ((p - d) % p) * pow_p_[static_cast<std::size_t>(i)];
    a /= p;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_poly(Elem a, Elem b) const {
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * k_), 0);
  for (int i = 0; i < k_; ++i) {
    if (ca[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = (slot + ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) % p_;
    }
  }
  const auto r = poly_mod(std::move(prod), modulus_, p_);
  return from_coefficients(r);
}

Elem Field::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  if (a == 0 || b == 0) return 0;
  if (a == 1) return b;
  if (b == 1) return a;
  return mul_poly(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  require(contains(a), "inv: element code out of range");
  if (a == 0) throw InvalidArgument("inv: zero has no inverse");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

Elem Field::frobenius(Elem a, int r) const {
  int steps = ((r % k_) + k_) % k_;
  if (!frob_table_.empty()) {
    for (int i = 0; i < steps; ++i) a = frob_table_[a];
    return a;
  }
  for (int i = 0; i < steps; ++i) a = pow(a, static_cast<std::uint64_t>(p_));
  return a;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) os << '^' << k_;
  return os.str();
}

// ---------------------------------------------------------------------------

GFElem::GFElem(FieldPtr field, Elem code) : field_(std::move(field)), code_(code) {
  require(field_ != nullptr, "GFElem: null field");
  require(field_->contains(code_), "GFElem: code out of range");
}

namespace {

const FieldPtr& common_field(const GFElem& a, const GFElem& b) {
  require(a.field() == b.field(), "field context mismatch");
  return a.field();
}

}  // namespace

GFElem GFElem::inv() const { return GFElem(field_, field_->inv(code_)); }
GFElem GFElem::frobenius(int r) const { return GFElem(field_, field_->frobenius(code_, r)); }

GFElem operator+(const GFElem& a, const GFElem& b) {
  const auto& f = common_field(a, b);
  return GFElem(f, f->add(a.code_, b.code_));
}

GFElem operator-(const GFElem& a, const GFElem& b) {
  const auto& f = common_field(a, b);
  return GFElem(f, f->sub(a.code_, b.code_));
}

GFElem operator-(const GFElem& a) { return GFElem(a.field_, a.field_->neg(a.code_)); }

GFElem operator*(const GFElem& a, const GFElem& b) {
  const auto& f = common_field(a, b);
  return GFElem(f, f->mul(a.code_, b.code_));
}

GFElem operator/(const GFElem& a, const GFElem& b) {
  const auto& f = common_field(a, b);
  return GFElem(f, f->div(a.code_, b.code_));
}

bool operator==(const GFElem& a, const GFElem& b) {
  return a.field_ == b.field_ && a.code_ == b.code_;
}

// ---------------------------------------------------------------------------

Embedding::Embedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  require(source_ && target_, "Embedding: null field");
  require(source_->characteristic() == target_->characteristic(),
          "Embedding: characteristic mismatch");
  require(target_->degree() % source_->degree() == 0,
          "Embedding: source degree does not divide target degree");
  const auto& mod = source_->modulus();
  bool found = false;
  for (Elem x = 0; x < target_->order() && !found; ++x) {
    Elem value = 0;
    for (auto it = mod.rbegin(); it != mod.rend(); ++it) {
      value = target_->add(target_->mul(value, x), target_->from_int(*it));
    }
    if (value == 0) {
      t_image_ = x;
      found = true;
    }
  }
  ensure(found, "Embedding: source modulus has no root in the target field");
  if (source_->order() <= (1u << 16)) {
    table_.resize(source_->order());
    for (Elem a = 0; a < source_->order(); ++a) {
      Elem value = 0;
      const auto coeffs = source_->coefficients(a);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        value = target_->add(target_->mul(value, t_image_), target_->from_int(*it));
      }
      table_[a] = value;
    }
  }
}

Elem Embedding::apply(Elem a) const {
  require(source_->contains(a), "Embedding: element code out of range");
  if (!table_.empty()) return table_[a];
  Elem value = 0;
  const auto coeffs = source_->coefficients(a);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    value = target_->add(target_->mul(value, t_image_), target_->from_int(*it));
  }
  return value;
}

GFElem Embedding::apply(const GFElem& a) const {
  require(a.field() == source_, "Embedding: element from another field");
  return GFElem(target_, apply(a.code()));
}

}  // namespace eostrata::gf
