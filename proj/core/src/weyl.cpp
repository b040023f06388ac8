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

#include "eostrata/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "eostrata/error.hpp"

namespace eostrata::weyl {

namespace {

void check_rank(int n) {
  require(n >= 0 && n <= kMaxRank,
          "rank " + std::to_string(n) + " outside [0, " + std::to_string(kMaxRank) + "]");
}

void check_same_rank(const WeylElement& a, const WeylElement& b) {
  require(a.rank() == b.rank(), "rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                    std::to_string(b.rank()));
}

void check_generator(int i, int n) {
  require(i >= 1 && i <= n,
          "generator s_" + std::to_string(i) + " not in S_" + std::to_string(n));
}

WeylElement times_simple(const WeylElement& w, int i) { return w.times_simple(i); }

WeylElement simple_times(int i, const WeylElement& w) { return w.simple_times(i); }

}  // namespace

WeylElement WeylElement::identity(int n) {
  check_rank(n);
  WeylElement w;
  w.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < 2 * n; ++i) w.perm_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return w;
}

WeylElement WeylElement::from_one_line(std::span<const int> images) {
  require(images.size() % 2 == 0, "one-line form must have even length");
  const int n = static_cast<int>(images.size() / 2);
  check_rank(n);
  const int m = 2 * n;
  std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
  WeylElement w;
  w.n_ = static_cast<std::uint8_t>(n);
  for (int i = 1; i <= m; ++i) {
    const int v = images[static_cast<std::size_t>(i - 1)];
    require(v >= 1 && v <= m, "one-line value out of range");
    require(!seen[static_cast<std::size_t>(v)], "one-line form is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
    w.perm_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(v);
  }
  for (int i = 1; i <= m; ++i) {
    require(w(m + 1 - i) == m + 1 - w(i), "one-line form violates w(2n+1-i) = 2n+1-w(i)");
  }
  return w;
}

WeylElement WeylElement::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span<const int>(images.begin(), images.size()));
}

std::vector<int> WeylElement::one_line() const {
  std::vector<int> out(static_cast<std::size_t>(degree()));
  for (int i = 0; i < degree(); ++i) out[static_cast<std::size_t>(i)] = perm_[static_cast<std::size_t>(i)];
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement inv = *this;
  for (int i = 1; i <= degree(); ++i) {
    inv.perm_[static_cast<std::size_t>((*this)(i) - 1)] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

bool WeylElement::is_identity() const {
  for (int i = 1; i <= degree(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= degree(); ++i) {
    if (i > 1) os << ',';
    os << (*this)(i);
  }
  os << ']';
  return os.str();
}

// Right multiplication by s_i swaps the values in positions i, i+1 (and the
// mirrored pair); left multiplication swaps the values i, i+1 (and mirrors).
WeylElement WeylElement::times_simple(int i) const {
  check_generator(i, n_);
  WeylElement x = *this;
  const int m = degree();
  auto at = [&x](int pos) -> std::uint8_t& { return x.perm_[static_cast<std::size_t>(pos - 1)]; };
  if (i == n_) {
    std::swap(at(n_), at(n_ + 1));
  } else {
    std::swap(at(i), at(i + 1));
    std::swap(at(m - i), at(m + 1 - i));
  }
  return x;
}

WeylElement WeylElement::simple_times(int i) const {
  check_generator(i, n_);
  WeylElement x = *this;
  const int m = degree();
  auto s = [&](int v) {
    if (i == n_) return v == n_ ? n_ + 1 : v == n_ + 1 ? n_ : v;
    if (v == i) return i + 1;
    if (v == i + 1) return i;
    if (v == m - i) return m + 1 - i;
    if (v == m + 1 - i) return m - i;
    return v;
  };
  for (int p = 0; p < m; ++p) {
    x.perm_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(s(perm_[static_cast<std::size_t>(p)]));
  }
  return x;
}

// ---------------------------------------------------------------------------

ParabolicType::ParabolicType(int n) : n_(n) { check_rank(n); }

ParabolicType::ParabolicType(int n, std::initializer_list<int> generators) : ParabolicType(n) {
  for (int i : generators) insert(i);
}

ParabolicType ParabolicType::from_mask(int n, std::uint32_t mask) {
  ParabolicType t(n);
  require((mask >> n) == 0, "parabolic mask has bits beyond the rank");
  t.mask_ = mask;
  return t;
}

ParabolicType ParabolicType::full(int n) {
  return from_mask(n, n == 0 ? 0u : ((1u << n) - 1u));
}

ParabolicType ParabolicType::siegel(int n) {
  return from_mask(n, n <= 1 ? 0u : ((1u << (n - 1)) - 1u));
}

bool ParabolicType::contains(int i) const {
  return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1u);
}

void ParabolicType::insert(int i) {
  check_generator(i, n_);
  mask_ |= 1u << (i - 1);
}

void ParabolicType::erase(int i) {
  check_generator(i, n_);
  mask_ &= ~(1u << (i - 1));
}

int ParabolicType::size() const { return std::popcount(mask_); }

std::vector<int> ParabolicType::members() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool ParabolicType::is_subset_of(const ParabolicType& other) const {
  return (mask_ & ~other.mask_) == 0;
}

std::string ParabolicType::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

ParabolicType operator&(const ParabolicType& a, const ParabolicType& b) {
  require(a.n_ == b.n_, "parabolic rank mismatch");
  return ParabolicType::from_mask(a.n_, a.mask_ & b.mask_);
}

ParabolicType operator|(const ParabolicType& a, const ParabolicType& b) {
  require(a.n_ == b.n_, "parabolic rank mismatch");
  return ParabolicType::from_mask(a.n_, a.mask_ | b.mask_);
}

// ---------------------------------------------------------------------------

ReducedWord ReducedWord::make(int n, std::vector<int> letters) {
  check_rank(n);
  for (int a : letters) check_generator(a, n);
  const WeylElement w = evaluate_word(n, letters);
  require(weyl::length(w) == static_cast<int>(letters.size()), "word is not reduced");
  ReducedWord word;
  word.n_ = n;
  word.letters_ = std::move(letters);
  return word;
}

WeylElement ReducedWord::evaluate() const { return evaluate_word(n_, letters_); }

std::string ReducedWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (int a : letters_) out += "s" + std::to_string(a);
  return out;
}

// ---------------------------------------------------------------------------

WeylElement simple_reflection(int i, int n) {
  check_rank(n);
  check_generator(i, n);
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  std::iota(img.begin(), img.end(), 1);
  auto swap_pos = [&](int a, int b) { std::swap(img[static_cast<std::size_t>(a - 1)], img[static_cast<std::size_t>(b - 1)]); };
  if (i == n) {
    swap_pos(n, n + 1);
  } else {
    swap_pos(i, i + 1);
    swap_pos(2 * n - i, 2 * n + 1 - i);
  }
  return WeylElement::from_one_line(img);
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  check_same_rank(a, b);
  WeylElement out = a;
  for (int i = 1; i <= a.degree(); ++i) {
    out.perm_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(a(b(i)));
  }
  return out;
}

WeylElement evaluate_word(int n, std::span<const int> letters) {
  WeylElement w = WeylElement::identity(n);
  for (int a : letters) w = times_simple(w, a);
  return w;
}

bool has_right_descent(const WeylElement& w, int i) {
  check_generator(i, w.rank());
  return w(i) > w(i + 1);
}

bool has_left_descent(const WeylElement& w, int i) {
  return has_right_descent(w.inverse(), i);
}

ParabolicType right_descents(const WeylElement& w) {
  ParabolicType d(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    if (has_right_descent(w, i)) d.insert(i);
  }
  return d;
}

ParabolicType left_descents(const WeylElement& w) { return right_descents(w.inverse()); }

namespace {

int first_descent(const ParabolicType& d, TieBreak tie) {
  const auto m = d.members();
  return tie == TieBreak::kSmallestFirst ? m.front() : m.back();
}

}  // namespace

int length(const WeylElement& w) {
  WeylElement x = w;
  int steps = 0;
  for (;;) {
    const ParabolicType d = right_descents(x);
    if (d.empty()) return steps;
    x = times_simple(x, first_descent(d, TieBreak::kSmallestFirst));
    ++steps;
  }
}

ReducedWord reduced_word(const WeylElement& w, TieBreak tie) {
  std::vector<int> rev;
  WeylElement x = w;
  for (;;) {
    const ParabolicType d = right_descents(x);
    if (d.empty()) break;
    const int i = first_descent(d, tie);
    rev.push_back(i);
    x = times_simple(x, i);
  }
  std::reverse(rev.begin(), rev.end());
  return ReducedWord::make(w.rank(), std::move(rev));
}

ParabolicType support(const WeylElement& w, TieBreak tie) {
  ParabolicType s(w.rank());
  const ReducedWord word = reduced_word(w, tie);
  for (int a : word.letters()) s.insert(a);
  return s;
}

bool in_parabolic_subgroup(const WeylElement& w, const ParabolicType& J) {
  require(w.rank() == J.rank(), "parabolic rank mismatch");
  return support(w).is_subset_of(J);
}

bool is_min_left_rep(const WeylElement& w, const ParabolicType& I) {
  require(w.rank() == I.rank(), "parabolic rank mismatch");
  return (left_descents(w) & I).empty();
}

bool is_min_right_rep(const WeylElement& w, const ParabolicType& J) {
  require(w.rank() == J.rank(), "parabolic rank mismatch");
  return (right_descents(w) & J).empty();
}

WeylElement min_double_coset_rep(const WeylElement& w, const ParabolicType& I,
                                 const ParabolicType& J, StripOrder order) {
  require(w.rank() == I.rank() && w.rank() == J.rank(), "parabolic rank mismatch");
  WeylElement x = w;
  for (;;) {
    const ParabolicType left = left_descents(x) & I;
    const ParabolicType right = right_descents(x) & J;
    if (left.empty() && right.empty()) return x;
    const bool go_left = order == StripOrder::kLeftFirst ? !left.empty() : right.empty();
    if (go_left) {
      x = simple_times(left.members().front(), x);
    } else {
      x = times_simple(x, right.members().front());
    }
  }
}

WeylElement longest_element(int n) {
  check_rank(n);
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= 2 * n; ++i) img[static_cast<std::size_t>(i - 1)] = 2 * n + 1 - i;
  return WeylElement::from_one_line(img);
}

bool length_then_lex(const WeylElement& a, const WeylElement& b) {
  const int la = length(a);
  const int lb = length(b);
  if (la != lb) return la < lb;
  return a < b;
}

namespace {

void sort_by_length(std::vector<WeylElement>& v) {
  std::vector<std::pair<int, WeylElement>> keyed;
  keyed.reserve(v.size());
  for (const auto& w : v) keyed.emplace_back(length(w), w);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

std::vector<WeylElement> build_group(int n) {
  // Choose images of 1..n: a permutation of the n pairs {v, 2n+1-v} together
  // with a choice of member in each pair.
  std::vector<WeylElement> out;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  do {
    for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
      for (int i = 1; i <= n; ++i) {
        const int base = order[static_cast<std::size_t>(i - 1)];
        const int v = ((signs >> (i - 1)) & 1u) ? 2 * n + 1 - base : base;
        img[static_cast<std::size_t>(i - 1)] = v;
        img[static_cast<std::size_t>(2 * n - i)] = 2 * n + 1 - v;
      }
      out.push_back(WeylElement::from_one_line(img));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  sort_by_length(out);
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<WeylElement>& enumerate_group(int n) {
  require(n >= 0 && n <= 7, "enumerate_group supports rank <= 7");
  static std::map<int, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_group(n)).first;
  return it->second;
}

std::vector<WeylElement> enumerate_IW(int n) {
  check_rank(n);
  std::vector<WeylElement> out;
  std::vector<int> inv(static_cast<std::size_t>(2 * n));
  for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
    std::vector<int> chosen;
    for (int i = 1; i <= n; ++i) chosen.push_back(((signs >> (i - 1)) & 1u) ? 2 * n + 1 - i : i);
    std::sort(chosen.begin(), chosen.end());
    for (int v = 1; v <= n; ++v) {
      const int pos = chosen[static_cast<std::size_t>(v - 1)];
      inv[static_cast<std::size_t>(v - 1)] = pos;
      inv[static_cast<std::size_t>(2 * n - v)] = 2 * n + 1 - pos;
    }
    out.push_back(WeylElement::from_one_line(inv).inverse());
  }
  sort_by_length(out);
  return out;
}

const std::vector<WeylElement>& double_coset_reps(const ParabolicType& I, const ParabolicType& J) {
  require(I.rank() == J.rank(), "parabolic rank mismatch");
  const int n = I.rank();
  const auto& group = enumerate_group(n);
  using Key = std::tuple<int, std::uint32_t, std::uint32_t>;
  static std::map<Key, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  const Key key{n, I.mask(), J.mask()};
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::set<WeylElement> reps;
    for (const auto& w : group) reps.insert(min_double_coset_rep(w, I, J));
    std::vector<WeylElement> v(reps.begin(), reps.end());
    sort_by_length(v);
    it = cache.emplace(key, std::move(v)).first;
  }
  return it->second;
}

ReducedWord canonical_word_IW(int n, std::vector<int> subset) {
  check_rank(n);
  std::sort(subset.begin(), subset.end());
  require(std::adjacent_find(subset.begin(), subset.end()) == subset.end(),
          "canonical_word_IW: repeated index");
  for (int i : subset) check_generator(i, n);

  auto factor_word = [n](const std::vector<int>& starts) {
    std::vector<int> letters;
    for (int i : starts) {
      for (int a = n; a >= i; --a) letters.push_back(a);
    }
    return letters;
  };
  std::vector<int> descending(subset.rbegin(), subset.rend());
  std::vector<std::vector<int>> candidates{factor_word(descending), factor_word(subset)};
  if (candidates[0] == candidates[1]) candidates.pop_back();

  const ParabolicType siegel = ParabolicType::siegel(n);
  std::vector<ReducedWord> qualifying;
  for (auto& letters : candidates) {
    const WeylElement w = evaluate_word(n, letters);
    if (length(w) == static_cast<int>(letters.size()) && is_min_left_rep(w, siegel)) {
      qualifying.push_back(ReducedWord::make(n, letters));
    }
  }
  ensure(qualifying.size() == 1,
         "canonical_word_IW: expected exactly one qualifying factor order, got " +
             std::to_string(qualifying.size()));
  return qualifying.front();
}

int rank_count(const WeylElement& w, int i, int j) {
  const int m = w.degree();
  require(i >= 0 && i <= m && j >= 0 && j <= m, "rank_count index out of range");
  int count = 0;
  for (int a = 1; a <= i; ++a) {
    if (w(a) <= j) ++count;
  }
  return count;
}

bool in_fixed_block(const WeylElement& w, int c) {
  const int g = w.rank();
  require(c >= 0 && c <= g, "block size out of range");
  for (int i = 1; i <= g - c; ++i) {
    if (w(i) != i) return false;
  }
  return true;
}

WeylElement r_map(const WeylElement& w, int c) {
  const int g = w.rank();
  require(c >= 0 && c <= g, "r_map: c out of range");
  require(in_fixed_block(w, c), "r_map: element does not fix 1..g-c");
  const int shift = g - c;
  std::vector<int> img(static_cast<std::size_t>(2 * c));
  for (int i = 1; i <= 2 * c; ++i) img[static_cast<std::size_t>(i - 1)] = w(shift + i) - shift;
  return WeylElement::from_one_line(img);
}

WeylElement r_map_inv(const WeylElement& w, int g) {
  const int c = w.rank();
  check_rank(g);
  require(c <= g, "r_map_inv: target rank smaller than source rank");
  const int shift = g - c;
  std::vector<int> img(static_cast<std::size_t>(2 * g));
  std::iota(img.begin(), img.end(), 1);
  for (int i = 1; i <= 2 * c; ++i) img[static_cast<std::size_t>(shift + i - 1)] = w(i) + shift;
  return WeylElement::from_one_line(img);
}

std::optional<int> class_c(const WeylElement& w) {
  const int g = w.rank();
  require(is_min_left_rep(w, ParabolicType::siegel(g)), "class_c: element not in ^IW_g");
  int fixed = 0;
  while (fixed < g && w(fixed + 1) == fixed + 1) ++fixed;
  const int c = g - fixed;
  if (2 * c > g) return std::nullopt;
  return c;
}

}  // namespace eostrata::weyl
