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

// The Weyl group W_n of Sp_2n in its symmetric-permutation model: bijections
// w of {1,...,2n} with w(2n+1-i) = 2n+1-w(i).
//
// Conventions used throughout the library:
//   * compose(a, b) applies b first: (a*b)(i) = a(b(i)).
//   * s_n = (n, n+1) and s_i = (i, i+1)(2n-i, 2n+1-i) for i < n.
//   * A word [a_1, ..., a_k] evaluates to s_{a_1} * ... * s_{a_k}.
//   * ^IW is the set of elements without left descents in I; for the Siegel
//     type I = {s_1, ..., s_{n-1}} these are the w with
//     w^{-1}(1) < ... < w^{-1}(n).

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eostrata::weyl {

inline constexpr int kMaxRank = 12;

class WeylElement {
 public:
  // Rank 0: the trivial group.
  WeylElement() = default;

  static WeylElement identity(int n);
  // Validates bijectivity and the symplectic symmetry.
  static WeylElement from_one_line(std::span<const int> images);
  static WeylElement from_one_line(std::initializer_list<int> images);

  int rank() const { return n_; }
  int degree() const { return 2 * n_; }
  // 1-based evaluation.
  int operator()(int i) const { return perm_[static_cast<std::size_t>(i - 1)]; }

  std::vector<int> one_line() const;
  WeylElement inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  // w * s_i and s_i * w.
  WeylElement times_simple(int i) const;
  WeylElement simple_times(int i) const;

  friend WeylElement compose(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, 2 * kMaxRank> perm_{};
};

// A subset J of the simple reflections S_n = {s_1, ..., s_n}, stored as a
// bitmask (bit i-1 <-> s_i).
class ParabolicType {
 public:
  ParabolicType() = default;
  explicit ParabolicType(int n);
  ParabolicType(int n, std::initializer_list<int> generators);

  static ParabolicType from_mask(int n, std::uint32_t mask);
  static ParabolicType full(int n);
  // {s_1, ..., s_{n-1}}: the type of the stabilizer of a Lagrangian.
  static ParabolicType siegel(int n);

  int rank() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const;
  void insert(int i);
  void erase(int i);
  int size() const;
  bool empty() const { return mask_ == 0; }
  std::vector<int> members() const;
  bool is_subset_of(const ParabolicType& other) const;
  std::string to_string() const;

  friend ParabolicType operator&(const ParabolicType& a, const ParabolicType& b);
  friend ParabolicType operator|(const ParabolicType& a, const ParabolicType& b);
  friend bool operator==(const ParabolicType&, const ParabolicType&) = default;
  friend auto operator<=>(const ParabolicType&, const ParabolicType&) = default;

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

// A word in the simple reflections whose evaluation has length equal to the
// number of letters. Reducedness is checked by make().
class ReducedWord {
 public:
  ReducedWord() = default;
  static ReducedWord make(int n, std::vector<int> letters);

  int rank() const { return n_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  WeylElement evaluate() const;
  // "e" for the empty word, otherwise e.g. "s2s1s2".
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

enum class TieBreak { kSmallestFirst, kLargestFirst };
enum class StripOrder { kLeftFirst, kRightFirst };

WeylElement simple_reflection(int i, int n);
WeylElement compose(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return compose(a, b); }

// Evaluates an arbitrary (not necessarily reduced) word.
WeylElement evaluate_word(int n, std::span<const int> letters);

bool has_right_descent(const WeylElement& w, int i);
bool has_left_descent(const WeylElement& w, int i);
ParabolicType right_descents(const WeylElement& w);
ParabolicType left_descents(const WeylElement& w);

// Coxeter length by greedy right-descent stripping.
int length(const WeylElement& w);

ReducedWord reduced_word(const WeylElement& w, TieBreak tie = TieBreak::kSmallestFirst);
ParabolicType support(const WeylElement& w, TieBreak tie = TieBreak::kSmallestFirst);
bool in_parabolic_subgroup(const WeylElement& w, const ParabolicType& J);

bool is_min_left_rep(const WeylElement& w, const ParabolicType& I);
bool is_min_right_rep(const WeylElement& w, const ParabolicType& J);

// Unique minimal-length element of W_I * w * W_J.
WeylElement min_double_coset_rep(const WeylElement& w, const ParabolicType& I,
                                 const ParabolicType& J,
                                 StripOrder order = StripOrder::kLeftFirst);

WeylElement longest_element(int n);

// Ordering used for every enumeration: by length, then one-line form.
bool length_then_lex(const WeylElement& a, const WeylElement& b);

// All 2^n n! elements, sorted by length_then_lex. Requires n <= 7.
const std::vector<WeylElement>& enumerate_group(int n);

// ^IW_n for the Siegel type, built directly from the 2^n choices of
// {w^{-1}(1), ..., w^{-1}(n)}; sorted by length_then_lex.
std::vector<WeylElement> enumerate_IW(int n);

// ^IW^J: minimal double coset representatives, materialized by mapping
// min_double_coset_rep over the whole group. Cached per (n, I, J).
const std::vector<WeylElement>& double_coset_reps(const ParabolicType& I,
                                                  const ParabolicType& J);

// The reduced word (s_n ... s_{i_1}) ... (s_n ... s_{i_l}) of an element of
// ^IW_n, for a subset {i_1 < ... < i_l} of {1..n}. Both factor orders are
// tried; exactly one must give a reduced word landing in ^IW_n.
ReducedWord canonical_word_IW(int n, std::vector<int> subset);

// r_w(i, j) = #{a in {1..i} : w(a) <= j}, with r_w(0, .) = r_w(., 0) = 0.
int rank_count(const WeylElement& w, int i, int j);

// W_g^[c]: elements fixing 1..g-c.
bool in_fixed_block(const WeylElement& w, int c);

// The isomorphism W_g^[c] -> W_c, i -> w(g-c+i) - (g-c).
WeylElement r_map(const WeylElement& w, int c);
// Its inverse W_c -> W_g^[c].
WeylElement r_map_inv(const WeylElement& w, int g);

// For w in ^IW_g: the minimal c with w in W_g^[c], or nullopt if that c
// exceeds g/2.
std::optional<int> class_c(const WeylElement& w);

}  // namespace eostrata::weyl
