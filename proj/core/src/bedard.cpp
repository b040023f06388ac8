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

#include "eostrata/bedard.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "eostrata/error.hpp"

namespace eostrata::bedard {

FrobeniusAction FrobeniusAction::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i;
  return from_images(n, std::move(images));
}

FrobeniusAction FrobeniusAction::from_images(int n, std::vector<int> images) {
  require(n >= 0 && n <= weyl::kMaxRank, "FrobeniusAction: rank out of range");
  require(static_cast<int>(images.size()) == n, "FrobeniusAction: wrong number of images");
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= n; ++i) {
    require(sorted[static_cast<std::size_t>(i - 1)] == i, "FrobeniusAction: not a permutation of S_n");
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      require(coxeter_matrix_entry(n, i, j) ==
                  coxeter_matrix_entry(n, images[static_cast<std::size_t>(i - 1)],
                                       images[static_cast<std::size_t>(j - 1)]),
              "FrobeniusAction: does not preserve the Coxeter matrix");
    }
  }
  FrobeniusAction f;
  f.n_ = n;
  f.images_ = std::move(images);
  return f;
}

ParabolicType FrobeniusAction::apply(const ParabolicType& J) const {
  require(J.rank() == n_, "FrobeniusAction: rank mismatch");
  ParabolicType out(n_);
  for (int i : J.members()) out.insert(apply(i));
  return out;
}

bool FrobeniusAction::is_identity() const {
  for (int i = 1; i <= n_; ++i) {
    if (apply(i) != i) return false;
  }
  return true;
}

int coxeter_matrix_entry(int n, int i, int j) {
  const WeylElement x = weyl::compose(weyl::simple_reflection(i, n), weyl::simple_reflection(j, n));
  WeylElement y = x;
  int order = 1;
  while (!y.is_identity()) {
    y = weyl::compose(y, x);
    ++order;
  }
  return order;
}

ParabolicType conjugate_type(const WeylElement& w, const ParabolicType& J) {
  require(w.rank() == J.rank(), "conjugate_type: rank mismatch");
  const int n = w.rank();
  const WeylElement w_inv = w.inverse();
  ParabolicType out(n);
  for (int s : J.members()) {
    const WeylElement t = weyl::compose(weyl::compose(w, weyl::simple_reflection(s, n)), w_inv);
    for (int i = 1; i <= n; ++i) {
      if (t == weyl::simple_reflection(i, n)) out.insert(i);
    }
  }
  return out;
}

namespace {

// Minimal (I_next, F(I_next)) representatives of the double cosets inside
// W_{I_next} u W_{F(I_cur)}.
std::vector<WeylElement> refined_reps(const WeylElement& u, const ParabolicType& left,
                                      const ParabolicType& right, const ParabolicType& rep_left,
                                      const ParabolicType& rep_right) {
  std::set<WeylElement> seen{u};
  std::vector<WeylElement> frontier{u};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier) {
      for (int s : left.members()) {
        auto y = x.simple_times(s);
        if (seen.insert(y).second) next.push_back(y);
      }
      for (int s : right.members()) {
        auto y = x.times_simple(s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::set<WeylElement> reps;
  for (const auto& x : seen) reps.insert(weyl::min_double_coset_rep(x, rep_left, rep_right));
  std::vector<WeylElement> out(reps.begin(), reps.end());
  std::sort(out.begin(), out.end(), weyl::length_then_lex);
  return out;
}

void extend(std::vector<BedardStep>& steps, const FrobeniusAction& F,
            std::vector<BedardSequence>& out, const ParabolicType& initial) {
  const BedardStep last = steps.back();
  const ParabolicType next_type = last.type & conjugate_type(last.u, F.apply(last.type));
  if (next_type == last.type) {
    ensure(weyl::min_double_coset_rep(last.u, last.type, F.apply(last.type)) == last.u,
           "Bédard step is not a minimal double coset representative");
    steps.push_back(last);
    out.push_back(BedardSequence{initial, steps, last.u, last.type});
    steps.pop_back();
    return;
  }
  // Strict drop: branch over the finer double cosets.
  for (const auto& u : refined_reps(last.u, next_type, F.apply(last.type), next_type,
                                    F.apply(next_type))) {
    steps.push_back(BedardStep{u, next_type});
    extend(steps, F, out, initial);
    steps.pop_back();
  }
}

}  // namespace

std::vector<BedardSequence> enumerate_sequences(const ParabolicType& I, const FrobeniusAction& F) {
  require(I.rank() == F.rank(), "enumerate_sequences: rank mismatch");
  const int n = I.rank();
  std::vector<BedardSequence> out;
  for (const auto& u0 : weyl::double_coset_reps(I, F.apply(I))) {
    std::vector<BedardStep> steps{BedardStep{u0, I}};
    extend(steps, F, out, I);
  }

  std::vector<WeylElement> hit;
  hit.reserve(out.size());
  for (const auto& seq : out) hit.push_back(seq.u_inf);
  std::sort(hit.begin(), hit.end());
  std::vector<WeylElement> expected;
  for (const auto& w : weyl::enumerate_group(n)) {
    if (weyl::is_min_left_rep(w, I)) expected.push_back(w);
  }
  std::sort(expected.begin(), expected.end());
  ensure(hit == expected, "Bédard sequences do not biject onto ^IW for I = " + I.to_string());

  std::sort(out.begin(), out.end(), [](const BedardSequence& a, const BedardSequence& b) {
    return weyl::length_then_lex(a.u_inf, b.u_inf);
  });
  return out;
}

const std::vector<BedardSequence>& sequence_table(const ParabolicType& I, const FrobeniusAction& F) {
  using Key = std::tuple<int, std::uint32_t, std::vector<int>>;
  static std::map<Key, std::vector<BedardSequence>> cache;
  static std::mutex mutex;
  std::vector<int> images;
  for (int i = 1; i <= F.rank(); ++i) images.push_back(F.apply(i));
  const Key key{I.rank(), I.mask(), images};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_sequences(I, F)).first;
  return it->second;
}

const BedardSequence& sequence_for(const WeylElement& w, const ParabolicType& I,
                                   const FrobeniusAction& F) {
  require(w.rank() == I.rank(), "sequence_for: rank mismatch");
  require(weyl::is_min_left_rep(w, I), "sequence_for: element not in ^IW");
  for (const auto& seq : sequence_table(I, F)) {
    if (seq.u_inf == w) return seq;
  }
  throw InvariantViolation("sequence_for: no sequence with u_inf = " + w.to_string());
}

int flag_variety_dim(const ParabolicType& J) {
  const WeylElement w0 = weyl::longest_element(J.rank());
  return weyl::length(weyl::min_double_coset_rep(w0, ParabolicType(J.rank()), J));
}

int stratum_dimension(const WeylElement& w, const ParabolicType& I, const FrobeniusAction& F) {
  const BedardSequence& seq = sequence_for(w, I, F);
  const ParabolicType& t = seq.type_inf;
  return weyl::length(seq.u_inf) + flag_variety_dim(t & F.apply(t)) - flag_variety_dim(t);
}

ParabolicType f_closure(const ParabolicType& X, const FrobeniusAction& F) {
  ParabolicType closure = X;
  for (;;) {
    const ParabolicType next = closure | F.apply(closure);
    if (next == closure) return closure;
    closure = next;
  }
}

bool is_irreducible(const WeylElement& w, const ParabolicType& I, const FrobeniusAction& F) {
  const BedardSequence& seq = sequence_for(w, I, F);
  const ParabolicType generated = seq.type_inf | weyl::support(seq.u_inf);
  return f_closure(generated, F) == ParabolicType::full(w.rank());
}

}  // namespace eostrata::bedard
