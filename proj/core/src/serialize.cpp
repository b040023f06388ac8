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

#include "eostrata/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "eostrata/version.hpp"

namespace eostrata::serialize {

json to_json(const weyl::WeylElement& w) { return w.one_line(); }

json to_json(const weyl::ParabolicType& t) { return t.members(); }

std::string word_string(const weyl::WeylElement& w) { return weyl::reduced_word(w).to_string(); }

std::string one_line_string(const weyl::WeylElement& w) {
  std::ostringstream os;
  const auto v = w.one_line();
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

json element_json(const gf::Field& f, gf::Elem a) { return f.coefficients(a); }

json field_json(const gf::Field& f) {
  return {{"p", f.characteristic()}, {"k", f.degree()}, {"order", f.order()}, {"modulus", f.modulus()}};
}

json to_json(const linalg::Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(element_json(*m.field(), m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const symplectic::Subspace& u) { return to_json(u.basis()); }

namespace {

json weyl_summary(const weyl::WeylElement& w) {
  return {{"one_line", to_json(w)}, {"word", word_string(w)}, {"length", weyl::length(w)}};
}

json sequence_json(const bedard::BedardSequence& s) {
  json steps = json::array();
  for (const auto& st : s.steps) steps.push_back({{"u", to_json(st.u)}, {"I", to_json(st.type)}});
  return steps;
}

}  // namespace

json stratum_table(int c, std::optional<int> g) {
  const auto siegel = weyl::ParabolicType::siegel(c);
  const auto frob = bedard::FrobeniusAction::identity(c);
  json rows = json::array();
  std::vector<weyl::WeylElement> elems = weyl::enumerate_IW(c);
  std::sort(elems.begin(), elems.end(), weyl::length_then_lex);
  for (const auto& w : elems) {
    const auto& seq = bedard::sequence_for(w, siegel, frob);
    json row = weyl_summary(w);
    row["I_inf"] = to_json(seq.type_inf);
    row["u_sequence"] = sequence_json(seq);
    row["dimension"] = bedard::stratum_dimension(w, siegel, frob);
    row["irreducible"] = bedard::is_irreducible(w, siegel, frob);
    row["coarse_class"] = to_json(weyl::min_double_coset_rep(w, siegel, frob.apply(siegel)));
    if (g) {
      const auto lifted = weyl::r_map_inv(w, *g);
      const auto cls = weyl::class_c(lifted);
      json lift = weyl_summary(lifted);
      lift["class"] = cls ? json(*cls) : json(nullptr);
      lift["in_exact_class"] = cls.has_value() && *cls == c;
      row["lifted"] = std::move(lift);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json bedard_dump(int c) {
  const auto siegel = weyl::ParabolicType::siegel(c);
  json out = json::array();
  for (const auto& s : bedard::sequence_table(siegel, bedard::FrobeniusAction::identity(c))) {
    out.push_back({{"initial", to_json(s.initial)},
                   {"steps", sequence_json(s)},
                   {"u_inf", to_json(s.u_inf)},
                   {"u_inf_word", word_string(s.u_inf)},
                   {"I_inf", to_json(s.type_inf)}});
  }
  return out;
}

json module_json(const dieudonne::DieudonneModule& m) {
  json out = {{"g", m.g()},
              {"dim", m.dim()},
              {"field", field_json(*m.field())},
              {"F", {{"twist", m.F().twist()}, {"matrix", to_json(m.F().matrix())}}},
              {"V", {{"twist", m.V().twist()}, {"matrix", to_json(m.V().matrix())}}},
              {"pairing", to_json(m.pairing())}};
  if (m.has_slots()) out["slot_offsets"] = m.slot_offsets();
  return out;
}

json eo_type_json(const dieudonne::EOType& t) {
  return {{"one_line", to_json(t.w)}, {"word", word_string(t.w)}, {"psi", t.psi}};
}

std::string census_csv(const std::vector<dlclassify::CensusRecord>& records) {
  std::ostringstream os;
  os << kCensusCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.p << ',' << r.m << ',' << r.c << ',' << word_string(r.label) << ',' << one_line_string(r.label) << ','
       << r.count << '\n';
  }
  return os.str();
}

json census_json(const std::vector<dlclassify::CensusRecord>& records) {
  json rows = json::array();
  for (const auto& r : records) {
    rows.push_back({{"p", r.p},
                    {"m", r.m},
                    {"c", r.c},
                    {"label_word", word_string(r.label)},
                    {"label_oneline", to_json(r.label)},
                    {"count", r.count}});
  }
  return rows;
}

json header(const std::string& command, const json& config, const std::vector<gf::FieldPtr>& fields) {
  json f = json::array();
  for (const auto& fp : fields) f.push_back(field_json(*fp));
  return {{"tool", "eostrata"}, {"version", kVersion}, {"command", command}, {"config", config}, {"fields", f}};
}

}  // namespace eostrata::serialize
