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

#include "eostrata/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eostrata/dieudonne.hpp"
#include "eostrata/dlclassify.hpp"
#include "eostrata/error.hpp"
#include "eostrata/serialize.hpp"
#include "eostrata/version.hpp"

namespace eostrata::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxEnumeratedPoints = 2'000'000;

std::uint64_t census_order(int p, int m) {
  std::uint64_t q = 1;
  for (int i = 0; i < 2 * m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    require(q <= gf::kMaxOrder, "field F_{p^(2m)} exceeds the supported order");
  }
  return q;
}

void check_field(const RunConfig& cfg) {
  require(cfg.c >= 1 && cfg.c <= weyl::kMaxRank, "--c out of range");
  require(gf::is_prime(cfg.p), "--p must be prime");
  require(cfg.m >= 1, "--m must be positive");
  census_order(cfg.p, cfg.m);
}

void check_point_count(const RunConfig& cfg) {
  const std::uint64_t q = census_order(cfg.p, cfg.m);
  // Overflow-safe bound on prod (q^i + 1).
  std::uint64_t total = 1;
  std::uint64_t qi = 1;
  for (int i = 1; i <= cfg.c; ++i) {
    require(qi <= kMaxEnumeratedPoints / q, "too many Lagrangians to enumerate; use --trials");
    qi *= q;
    total *= qi + 1;
    require(total <= kMaxEnumeratedPoints, "too many Lagrangians to enumerate; use --trials");
  }
}

json config_json(const RunConfig& cfg) {
  json j = {{"c", cfg.c}, {"p", cfg.p}, {"m", cfg.m}, {"format", cfg.format}, {"seed", cfg.seed},
            {"trials", cfg.trials}};
  j["g"] = cfg.g > 0 ? json(cfg.g) : json(nullptr);
  return j;
}

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    err << "eostrata: cannot open " << cfg.out << " for writing\n";
    return kConfigError;
  }
  f << text;
  return f ? kOk : kConfigError;
}

int cmd_strata(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  json doc = {{"header", serialize::header("strata", config_json(cfg), {})}};
  doc["strata"] = serialize::stratum_table(cfg.c, cfg.g > 0 ? std::optional<int>(cfg.g) : std::nullopt);
  return emit(cfg, doc.dump(2) + "\n", out, err);
}

int cmd_bedard(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  json doc = {{"header", serialize::header("bedard", config_json(cfg), {})}};
  doc["sequences"] = serialize::bedard_dump(cfg.c);
  return emit(cfg, doc.dump(2) + "\n", out, err);
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const dlclassify::CensusResult r = dlclassify::census_detailed(cfg.c, cfg.p, cfg.m);
  std::string text;
  if (cfg.format == "csv") {
    text = serialize::census_csv(r.records);
  } else {
    json doc = {{"header", serialize::header("census", config_json(cfg), {gf::Field::get(cfg.p, 2 * cfg.m)})}};
    doc["records"] = serialize::census_json(r.records);
    doc["total"] = r.total;
    doc["expected"] = r.expected;
    doc["coarse_mismatches"] = r.coarse_mismatches;
    doc["alternative_mismatches"] = r.alternative_mismatches;
    text = doc.dump(2) + "\n";
  }
  const int rc = emit(cfg, text, out, err);
  if (rc != kOk) return rc;
  if (!r.ok()) {
    err << "eostrata: census checks failed: total " << r.total << " of " << r.expected << ", coarse mismatches "
        << r.coarse_mismatches << ", alternative mismatches " << r.alternative_mismatches << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const symplectic::SymplecticSpace space = dlclassify::census_space(cfg.c, cfg.p, cfg.m);
  std::vector<symplectic::Subspace> points;
  if (cfg.trials > 0) {
    for (int t = 0; t < cfg.trials; ++t) {
      points.push_back(dlclassify::random_lagrangian(space, cfg.seed * 1000003ULL + static_cast<std::uint64_t>(t)));
    }
  } else {
    points = symplectic::enumerate_lagrangians(space);
  }

  struct Tally {
    std::uint64_t points = 0;
    std::uint64_t passed = 0;
  };
  std::map<weyl::WeylElement, Tally> tally;
  for (const auto& w : weyl::enumerate_IW(cfg.c)) tally[w] = {};
  std::uint64_t failures = 0;
  for (const auto& u : points) {
    const weyl::WeylElement fine = dlclassify::classify_fine(space, u);
    const auto eo = dieudonne::eo_type(dieudonne::DieudonneModule::from_lagrangian(space, u, cfg.g));
    const bool ok = eo.w == weyl::r_map_inv(fine, cfg.g);
    Tally& t = tally[fine];
    ++t.points;
    if (ok) {
      ++t.passed;
    } else {
      ++failures;
    }
  }

  std::vector<weyl::WeylElement> labels;
  for (const auto& [w, t] : tally) labels.push_back(w);
  std::sort(labels.begin(), labels.end(), weyl::length_then_lex);

  json rows = json::array();
  for (const auto& w : labels) {
    const Tally& t = tally[w];
    out << "stratum " << serialize::word_string(w) << " -> " << serialize::word_string(weyl::r_map_inv(w, cfg.g))
        << ": " << t.passed << "/" << t.points << " pass\n";
    rows.push_back({{"label_word", serialize::word_string(w)},
                    {"label_oneline", serialize::to_json(w)},
                    {"lifted_oneline", serialize::to_json(weyl::r_map_inv(w, cfg.g))},
                    {"points", t.points},
                    {"passed", t.passed}});
  }
  out << "verify: " << points.size() << " points, " << failures << " failures\n";

  if (!cfg.out.empty()) {
    json doc = {{"header", serialize::header("verify", config_json(cfg), {space.field()})}};
    doc["strata"] = std::move(rows);
    doc["points"] = points.size();
    doc["failures"] = failures;
    const int rc = emit(cfg, doc.dump(2) + "\n", out, err);
    if (rc != kOk) return rc;
  }
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

void validate(const RunConfig& cfg) {
  require(cfg.format == "json" || cfg.format == "csv", "--format must be json or csv");
  require(cfg.trials >= 0, "--trials must be non-negative");
  if (cfg.command == "strata") {
    require(cfg.c >= 1 && cfg.c <= 6, "strata: --c must be in 1..6");
    if (cfg.g != 0) require(2 * cfg.c <= cfg.g && cfg.g <= weyl::kMaxRank, "strata: --g must satisfy 2c <= g <= 12");
  } else if (cfg.command == "bedard") {
    require(cfg.c >= 1 && cfg.c <= 5, "bedard: --c must be in 1..5");
  } else if (cfg.command == "census") {
    check_field(cfg);
    check_point_count(cfg);
  } else if (cfg.command == "verify") {
    check_field(cfg);
    require(cfg.g >= 1 && 2 * cfg.c <= cfg.g && cfg.g <= weyl::kMaxRank, "verify: --g must satisfy 2c <= g <= 12");
    if (cfg.trials == 0) check_point_count(cfg);
  } else {
    throw InvalidArgument("unknown command '" + cfg.command + "'");
  }
}

int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    if (cfg.command == "strata") return cmd_strata(cfg, out, err);
    if (cfg.command == "bedard") return cmd_bedard(cfg, out, err);
    if (cfg.command == "census") return cmd_census(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const InvalidArgument& e) {
    err << "eostrata: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvariantViolation& e) {
    err << "eostrata: check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deligne-Lusztig strata of the Lagrangian Grassmannian and their Ekedahl-Oort types", "eostrata"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--c", cfg.c, "rank c of the symplectic space");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
  };
  auto add_field = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic");
    sub->add_option("--m", cfg.m, "points are taken over F_{p^(2m)}");
  };

  CLI::App* strata = app.add_subcommand("strata", "table of fine strata for the Siegel type");
  add_common(strata);
  strata->add_option("--g", cfg.g, "also lift each label to W_g");

  CLI::App* census = app.add_subcommand("census", "classify every Lagrangian over F_{p^(2m)}");
  add_common(census);
  add_field(census);
  census->add_option("--format", cfg.format, "json or csv");

  CLI::App* verify = app.add_subcommand("verify", "compare final types of split modules with fine labels");
  add_common(verify);
  add_field(verify);
  verify->add_option("--g", cfg.g, "genus g, 2c <= g")->required();
  verify->add_option("--seed", cfg.seed, "seed for sampled points");
  verify->add_option("--trials", cfg.trials, "number of sampled points (0: all)");
  verify->add_option("--format", cfg.format, "json or csv");

  CLI::App* bedard = app.add_subcommand("bedard", "dump refinement sequences for the Siegel type");
  add_common(bedard);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    std::ostringstream o, ebuf;
    app.exit(e, o, ebuf);
    out << o.str() << ebuf.str();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    app.exit(e, o, err);
    return kConfigError;
  }

  for (CLI::App* sub : {strata, census, verify, bedard}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }
  return run_config(cfg, out, err);
}

}  // namespace eostrata::cli
