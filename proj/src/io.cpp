// Copyright 2026 The torusflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torusflow/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace torusflow {

using nlohmann::json;

namespace {

json family_to_json(const Family& family) {
  if (std::holds_alternative<FactorialFamily>(family)) return "factorial";
  if (std::holds_alternative<PrimeRatioFamily>(family)) return "prime_ratio";
  if (const auto* ar = std::get_if<ArithmeticFamily>(&family)) {
    json n = json::array();
    for (const auto& x : ar->n) n.push_back(x.str());
    return json{{"arithmetic", {{"lambda0", format_rational(ar->lambda0)}, {"n", n}}}};
  }
  return "explicit";
}

Family family_from_json(const json& doc) {
  if (doc.is_string()) {
    const std::string name = doc.get<std::string>();
    if (name == "factorial") return FactorialFamily{};
    if (name == "prime_ratio") return PrimeRatioFamily{};
    if (name == "explicit") return ExplicitFamily{};
    throw std::invalid_argument("family: unknown name '" + name + "'");
  }
  if (doc.is_object() && doc.contains("arithmetic")) {
    const json& ar = doc.at("arithmetic");
    ArithmeticFamily fam;
    fam.lambda0 = parse_rational(ar.at("lambda0").get<std::string>());
    for (const auto& x : ar.at("n")) {
      if (x.is_string()) {
        fam.n.emplace_back(x.get<std::string>());
      } else {
        fam.n.emplace_back(x.get<std::int64_t>());
      }
    }
    return fam;
  }
  throw std::invalid_argument("family: expected a name or an {\"arithmetic\": ...} object");
}

}  // namespace

json system_to_json(const FrequencySystem& sys) {
  json basis = json::array();
  for (const auto& symbol : sys.basis()) {
    basis.push_back({{"id", symbol.id},
                     {"value", symbol.value.str(40)},
                     {"independent", symbol.independence_declared}});
  }
  json prefix = json::array();
  for (const auto& v : sys.prefix()) {
    json entry = json::array();
    for (const auto& [id, c] : v.coords()) entry.push_back(json::array({id, format_rational(c)}));
    prefix.push_back(entry);
  }
  return {{"basis", basis}, {"prefix", prefix}, {"family", family_to_json(sys.family())}};
}

FrequencySystem system_from_json(const json& doc) {
  std::vector<BasisSymbol> basis;
  for (const auto& b : doc.at("basis")) {
    BasisSymbol symbol;
    symbol.id = b.at("id").get<std::string>();
    const json& value = b.at("value");
    symbol.value = value.is_string() ? Real50(value.get<std::string>())
                                     : Real50(value.get<double>());
    symbol.independence_declared = b.value("independent", true);
    basis.push_back(std::move(symbol));
  }
  std::vector<FrequencyVector> prefix;
  for (const auto& entry : doc.at("prefix")) {
    std::map<std::string, Rational> coords;
    for (const auto& pair : entry) {
      coords[pair.at(0).get<std::string>()] = parse_rational(pair.at(1).get<std::string>());
    }
    prefix.emplace_back(std::move(coords));
  }
  Family family = doc.contains("family") ? family_from_json(doc.at("family")) : ExplicitFamily{};
  return FrequencySystem(std::move(prefix), std::move(basis), std::move(family));
}

json torus_to_json(const TorusSpec& torus) {
  json tail;
  switch (torus.tail().kind) {
    case TailRule::Kind::Zero:
      tail = {{"kind", "zero"}};
      break;
    case TailRule::Kind::Geometric:
      tail = {{"kind", "geometric"}, {"first", torus.tail().first}, {"ratio", torus.tail().ratio}};
      break;
    case TailRule::Kind::Unknown:
      tail = {{"kind", "unknown"}};
      break;
  }
  return {{"radii_head", torus.head()}, {"tail", tail}};
}

TorusSpec torus_from_json(const json& doc) {
  std::vector<double> head = doc.at("radii_head").get<std::vector<double>>();
  TailRule tail;
  if (!doc.contains("tail")) {
    tail.kind = TailRule::Kind::Unknown;
  } else {
    const std::string kind = doc.at("tail").at("kind").get<std::string>();
    if (kind == "zero") {
      tail.kind = TailRule::Kind::Zero;
    } else if (kind == "geometric") {
      tail.kind = TailRule::Kind::Geometric;
      tail.first = doc.at("tail").at("first").get<double>();
      tail.ratio = doc.at("tail").at("ratio").get<double>();
    } else if (kind == "unknown") {
      tail.kind = TailRule::Kind::Unknown;
    } else {
      throw std::invalid_argument("torus: unknown tail kind '" + kind + "'");
    }
  }
  return TorusSpec(std::move(head), tail);
}

json character_to_json(const CharacterIndex& n) {
  json out = json::array();
  for (const auto& [k, nk] : n.support()) out.push_back(json::array({k, nk}));
  return out;
}

CharacterIndex character_from_json(const json& doc) {
  std::map<std::uint32_t, std::int64_t> support;
  for (const auto& pair : doc) {
    support[pair.at(0).get<std::uint32_t>()] = pair.at(1).get<std::int64_t>();
  }
  return CharacterIndex(std::move(support));
}

json verdict_to_json(const ErgodicityVerdict& v) {
  json witness = nullptr;
  if (v.witness) {
    witness = json::array();
    for (const auto& x : *v.witness) witness.push_back(x.str());
  }
  const char* status = v.status == ErgodicStatus::Ergodic          ? "ergodic"
                       : v.status == ErgodicStatus::NotErgodic     ? "not_ergodic"
                                                                   : "prefix_certified_only";
  return {{"status", status}, {"witness", witness}, {"prefix_len", v.prefix_len}};
}

namespace {

json period_to_json(const std::optional<PrefixPeriod>& p) {
  if (!p) return nullptr;
  json out = {{"over_2pi", format_rational(p->turns)}};
  if (p->per_symbol != "1") out["per_symbol"] = p->per_symbol;
  return out;
}

}  // namespace

json period_table_to_json(const PeriodTable& table) {
  json out = json::array();
  for (const auto& [n, p] : table) out.push_back(json::array({n, period_to_json(p)}));
  return out;
}

json classification_to_json(const TrajectoryClass& c) {
  const char* kind = c.kind == TrajectoryKind::TypeI_Periodic                ? "I"
                     : c.kind == TrajectoryKind::TypeII_TransitiveProjection ? "II"
                                                                             : "III";
  json certificate;
  switch (c.kind) {
    case TrajectoryKind::TypeI_Periodic:
      certificate = {{"period", period_to_json(c.period)}};
      break;
    case TrajectoryKind::TypeII_TransitiveProjection:
      certificate = {{"independent_dims", c.witness_dims}};
      break;
    case TrajectoryKind::TypeIII_New:
      certificate = {{"period_table", period_table_to_json(c.period_table)}};
      break;
  }
  return {{"class", kind},
          {"certainty", c.certainty == Certainty::FamilyCertified ? "family" : "prefix"},
          {"certificate", certificate}};
}

json return_record_to_json(const ReturnRecord& r) {
  json hits = json::array();
  for (const auto& h : r.hits) hits.push_back({{"t", h.t}, {"dist_upper", h.dist_upper}});
  return {{"epsilon", r.epsilon}, {"horizon", r.horizon}, {"hits", hits}};
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string trajectory_csv(const std::vector<double>& times, const std::vector<PhasePoint>& points,
                           bool emit_qp) {
  if (times.size() != points.size())
    throw std::invalid_argument("trajectory_csv: times and points differ in length");
  if (points.empty()) throw std::invalid_argument("trajectory_csv: empty trajectory");
  const std::size_t n = points.front().trunc_level();

  std::ostringstream out;
  out << "t";
  for (std::size_t k = 1; k <= n; ++k) out << ",theta_" << k;
  if (emit_qp) {
    for (std::size_t k = 1; k <= n; ++k) out << ",q_" << k;
    for (std::size_t k = 1; k <= n; ++k) out << ",p_" << k;
  }
  out << "\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << format_double(times[i]);
    for (double a : points[i].theta()) out << "," << format_double(a);
    if (emit_qp) {
      const auto [q, p] = points[i].qp();
      for (double x : q) out << "," << format_double(x);
      for (double x : p) out << "," << format_double(x);
    }
    out << "\n";
  }
  return out.str();
}

std::string period_table_csv(const PeriodTable& table) {
  std::ostringstream out;
  out << "N,period_over_2pi\n";
  for (const auto& [n, p] : table) {
    out << n << ",";
    if (!p) {
      out << "none";
    } else if (p->per_symbol == "1") {
      out << format_rational(p->turns);
    } else {
      out << format_rational(p->turns) << "/" << p->per_symbol;
    }
    out << "\n";
  }
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string config_hash_hex(const json& config) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(fnv1a64(config.dump())));
  return buffer;
}

}  // namespace torusflow
