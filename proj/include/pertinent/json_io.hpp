#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "pertinent/coefficient_table.hpp"
#include "pertinent/discrete.hpp"
#include "pertinent/numeric.hpp"
#include "pertinent/report.hpp"

namespace pertinent {

using json = nlohmann::json;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
inline json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

// {"family":"C","n":4,"m":12,"i_max":6,"route":"gf","coeffs":[...],"total":543}
inline json to_json(const CoefficientTable& t) {
  json coeffs = json::array();
  for (const auto& c : t.coeffs()) coeffs.push_back(to_json(c));
  json j;
  j["family"] = std::string(1, to_char(t.spec().family()));
  j["n"] = t.spec().n();
  j["m"] = t.spec().m();
  j["i_max"] = t.spec().i_max();
  j["route"] = std::string(route_name(t.route()));
  j["coeffs"] = std::move(coeffs);
  j["total"] = to_json(t.total());
  return j;
}

inline json to_json(const CheckRecord& c) {
  return json{{"instance", c.instance}, {"claimed", c.claimed}, {"computed", c.computed}, {"pass", c.pass}};
}

inline json to_json(const std::vector<CheckRecord>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back(to_json(c));
  return a;
}

/// A continuous-case class representative: variable elements that are
/// non-zero are shown as "*", fixed elements as 1.
inline std::string render_class(const BinaryMatrix& pattern, const TypeSpec& spec) {
  std::string s = "(";
  for (int i = 1; i <= pattern.size(); ++i) {
    s += i > 1 ? ",(" : "(";
    for (int j = 1; j <= pattern.size(); ++j) {
      if (j > 1) s += ',';
      if (!pattern(i, j)) {
        s += '0';
      } else {
        s += spec.variable_mask()(i, j) ? '*' : '1';
      }
    }
    s += ')';
  }
  return s + ")";
}

inline json to_json(const OmegaSet& o) {
  json members = json::array();
  if (o.representation == OmegaSet::Representation::matrices) {
    for (const auto& m : o.matrices) members.push_back(m.to_string());
  } else {
    const bool classes = !o.binarized && !o.xset.is_discrete();
    for (const auto& p : o.patterns) members.push_back(classes ? render_class(p, o.spec) : p.to_string());
  }
  json j;
  j["family"] = std::string(1, to_char(o.spec.family()));
  j["n"] = o.spec.n();
  j["value_set"] = o.xset.to_string();
  j["binarized"] = o.binarized;
  j["u"] = to_string(o.u);
  j["size"] = o.size();
  j["partition"] = o.partition_sizes();
  j["members"] = std::move(members);
  return j;
}

}  // namespace pertinent
