#pragma once

// JSON encodings shared by the CLI and the scan harness. Integers are emitted as JSON numbers
// when they fit in 64 bits and as decimal strings otherwise; readers accept both.

#include "gdet/classify.hpp"
#include "gdet/s4.hpp"
#include "gdet/sympoly.hpp"
#include "gdet/witness.hpp"

#include <json.hpp>

namespace gdet {

using Json = nlohmann::json;

inline constexpr int kJsonSchemaVersion = 1;

inline Json to_json(const BigInt& v) {
  if (fits_int64(v)) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

inline Json to_json(std::span<const BigInt> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

inline Json to_json(const Valuation& v) {
  if (v.infinite()) return Json("inf");
  return Json(v.value());
}

inline std::vector<BigInt> bigints_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of integers");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigint_from_json(x));
  return out;
}

/// Accepts {"group":"S4","a":[12],"b":[12]}, {"group":"Z4","coeffs":[...]} or a flat array in
/// canonical element order. `fallback` is used when the input does not name a group.
inline RingElement ring_element_from_json(const Json& j, const GroupPtr& fallback) {
  if (j.is_array()) return RingElement(fallback, bigints_from_json(j));
  if (!j.is_object()) throw InvalidArgument("coefficients must be a JSON object or array");
  GroupPtr group = fallback;
  if (j.contains("group")) {
    const GroupKind kind = parse_group_kind(j.at("group").get<std::string>());
    group = kind == fallback->kind() ? fallback : make_group(kind);
  }
  if (j.contains("coeffs")) return RingElement(group, bigints_from_json(j.at("coeffs")));
  if (j.contains("a") && j.contains("b")) {
    if (group->kind().family != GroupFamily::symmetric4) throw InvalidArgument("a/b split is only defined for S4");
    auto a = bigints_from_json(j.at("a"));
    auto b = bigints_from_json(j.at("b"));
    if (a.size() != 12 || b.size() != 12) throw InvalidArgument("S4 input needs 12 'a' and 12 'b' coefficients");
    a.insert(a.end(), b.begin(), b.end());
    return RingElement(group, std::move(a));
  }
  throw InvalidArgument("coefficient object needs 'coeffs' or 'a' and 'b'");
}

inline Json to_json(const RingElement& e) {
  Json j;
  j["group"] = e.group().kind().name();
  j["coeffs"] = to_json(e.coeffs());
  if (e.group().kind().family == GroupFamily::symmetric4) {
    j["a"] = to_json(e.coeffs().subspan(0, 12));
    j["b"] = to_json(e.coeffs().subspan(12, 12));
  }
  return j;
}

inline Json to_json(const FactorProfile& f) {
  auto triple = [](const std::array<BigInt, 3>& t) { return to_json(std::span<const BigInt>(t)); };
  return Json{{"l1", to_json(f.l1)},
              {"l2", to_json(f.l2)},
              {"q1", to_json(f.q1)},
              {"d1", to_json(f.d1)},
              {"d2", to_json(f.d2)},
              {"det", to_json(f.det)},
              {"v2", to_json(f.two_adic)},
              {"v3", to_json(f.three_adic)},
              {"u_parts", triple(f.u_parts)},
              {"v_parts", triple(f.v_parts)},
              {"u", to_json(f.u)},
              {"v", to_json(f.v)},
              {"w", to_json(f.w)},
              {"A", triple(f.sums_a)},
              {"B", triple(f.sums_b)}};
}

inline Json to_json(const GroupRule& rule, const BigInt& m, const MembershipVerdict& v) {
  const auto& r = v.reason;
  Json reason{{"zero", r.zero},
              {"sign", r.sign},
              {"v2", to_json(r.v2)},
              {"v3", to_json(r.v3)},
              {"odd_part_mod4", r.odd_part_mod4},
              {"residue_mod24", r.residue_mod24},
              {"clause", r.clause}};
  if (rule.kind == RuleKind::Zp || rule.kind == RuleKind::Z2p) {
    reason["p"] = rule.p;
    reason["vp"] = to_json(r.vp);
  }
  return Json{{"schema", kJsonSchemaVersion}, {"group", rule.name()}, {"m", to_json(m)},
              {"member", v.member}, {"reason", reason}};
}

inline Json to_json(const WitnessCertificate& c, bool verified) {
  Json trail = Json::array();
  for (const auto& s : c.trail)
    trail.push_back(Json{{"family", std::string(family_name(s.family))}, {"k", to_json(s.k)},
                         {"value", to_json(family_value(s.family, s.k))}});
  return Json{{"schema", kJsonSchemaVersion},
              {"target", to_json(c.target)},
              {"coeffs", to_json(c.coefficients.coeffs())},
              {"trail", trail},
              {"verified", verified}};
}

inline Json to_json(const IdentityReport& r) {
  Json j{{"id", std::string(identity_name(r.id))},
         {"statement", std::string(identity_statement(r.id))},
         {"holds", r.holds},
         {"residual_terms", r.residual_term_count},
         {"seconds", r.seconds}};
  if (!r.residual_sample.empty()) j["residual"] = r.residual_sample;
  if (r.id == IdentityId::D1_EXPANSION && r.quotient) {
    j["quotient_terms"] = r.quotient->term_count();
    j["quotient_cubic"] = r.quotient_cubic;
    j["mirror_holds"] = r.mirror_holds;
    j["mirror_sum_even"] = r.mirror_sum_even;
  }
  return j;
}

}  // namespace gdet
