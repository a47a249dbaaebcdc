#pragma once

// Explicit S4 coefficient patterns with closed-form determinants, and a synthesizer that
// multiplies them in the group ring to reach any member of S(S4).

#include "gdet/classify.hpp"
#include "gdet/determinant.hpp"

#include <array>
#include <optional>
#include <vector>

namespace gdet {

enum class WitnessFamilyId {
  res1, res5, res13, res17, neg27, pos81, pow2_8, neg2_10, pos2_12, neg2_12, pos2_13, neg2_13
};

inline constexpr std::array<WitnessFamilyId, 12> kAllFamilies = {
    WitnessFamilyId::res1,    WitnessFamilyId::res5,    WitnessFamilyId::res13,   WitnessFamilyId::res17,
    WitnessFamilyId::neg27,   WitnessFamilyId::pos81,   WitnessFamilyId::pow2_8,  WitnessFamilyId::neg2_10,
    WitnessFamilyId::pos2_12, WitnessFamilyId::neg2_12, WitnessFamilyId::pos2_13, WitnessFamilyId::neg2_13};

namespace detail {

struct FamilyData {
  std::string_view name;
  bool parametric;  // every coefficient is k or 1 + k
  // Parametric families: slots (0-based, b_i = 11 + i) that hold 1 + k.
  // Constant families: slots and their fixed values; all other slots are 0.
  std::vector<std::pair<std::uint8_t, int>> slots;
  // value(k) = scale * (offset + step * k)
  int scale, offset, step;
};

constexpr std::uint8_t A(int i) { return static_cast<std::uint8_t>(i - 1); }
constexpr std::uint8_t B(int i) { return static_cast<std::uint8_t>(11 + i); }

inline const FamilyData& family_data(WitnessFamilyId id) {
  static const std::array<FamilyData, 12> table = {{
      {"res1", true, {{A(1), 1}}, 1, 1, 24},
      {"res5", true, {{A(2), 1}, {A(5), 1}, {A(9), 1}, {B(3), 1}, {B(5), 1}}, 1, 5, 24},
      {"res13",
       true,
       {{A(1), 1}, {A(3), 1}, {A(5), 1}, {A(6), 1}, {A(7), 1}, {A(9), 1}, {A(10), 1},
        {B(1), 1}, {B(3), 1}, {B(5), 1}, {B(6), 1}, {B(11), 1}, {B(12), 1}},
       1, 13, 24},
      {"res17",
       true,
       {{A(1), 1}, {A(2), 1}, {A(3), 1}, {A(6), 1}, {A(7), 1}, {A(8), 1}, {A(9), 1}, {A(10), 1}, {A(11), 1},
        {B(1), 1}, {B(3), 1}, {B(4), 1}, {B(5), 1}, {B(7), 1}, {B(8), 1}, {B(9), 1}, {B(10), 1}},
       1, 17, 24},
      {"neg27", true, {{A(1), 1}, {A(3), 1}, {B(3), 1}}, -27, 1, 8},
      {"pos81", true, {{A(1), 1}, {A(2), 1}, {A(5), 1}}, 81, 1, 8},
      {"pow2_8", false, {{A(1), 1}, {A(5), 1}}, 256, 1, 0},
      {"neg2_10", false, {{A(1), -1}, {A(5), 1}, {A(6), 1}, {B(5), 1}, {B(10), -1}}, -1024, 1, 0},
      {"pos2_12", false, {{A(2), 1}, {A(5), 1}, {A(9), 1}, {B(11), 1}}, 4096, 1, 0},
      {"neg2_12", false, {{A(1), 1}, {A(2), 1}, {A(5), -1}, {A(9), -1}, {B(1), 1}}, -4096, 1, 0},
      {"pos2_13",
       true,
       {{A(1), 1}, {A(2), 1}, {A(6), 1}, {A(10), 1}, {A(11), 1}, {B(4), 1}, {B(6), 1}, {B(10), 1}},
       8192, 1, 3},
      {"neg2_13",
       true,
       {{A(2), 1}, {A(3), 1}, {A(4), 1}, {A(5), 1}, {A(9), 1}, {B(4), 1}, {B(5), 1}, {B(6), 1}},
       -8192, 1, 3},
  }};
  return table[static_cast<std::size_t>(id)];
}

}  // namespace detail

inline std::string_view family_name(WitnessFamilyId id) { return detail::family_data(id).name; }

inline WitnessFamilyId parse_family(std::string_view name) {
  for (auto id : kAllFamilies)
    if (family_name(id) == name) return id;
  throw InvalidArgument("unknown witness family '" + std::string(name) + "'");
}

/// Families whose coefficients do not depend on k.
inline bool family_is_constant(WitnessFamilyId id) { return !detail::family_data(id).parametric; }

/// Closed-form determinant of the family at parameter k.
inline BigInt family_value(WitnessFamilyId id, const BigInt& k) {
  const auto& d = detail::family_data(id);
  if (!d.parametric) return BigInt(d.scale);
  return BigInt(d.scale) * (BigInt(d.offset) + BigInt(d.step) * k);
}

/// Coefficient vector of the family at parameter k (ignored for constant families).
inline RingElement family_pattern(WitnessFamilyId id, const BigInt& k) {
  const auto& d = detail::family_data(id);
  std::vector<BigInt> coeffs(24, d.parametric ? k : BigInt(0));
  for (const auto& [slot, value] : d.slots) coeffs[slot] = d.parametric ? BigInt(k + 1) : BigInt(value);
  return RingElement(s4_group(), std::move(coeffs));
}

struct FamilyInstance {
  RingElement element;
  BigInt value;
};

inline FamilyInstance family(WitnessFamilyId id, const BigInt& k) {
  return {family_pattern(id, k), family_value(id, k)};
}

/// Parameter k with family_value(id, k) == target, if one exists (parametric families only).
inline std::optional<BigInt> solve_family(WitnessFamilyId id, const BigInt& target) {
  const auto& d = detail::family_data(id);
  if (!d.parametric) return std::nullopt;
  BigInt q, r;
  boost::multiprecision::divide_qr(target, BigInt(d.scale), q, r);
  if (r != 0) return std::nullopt;
  q -= d.offset;
  boost::multiprecision::divide_qr(q, BigInt(d.step), q, r);
  if (r != 0) return std::nullopt;
  return q;
}

class NotInSet : public Error {
 public:
  explicit NotInSet(const BigInt& m) : Error(m.str() + " is not an S4 group determinant") {}
};

class SynthesisExhausted : public Error {
 public:
  explicit SynthesisExhausted(const BigInt& m) : Error("no witness trail found for " + m.str()) {}
};

struct TrailStep {
  WitnessFamilyId family;
  BigInt k;
  friend bool operator==(const TrailStep&, const TrailStep&) = default;
};

struct WitnessCertificate {
  BigInt target;
  RingElement coefficients{s4_group()};
  std::vector<TrailStep> trail;
};

/// Group-ring product of the trail's family patterns, in trail order.
inline RingElement compose_trail(const std::vector<TrailStep>& trail) {
  RingElement acc = RingElement::identity(s4_group());
  for (const auto& step : trail) acc = convolve(acc, family_pattern(step.family, step.k));
  return acc;
}

inline BigInt trail_value(const std::vector<TrailStep>& trail) {
  BigInt v = 1;
  for (const auto& step : trail) v *= family_value(step.family, step.k);
  return v;
}

namespace detail {

/// Single-family factors whose value is exactly +-2^a (a = 8, 10 or >= 12).
inline std::vector<TrailStep> two_power_factors(unsigned a) {
  std::vector<TrailStep> out;
  if (a == 8) out.push_back({WitnessFamilyId::pow2_8, 0});
  if (a == 10) out.push_back({WitnessFamilyId::neg2_10, 0});
  if (a == 12) {
    out.push_back({WitnessFamilyId::pos2_12, 0});
    out.push_back({WitnessFamilyId::neg2_12, 0});
  }
  if (a >= 13) {
    // 2^13 (1 + 3k) = +-2^a needs 1 + 3k = +-2^(a-13), and exactly one sign is 1 mod 3.
    const unsigned e = a - 13;
    const BigInt t = (e % 2 == 0) ? pow2(e) : BigInt(-pow2(e));
    const BigInt k = (t - 1) / 3;
    out.push_back({WitnessFamilyId::pos2_13, k});
    out.push_back({WitnessFamilyId::neg2_13, k});
  }
  return out;
}

/// Single-family factors whose value is exactly +-3^b (b >= 3).
inline std::vector<TrailStep> three_power_factors(unsigned b) {
  std::vector<TrailStep> out;
  // -27 (1 + 8k) with 1 + 8k = 3^(b-3) for odd b; 81 (1 + 8k) with 1 + 8k = 3^(b-4) for even b.
  if (b >= 3 && b % 2 == 1) out.push_back({WitnessFamilyId::neg27, (ipow(3, b - 3) - 1) / 8});
  if (b >= 4 && b % 2 == 0) out.push_back({WitnessFamilyId::pos81, (ipow(3, b - 4) - 1) / 8});
  return out;
}

inline BigInt abs_k_sum(const std::vector<TrailStep>& trail) {
  BigInt s = 0;
  for (const auto& step : trail) s += abs(step.k);
  return s;
}

/// Shortest trail first, then smallest sum of |k|, then family order.
inline bool better_trail(const std::vector<TrailStep>& x, const std::vector<TrailStep>& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  const BigInt sx = abs_k_sum(x), sy = abs_k_sum(y);
  if (sx != sy) return sx < sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].family != y[i].family) return x[i].family < y[i].family;
    if (x[i].k != y[i].k) return x[i].k < y[i].k;
  }
  return false;
}

}  // namespace detail

/// Finds a trail of witness families whose product of values is `target`.
///
/// Candidates pick an optional exact power-of-two factor and an optional exact power-of-three
/// factor, then let one parametric family absorb whatever is left. For a member of S(S4) the
/// exact factors can always be signed so that the leftover is 1 mod 4 and prime to 6, which
/// one of the 1, 5, 13, 17 mod 24 families reaches.
inline std::vector<TrailStep> synthesize_trail(const BigInt& target) {
  if (!is_member(GroupRule::of(RuleKind::S4), target)) throw NotInSet(target);
  const unsigned a = valuation(target, 2).value();
  const unsigned b = valuation(target, 3).value();

  std::vector<std::optional<TrailStep>> twos{std::nullopt};
  for (auto& s : detail::two_power_factors(a)) twos.emplace_back(s);
  std::vector<std::optional<TrailStep>> threes{std::nullopt};
  for (auto& s : detail::three_power_factors(b)) threes.emplace_back(s);

  std::optional<std::vector<TrailStep>> best;
  auto offer = [&](std::vector<TrailStep> trail) {
    if (trail.empty() || trail_value(trail) != target) return;
    if (!best || detail::better_trail(trail, *best)) best = std::move(trail);
  };

  for (const auto& two : twos) {
    for (const auto& three : threes) {
      std::vector<TrailStep> fixed;
      if (two) fixed.push_back(*two);
      if (three) fixed.push_back(*three);
      const BigInt fixed_value = trail_value(fixed);
      if (target % fixed_value != 0) continue;
      const BigInt leftover = target / fixed_value;
      if (leftover == 1) offer(fixed);
      for (auto id : kAllFamilies) {
        if (family_is_constant(id)) {
          if (family_value(id, 0) != leftover) continue;
          auto trail = fixed;
          trail.push_back({id, 0});
          offer(std::move(trail));
        } else if (auto k = solve_family(id, leftover)) {
          auto trail = fixed;
          trail.push_back({id, *k});
          offer(std::move(trail));
        }
      }
    }
  }
  if (!best) throw SynthesisExhausted(target);
  return *best;
}

inline WitnessCertificate synthesize(const BigInt& target) {
  WitnessCertificate c;
  c.target = target;
  c.trail = synthesize_trail(target);
  c.coefficients = compose_trail(c.trail);
  return c;
}

/// Recomputes the determinant of the stored coefficients and the convolution of the trail.
inline bool verify_certificate(const WitnessCertificate& c) {
  if (c.coefficients.group().kind().family != GroupFamily::symmetric4) return false;
  if (det_exact(c.coefficients) != c.target) return false;
  return !c.trail.empty() && compose_trail(c.trail) == c.coefficients;
}

}  // namespace gdet
