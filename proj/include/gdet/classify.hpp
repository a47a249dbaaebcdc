#pragma once

// Closed-form membership tests for the known sets S(G) of integer group determinants.

#include "gdet/group.hpp"

#include <optional>
#include <string>

namespace gdet {

enum class RuleKind { Zp, Z2p, Z9, Z4, Klein4, D8, S3, A4, S4 };

struct GroupRule {
  RuleKind kind = RuleKind::S4;
  unsigned p = 0;  // the prime for Zp and Z2p

  static GroupRule zp(unsigned prime);
  static GroupRule z2p(unsigned prime);
  static GroupRule of(RuleKind k) { return {k, 0}; }

  [[nodiscard]] std::string name() const {
    switch (kind) {
      case RuleKind::Zp: return "Zp:" + std::to_string(p);
      case RuleKind::Z2p: return "Z2p:" + std::to_string(p);
      case RuleKind::Z9: return "Z9";
      case RuleKind::Z4: return "Z4";
      case RuleKind::Klein4: return "K4";
      case RuleKind::D8: return "D8";
      case RuleKind::S3: return "S3";
      case RuleKind::A4: return "A4";
      case RuleKind::S4: return "S4";
    }
    return "?";
  }

  friend bool operator==(const GroupRule&, const GroupRule&) = default;
};

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline GroupRule GroupRule::zp(unsigned prime) {
  if (!is_prime(prime)) throw InvalidArgument("Zp rule needs a prime, got " + std::to_string(prime));
  return {RuleKind::Zp, prime};
}

inline GroupRule GroupRule::z2p(unsigned prime) {
  if (prime < 3 || !is_prime(prime)) throw InvalidArgument("Z2p rule needs an odd prime, got " + std::to_string(prime));
  return {RuleKind::Z2p, prime};
}

/// Accepts "Z4", "K4", "D8", "S3", "A4", "S4", "Z9", "Zp:<p>", "Z2p:<p>", and "Z<n>" for
/// cyclic orders that have a rule (n = 4, 9, a prime, or twice an odd prime).
inline GroupRule parse_group_rule(std::string_view text) {
  if (text == "Z4") return GroupRule::of(RuleKind::Z4);
  if (text == "Z9") return GroupRule::of(RuleKind::Z9);
  if (text == "K4" || text == "V4" || text == "Z2xZ2") return GroupRule::of(RuleKind::Klein4);
  if (text == "D8") return GroupRule::of(RuleKind::D8);
  if (text == "S3" || text == "D6") return GroupRule::of(RuleKind::S3);
  if (text == "A4") return GroupRule::of(RuleKind::A4);
  if (text == "S4") return GroupRule::of(RuleKind::S4);
  if (text.starts_with("Zp:")) return GroupRule::zp(detail::parse_unsigned(text.substr(3), "prime"));
  if (text.starts_with("Z2p:")) return GroupRule::z2p(detail::parse_unsigned(text.substr(4), "prime"));
  if (text.size() > 1 && text.front() == 'Z') {
    const unsigned n = detail::parse_unsigned(text.starts_with("Zn:") ? text.substr(3) : text.substr(1), "cyclic order");
    if (is_prime(n)) return GroupRule::zp(n);
    if (n % 2 == 0 && is_prime(n / 2) && n / 2 > 2) return GroupRule::z2p(n / 2);
  }
  throw InvalidArgument("no closed-form rule for group '" + std::string(text) + "'");
}

/// The decider matching a concrete group, if one is known.
inline std::optional<GroupRule> rule_for(const GroupKind& kind) {
  switch (kind.family) {
    case GroupFamily::cyclic: {
      const unsigned n = kind.param;
      if (n == 4) return GroupRule::of(RuleKind::Z4);
      if (n == 9) return GroupRule::of(RuleKind::Z9);
      if (is_prime(n)) return GroupRule::zp(n);
      if (n % 2 == 0 && n / 2 > 2 && is_prime(n / 2)) return GroupRule::z2p(n / 2);
      return std::nullopt;
    }
    case GroupFamily::klein: return GroupRule::of(RuleKind::Klein4);
    case GroupFamily::dihedral:
      if (kind.param == 4) return GroupRule::of(RuleKind::Klein4);
      if (kind.param == 6) return GroupRule::of(RuleKind::S3);
      if (kind.param == 8) return GroupRule::of(RuleKind::D8);
      return std::nullopt;
    case GroupFamily::alternating4: return GroupRule::of(RuleKind::A4);
    case GroupFamily::symmetric4: return GroupRule::of(RuleKind::S4);
  }
  return std::nullopt;
}

/// The arithmetic facts about m that every rule is stated in terms of.
struct MembershipReason {
  bool zero = false;
  int sign = 0;
  Valuation v2, v3, vp;        // vp only for Zp / Z2p
  unsigned odd_part_mod4 = 0;  // (m / 2^v2) mod 4, for m != 0
  unsigned residue_mod24 = 0;
  std::string clause;          // the clause that accepted m, or why it was rejected
};

struct MembershipVerdict {
  bool member = false;
  MembershipReason reason;
};

namespace detail {

inline bool zero_or_at_least(const Valuation& v, unsigned k) { return v.equals(0) || v.at_least(k); }

}  // namespace detail

/// Re-derives membership from the reason fields alone, filling in the clause text.
inline bool decide(const GroupRule& rule, MembershipReason& r) {
  using detail::zero_or_at_least;
  if (r.zero) {
    r.clause = "0 is excluded";
    return false;
  }
  const unsigned a = r.v2.value();
  const bool odd = a == 0;
  const bool one_mod4 = odd && r.odd_part_mod4 == 1;
  switch (rule.kind) {
    case RuleKind::Zp:
      r.clause = "p^a m with gcd(m,p)=1, a=0 or a>=2";
      return zero_or_at_least(r.vp, 2);
    case RuleKind::Z2p:
      r.clause = "2^a p^b m with gcd(m,2p)=1, a=0 or a>=2, b=0 or b>=2";
      return zero_or_at_least(r.v2, 2) && zero_or_at_least(r.vp, 2);
    case RuleKind::Z9:
      r.clause = "3^a m with gcd(m,3)=1, a=0 or a>=3";
      return zero_or_at_least(r.v3, 3);
    case RuleKind::Z4:
      if (odd) {
        r.clause = "2m+1";
        return true;
      }
      r.clause = "2^4 m";
      return a >= 4;
    case RuleKind::Klein4:
      if (odd) {
        r.clause = "4m+1";
        return one_mod4;
      }
      if (a == 4) {
        r.clause = "2^4(2m+1)";
        return true;
      }
      r.clause = "2^6 m";
      return a >= 6;
    case RuleKind::D8:
      if (odd) {
        r.clause = "4m+1";
        return one_mod4;
      }
      r.clause = "2^8 m";
      return a >= 8;
    case RuleKind::S3:
      r.clause = "2^a 3^b m with gcd(m,6)=1, a=0 or a>=2, b=0 or b>=3";
      return zero_or_at_least(r.v2, 2) && zero_or_at_least(r.v3, 3);
    case RuleKind::A4:
      if (odd) {
        r.clause = "odd: m = 1 mod 4 with 3 !| m or 3^2 | m";
        return one_mod4 && zero_or_at_least(r.v3, 2);
      }
      r.clause = "even: 2^a 3^b m, gcd(m,6)=1, a=4 or a>=8, b=0 or b>=2";
      return (a == 4 || a >= 8) && zero_or_at_least(r.v3, 2);
    case RuleKind::S4: {
      const bool three_ok = zero_or_at_least(r.v3, 3);
      if (odd) {
        r.clause = "odd: m = 1 mod 4 with 3 !| m or 3^3 | m";
        return one_mod4 && three_ok;
      }
      if (a == 8) {
        r.clause = "2^8 m, m = 1 mod 4, 3 !| m or 3^3 | m";
        return r.odd_part_mod4 == 1 && three_ok;
      }
      if (a == 10) {
        r.clause = "2^10 m, m = -1 mod 4, 3 !| m or 3^3 | m";
        return r.odd_part_mod4 == 3 && three_ok;
      }
      if (a >= 12) {
        r.clause = "2^12 m, 3 !| m or 3^3 | m";
        return three_ok;
      }
      r.clause = "2-adic valuation " + std::to_string(a) + " is not 0, 8, 10 or >= 12";
      return false;
    }
  }
  return false;
}

inline MembershipReason membership_reason(const GroupRule& rule, const BigInt& m) {
  MembershipReason r;
  r.zero = m == 0;
  r.sign = m > 0 ? 1 : m < 0 ? -1 : 0;
  r.v2 = valuation(m, 2);
  r.v3 = valuation(m, 3);
  if (rule.kind == RuleKind::Zp || rule.kind == RuleKind::Z2p) r.vp = valuation(m, rule.p);
  if (!r.zero) r.odd_part_mod4 = residue(strip_prime(m, 2), 4);
  r.residue_mod24 = residue(m, 24);
  return r;
}

inline MembershipVerdict member(const GroupRule& rule, const BigInt& m) {
  MembershipVerdict v;
  v.reason = membership_reason(rule, m);
  v.member = decide(rule, v.reason);
  return v;
}

inline bool is_member(const GroupRule& rule, const BigInt& m) { return member(rule, m).member; }

/// Smallest |m| >= 2 such that m or -m is a member, by enumeration.
inline BigInt lambda_of(const GroupRule& rule) {
  for (BigInt m = 2; m < 1'000'000; ++m)
    if (is_member(rule, m) || is_member(rule, -m)) return m;
  throw Error("lambda enumeration did not terminate for " + rule.name());
}

}  // namespace gdet
