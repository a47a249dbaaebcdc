#pragma once

#include "gdet/s4.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace gdet {

/// Exponent vector over a1..a12, b1..b12.
using Monomial = std::array<std::uint8_t, s4::kVariables>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t words[3];
    std::memcpy(words, m.data(), sizeof(words));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};
static_assert(sizeof(Monomial) == 3 * sizeof(std::uint64_t));

inline unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

inline std::string variable_name(std::size_t var) {
  return (var < 12 ? "a" : "b") + std::to_string(var % 12 + 1);
}

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("polynomial moduli differ") {}
};

namespace detail {

template <class C>
bool coeff_is_zero(const C& c) {
  if constexpr (requires { c.is_zero(); }) return c.is_zero();
  else return c == 0;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const unsigned s = unsigned(a[i]) + b[i];
    if (s > 255) throw InvalidArgument("monomial exponent overflow");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

}  // namespace detail

/// Sparse polynomial in the 24 S4 variables. Zero coefficients are never stored. Integer
/// polynomials may carry a modulus m, in which case every coefficient lies in [0, m).
template <class Coeff>
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Coeff>;
  static constexpr bool kIntegral = std::is_same_v<Coeff, BigInt>;

  SparsePoly() = default;

  static SparsePoly constant(Coeff c) {
    SparsePoly p;
    p.add_term(Monomial{}, std::move(c));
    return p;
  }

  static SparsePoly variable(std::size_t var, Coeff c = Coeff(1)) {
    if (var >= s4::kVariables) throw InvalidArgument("variable index out of range");
    Monomial m{};
    m[var] = 1;
    SparsePoly p;
    p.add_term(m, std::move(c));
    return p;
  }

  /// Sum of the listed variables, each with coefficient 1.
  template <class Range>
  static SparsePoly sum_of(const Range& vars) {
    SparsePoly p;
    for (auto v : vars) p += variable(v);
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::optional<BigInt>& modulus() const { return modulus_; }

  [[nodiscard]] Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Highest total degree, or -1 for the zero polynomial.
  [[nodiscard]] int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
    return d;
  }

  [[nodiscard]] bool is_homogeneous(unsigned d) const {
    for (const auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  void add_term(const Monomial& m, Coeff c) {
    if constexpr (kIntegral) {
      if (modulus_) c = mod_floor(c, *modulus_);
    }
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if constexpr (kIntegral) {
        if (modulus_) it->second = mod_floor(it->second, *modulus_);
      }
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    adopt_modulus(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    adopt_modulus(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r;
    r.modulus_ = a.modulus_;
    for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
    return r;
  }

  /// Term-by-term product aggregated in a hash table.
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    r.modulus_ = common_modulus(a, b);
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.term_count() * b.term_count(), std::size_t{1} << 22));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, inserted] = acc.try_emplace(detail::monomial_product(ma, mb), ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    }
    for (auto& [m, c] : acc) r.add_term(m, std::move(c));
    return r;
  }

  friend SparsePoly operator*(const Coeff& s, const SparsePoly& p) {
    SparsePoly r;
    r.modulus_ = p.modulus_;
    for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
    return r;
  }

  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

  /// Integer value at a point (one value per variable).
  [[nodiscard]] Coeff evaluate(std::span<const BigInt> point) const {
    if (point.size() != s4::kVariables) throw InvalidArgument("evaluation point needs 24 values");
    Coeff sum(0);
    for (const auto& [m, c] : terms_) {
      BigInt mono = 1;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) mono *= point[i];
      sum += c * Coeff(mono);
    }
    if constexpr (kIntegral) {
      if (modulus_) sum = mod_floor(sum, *modulus_);
    }
    return sum;
  }

  /// Substitutes x_i -> -x_i for every variable selected by `flip`.
  [[nodiscard]] SparsePoly flip_signs(const std::function<bool(std::size_t)>& flip) const {
    SparsePoly r;
    r.modulus_ = modulus_;
    for (const auto& [m, c] : terms_) {
      unsigned odd = 0;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (flip(i)) odd += m[i];
      r.add_term(m, odd % 2 == 0 ? c : Coeff(-c));
    }
    return r;
  }

  /// The same polynomial with b_i replaced by -b_i.
  [[nodiscard]] SparsePoly negate_b() const {
    return flip_signs([](std::size_t i) { return i >= 12; });
  }

  [[nodiscard]] std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += variable_name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

  [[nodiscard]] std::string to_string(std::size_t max_terms = std::numeric_limits<std::size_t>::max()) const
    requires(kIntegral)
  {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    std::size_t shown = 0;
    for (auto it = terms_.rbegin(); it != terms_.rend() && shown < max_terms; ++it, ++shown) {
      const auto& [m, c] = *it;
      const bool negative = c < 0;
      if (shown == 0) out << (negative ? "-" : "");
      else out << (negative ? " - " : " + ");
      const BigInt mag = negative ? BigInt(-c) : c;
      const bool is_one = m == Monomial{};
      if (mag != 1 || is_one) out << mag << (is_one ? "" : "*");
      if (!is_one) out << monomial_string(m);
    }
    if (shown < terms_.size()) out << " + ... (" << terms_.size() - shown << " more terms)";
    return out.str();
  }

  // Integer-only operations.

  /// Reduces every coefficient into [0, m).
  [[nodiscard]] SparsePoly reduced_mod(const BigInt& m) const
    requires(kIntegral)
  {
    if (m <= 0) throw InvalidArgument("modulus must be positive");
    if (modulus_ && *modulus_ != m) throw ModulusMismatch();
    SparsePoly r;
    r.modulus_ = m;
    for (const auto& [mono, c] : terms_) r.add_term(mono, c);
    return r;
  }

  /// Exact division of every coefficient by `d`; empty if some coefficient is not divisible.
  [[nodiscard]] std::optional<SparsePoly> divide_exact(const BigInt& d) const
    requires(kIntegral)
  {
    if (modulus_) throw InvalidArgument("exact division of a modular polynomial");
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
      BigInt q, rem;
      boost::multiprecision::divide_qr(c, d, q, rem);
      if (rem != 0) return std::nullopt;
      r.add_term(m, std::move(q));
    }
    return r;
  }

 private:
  static std::optional<BigInt> common_modulus(const SparsePoly& a, const SparsePoly& b) {
    if (a.modulus_ != b.modulus_) throw ModulusMismatch();
    return a.modulus_;
  }

  void adopt_modulus(const SparsePoly& o) { modulus_ = common_modulus(*this, o); }

  Terms terms_;
  std::optional<BigInt> modulus_;
};

using IntPoly = SparsePoly<BigInt>;

inline IntPoly poly_add(const IntPoly& p, const IntPoly& q) { return p + q; }
inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }
inline IntPoly poly_mod(const IntPoly& p, const BigInt& m) { return p.reduced_mod(m); }

/// Cofactor expansion of a 1x1, 2x2 or 3x3 matrix of polynomials.
template <class Coeff>
SparsePoly<Coeff> symbolic_det(const std::vector<std::vector<SparsePoly<Coeff>>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("symbolic_det needs a square matrix");
  switch (n) {
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default: throw InvalidArgument("symbolic_det supports sizes 1 to 3");
  }
}

/// Factor polynomials of the S4 group determinant and the auxiliary forms used in the
/// congruence identities.
struct S4Symbolic {
  IntPoly l1, l2, q1, d1, d2;
  IntPoly u, v, w;
  std::array<IntPoly, 3> u_parts, v_parts;
  std::array<IntPoly, 3> sums_a, sums_b;  // A_i, B_i
  std::vector<std::vector<IntPoly>> matrix_a, matrix_b;
};

namespace detail {

inline IntPoly entry_poly(const s4::CubicEntry& entry) {
  IntPoly p;
  for (const auto& t : entry) p += IntPoly::variable(t.var, BigInt(t.sign));
  return p;
}

inline IntPoly quadratic_form_poly(const std::array<IntPoly, 3>& p) {
  return p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - p[0] * p[1] - p[1] * p[2] - p[2] * p[0];
}

}  // namespace detail

inline S4Symbolic build_symbolic() {
  S4Symbolic s;
  for (int i = 0; i < 3; ++i) {
    s.u_parts[i] = IntPoly::sum_of(s4::quartet_a(i + 1));
    s.v_parts[i] = IntPoly::sum_of(s4::quartet_b(i + 1));
    s.sums_a[i] = IntPoly::sum_of(s4::kSumsA[i]);
    s.sums_b[i] = IntPoly::sum_of(s4::kSumsB[i]);
  }
  s.u = s.u_parts[0] + s.u_parts[1] + s.u_parts[2];
  s.v = s.v_parts[0] + s.v_parts[1] + s.v_parts[2];
  for (int i = 0; i < 3; ++i) s.w += s.u_parts[i] * s.sums_b[i] + s.v_parts[i] * s.sums_a[i];
  s.l1 = s.u + s.v;
  s.l2 = s.u - s.v;
  s.q1 = detail::quadratic_form_poly(s.u_parts) - detail::quadratic_form_poly(s.v_parts);

  s.matrix_a.assign(3, std::vector<IntPoly>(3));
  s.matrix_b.assign(3, std::vector<IntPoly>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      s.matrix_a[i][j] = detail::entry_poly(s4::kMatrixA[i][j]);
      s.matrix_b[i][j] = detail::entry_poly(s4::kMatrixB[i][j]);
    }
  auto combine = [&](int sign) {
    std::vector<std::vector<IntPoly>> m(3, std::vector<IntPoly>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m[i][j] = sign > 0 ? s.matrix_a[i][j] + s.matrix_b[i][j] : s.matrix_a[i][j] - s.matrix_b[i][j];
    return m;
  };
  s.d1 = symbolic_det(combine(+1));
  s.d2 = symbolic_det(combine(-1));
  return s;
}

/// Built once on first use.
inline const S4Symbolic& s4_symbolic() {
  static const S4Symbolic s = build_symbolic();
  return s;
}

enum class IdentityId { L_MOD2, D_MOD2, Q_MOD3, PROD_MOD4, SUM_MOD4, D1_EXPANSION, SUM_MOD8, DIFF_MOD8 };

inline constexpr std::array<IdentityId, 8> kAllIdentities = {
    IdentityId::L_MOD2,   IdentityId::D_MOD2,       IdentityId::Q_MOD3,   IdentityId::PROD_MOD4,
    IdentityId::SUM_MOD4, IdentityId::D1_EXPANSION, IdentityId::SUM_MOD8, IdentityId::DIFF_MOD8};

inline std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::L_MOD2: return "L_MOD2";
    case IdentityId::D_MOD2: return "D_MOD2";
    case IdentityId::Q_MOD3: return "Q_MOD3";
    case IdentityId::PROD_MOD4: return "PROD_MOD4";
    case IdentityId::SUM_MOD4: return "SUM_MOD4";
    case IdentityId::D1_EXPANSION: return "D1_EXPANSION";
    case IdentityId::SUM_MOD8: return "SUM_MOD8";
    case IdentityId::DIFF_MOD8: return "DIFF_MOD8";
  }
  return "?";
}

inline std::string_view identity_statement(IdentityId id) {
  switch (id) {
    case IdentityId::L_MOD2: return "l1 = l2 (mod 2)";
    case IdentityId::D_MOD2: return "d1 = d2 (mod 2)";
    case IdentityId::Q_MOD3: return "q1 = l1*l2 (mod 3)";
    case IdentityId::PROD_MOD4: return "d1*d2 = l1*l2*q1^2 (mod 4)";
    case IdentityId::SUM_MOD4: return "d1 + d2 = (l1 + l2)*q1 (mod 4)";
    case IdentityId::D1_EXPANSION: return "d1 = l1*(q1 + 2uv + 2w) + 4C(a,b), C integral cubic";
    case IdentityId::SUM_MOD8: return "d1 + d2 = 2u*q1 + 4u*v^2 + 4v*w (mod 8)";
    case IdentityId::DIFF_MOD8: return "d1 - d2 = 2v*q1 + 4u^2*v + 4u*w (mod 8)";
  }
  return "?";
}

inline IdentityId parse_identity_id(std::string_view name) {
  for (auto id : kAllIdentities)
    if (identity_name(id) == name) return id;
  throw InvalidArgument("unknown identity '" + std::string(name) + "'");
}

struct IdentityReport {
  IdentityId id{};
  bool holds = false;
  std::size_t residual_term_count = 0;
  std::string residual_sample;  // leading residual terms, empty when the identity holds
  double seconds = 0.0;
  // D1_EXPANSION only.
  std::optional<IntPoly> quotient;  // C(a, b)
  bool quotient_cubic = false;
  bool mirror_holds = false;        // d2 = l2*(q1 - 2uv - 2w) + 4C(a,-b)
  bool mirror_sum_even = false;     // C(a,b) + C(a,-b) has even coefficients
};

namespace detail {

inline void record_residual(IdentityReport& r, const IntPoly& residual) {
  r.residual_term_count = residual.term_count();
  r.holds = residual.is_zero();
  if (!r.holds) r.residual_sample = residual.to_string(8);
}

inline void check_d1_expansion(const S4Symbolic& s, IdentityReport& r) {
  const BigInt two(2), four(4);
  const IntPoly twice = two * (s.u * s.v + s.w);
  const IntPoly remainder = s.d1 - s.l1 * (s.q1 + twice);
  const IntPoly residual = poly_mod(remainder, four);
  r.residual_term_count = residual.term_count();
  if (!residual.is_zero()) {
    r.residual_sample = residual.to_string(8);
    r.holds = false;
    return;
  }
  r.quotient = remainder.divide_exact(four);
  const IntPoly& c = *r.quotient;
  r.quotient_cubic = c.is_homogeneous(3);
  const IntPoly c_mirror = c.negate_b();
  const IntPoly mirror_residual = s.d2 - (s.l2 * (s.q1 - twice) + four * c_mirror);
  r.mirror_holds = mirror_residual.is_zero();
  if (!r.mirror_holds) r.residual_sample = "mirror: " + mirror_residual.to_string(8);
  r.mirror_sum_even = poly_mod(c + c_mirror, two).is_zero();
  r.holds = r.quotient_cubic && r.mirror_holds && r.mirror_sum_even;
}

}  // namespace detail

/// Checks one congruence identity as an exact polynomial computation over the integers,
/// reducing only the final difference.
inline IdentityReport check_identity(IdentityId id, const S4Symbolic& s) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport r;
  r.id = id;
  const BigInt two(2), four(4);
  switch (id) {
    case IdentityId::L_MOD2: detail::record_residual(r, poly_mod(s.l1 - s.l2, 2)); break;
    case IdentityId::D_MOD2: detail::record_residual(r, poly_mod(s.d1 - s.d2, 2)); break;
    case IdentityId::Q_MOD3: detail::record_residual(r, poly_mod(s.q1 - s.l1 * s.l2, 3)); break;
    case IdentityId::PROD_MOD4:
      detail::record_residual(r, poly_mod(s.d1 * s.d2 - s.l1 * s.l2 * (s.q1 * s.q1), 4));
      break;
    case IdentityId::SUM_MOD4: detail::record_residual(r, poly_mod(s.d1 + s.d2 - (s.l1 + s.l2) * s.q1, 4)); break;
    case IdentityId::D1_EXPANSION: detail::check_d1_expansion(s, r); break;
    case IdentityId::SUM_MOD8: {
      const IntPoly rhs = two * (s.u * s.q1) + four * (s.u * s.v * s.v) + four * (s.v * s.w);
      detail::record_residual(r, poly_mod(s.d1 + s.d2 - rhs, 8));
      break;
    }
    case IdentityId::DIFF_MOD8: {
      const IntPoly rhs = two * (s.v * s.q1) + four * (s.u * s.u * s.v) + four * (s.u * s.w);
      detail::record_residual(r, poly_mod(s.d1 - s.d2 - rhs, 8));
      break;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline IdentityReport check_identity(IdentityId id) { return check_identity(id, s4_symbolic()); }

/// Runs the given identity checks, at most `threads` at a time; results keep input order.
inline std::vector<IdentityReport> check_identities(std::span<const IdentityId> ids, unsigned threads = 1) {
  const S4Symbolic& s = s4_symbolic();
  std::vector<IdentityReport> out(ids.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = check_identity(ids[i], s);
    return out;
  }
  for (std::size_t begin = 0; begin < ids.size(); begin += threads) {
    std::vector<std::future<IdentityReport>> batch;
    for (std::size_t i = begin; i < std::min(ids.size(), begin + threads); ++i)
      batch.push_back(std::async(std::launch::async, [&s, id = ids[i]] { return check_identity(id, s); }));
    for (std::size_t i = 0; i < batch.size(); ++i) out[begin + i] = batch[i].get();
  }
  return out;
}

}  // namespace gdet
