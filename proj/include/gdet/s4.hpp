#pragma once

#include "gdet/determinant.hpp"
#include "gdet/s4_forms.hpp"

#include <array>

namespace gdet {

/// x + y*omega in Z[omega], omega^2 = -1 - omega.
template <class Int>
struct EisensteinInt {
  Int x{0};
  Int y{0};

  EisensteinInt() = default;
  EisensteinInt(Int re) : x(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  EisensteinInt(Int re, Int om) : x(std::move(re)), y(std::move(om)) {}

  static EisensteinInt omega() { return {Int(0), Int(1)}; }
  static EisensteinInt omega2() { return {Int(-1), Int(-1)}; }

  [[nodiscard]] Int norm() const { return x * x - x * y + y * y; }
  /// Complex conjugate: omega maps to omega^2.
  [[nodiscard]] EisensteinInt conj() const { return {Int(x - y), Int(-y)}; }
  [[nodiscard]] bool is_zero() const { return x == 0 && y == 0; }

  EisensteinInt& operator+=(const EisensteinInt& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  EisensteinInt& operator-=(const EisensteinInt& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  EisensteinInt& operator*=(const EisensteinInt& o) {
    Int bd = y * o.y;
    Int nx = x * o.x - bd;
    Int ny = x * o.y + y * o.x - bd;
    x = std::move(nx);
    y = std::move(ny);
    return *this;
  }
  friend EisensteinInt operator+(EisensteinInt a, const EisensteinInt& b) { return a += b; }
  friend EisensteinInt operator-(EisensteinInt a, const EisensteinInt& b) { return a -= b; }
  friend EisensteinInt operator*(EisensteinInt a, const EisensteinInt& b) { return a *= b; }
  friend EisensteinInt operator-(const EisensteinInt& a) { return {Int(-a.x), Int(-a.y)}; }
  friend bool operator==(const EisensteinInt& a, const EisensteinInt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator==(const EisensteinInt& a, int v) { return a.y == 0 && a.x == v; }
};

/// The five irreducible factor values of the S4 group determinant and the auxiliary sums they
/// are built from. D = l1 * l2 * q1^2 * d1^3 * d2^3.
struct FactorProfile {
  BigInt l1, l2, q1, d1, d2;
  BigInt det;
  Valuation two_adic, three_adic;  // of det
  std::array<BigInt, 3> u_parts, v_parts;
  BigInt u, v, w;
  std::array<BigInt, 3> sums_a, sums_b;  // A_1..A_3, B_1..B_3
};

namespace s4 {

inline BigInt eval_entry(const CubicEntry& entry, std::span<const BigInt> x) {
  BigInt s = 0;
  for (const auto& t : entry) {
    if (t.sign > 0) s += x[t.var];
    else s -= x[t.var];
  }
  return s;
}

inline BigInt det3(const Matrix<BigInt>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Q(x, y, z) = x^2 + y^2 + z^2 - xy - yz - zx = N(x + y*omega + z*omega^2).
inline BigInt quadratic_form(const BigInt& x, const BigInt& y, const BigInt& z) {
  return x * x + y * y + z * z - x * y - y * z - z * x;
}

/// A + sign * B evaluated at the coefficients.
inline Matrix<BigInt> factor_matrix(std::span<const BigInt> x, int sign) {
  Matrix<BigInt> m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      m(i, j) = eval_entry(kMatrixA[i][j], x);
      if (sign > 0) m(i, j) += eval_entry(kMatrixB[i][j], x);
      else m(i, j) -= eval_entry(kMatrixB[i][j], x);
    }
  return m;
}

inline void require_s4(std::span<const BigInt> x) {
  if (x.size() != kVariables) throw InvalidArgument("S4 elements have 24 coefficients");
}

}  // namespace s4

inline FactorProfile s4_factors(std::span<const BigInt> x) {
  s4::require_s4(x);
  FactorProfile f;
  for (int i = 0; i < 3; ++i) {
    f.u_parts[i] = 0;
    f.v_parts[i] = 0;
    for (auto k : s4::quartet_a(i + 1)) f.u_parts[i] += x[k];
    for (auto k : s4::quartet_b(i + 1)) f.v_parts[i] += x[k];
    f.sums_a[i] = 0;
    f.sums_b[i] = 0;
    for (auto k : s4::kSumsA[i]) f.sums_a[i] += x[k];
    for (auto k : s4::kSumsB[i]) f.sums_b[i] += x[k];
  }
  f.u = f.u_parts[0] + f.u_parts[1] + f.u_parts[2];
  f.v = f.v_parts[0] + f.v_parts[1] + f.v_parts[2];
  f.w = 0;
  for (int i = 0; i < 3; ++i) f.w += f.u_parts[i] * f.sums_b[i] + f.v_parts[i] * f.sums_a[i];
  f.l1 = f.u + f.v;
  f.l2 = f.u - f.v;
  f.q1 = s4::quadratic_form(f.u_parts[0], f.u_parts[1], f.u_parts[2]) -
         s4::quadratic_form(f.v_parts[0], f.v_parts[1], f.v_parts[2]);
  f.d1 = s4::det3(s4::factor_matrix(x, +1));
  f.d2 = s4::det3(s4::factor_matrix(x, -1));
  BigInt d12 = f.d1 * f.d2;
  f.det = f.l1 * f.l2 * f.q1 * f.q1 * d12 * d12 * d12;
  f.two_adic = valuation(f.det, 2);
  f.three_adic = valuation(f.det, 3);
  return f;
}

inline FactorProfile s4_factors(const RingElement& e) {
  if (e.group().kind().family != GroupFamily::symmetric4) throw InvalidArgument("s4_factors needs an S4 element");
  return s4_factors(e.coeffs());
}

/// l1 * l2 * q1^2 * d1^3 * d2^3.
inline BigInt s4_det_fast(std::span<const BigInt> x) {
  s4::require_s4(x);
  BigInt u = 0, v = 0;
  std::array<BigInt, 3> up, vp;
  for (int i = 0; i < 3; ++i) {
    for (auto k : s4::quartet_a(i + 1)) up[i] += x[k];
    for (auto k : s4::quartet_b(i + 1)) vp[i] += x[k];
    u += up[i];
    v += vp[i];
  }
  BigInt q1 = s4::quadratic_form(up[0], up[1], up[2]) - s4::quadratic_form(vp[0], vp[1], vp[2]);
  BigInt d12 = s4::det3(s4::factor_matrix(x, +1)) * s4::det3(s4::factor_matrix(x, -1));
  return (u + v) * (u - v) * q1 * q1 * d12 * d12 * d12;
}

inline BigInt s4_det_fast(const RingElement& e) {
  if (e.group().kind().family != GroupFamily::symmetric4) throw InvalidArgument("s4_det_fast needs an S4 element");
  return s4_det_fast(e.coeffs());
}

/// q1 through Z[omega] norms, independent of the integer quadratic form.
inline BigInt q1_via_norms(const FactorProfile& f) {
  using E = EisensteinInt<BigInt>;
  auto lift = [](const std::array<BigInt, 3>& p) {
    return E(p[0]) + E(p[1]) * E::omega() + E(p[2]) * E::omega2();
  };
  return lift(f.u_parts).norm() - lift(f.v_parts).norm();
}

}  // namespace gdet
