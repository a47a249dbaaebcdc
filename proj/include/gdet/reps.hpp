#pragma once

// Irreducible representations of S4 of degree 2 and 3, one matrix per element in canonical
// order. They are an independent source for q1, d1 and d2: the determinant of
// sum_g x_g rho(g) must reproduce each factor polynomial.

#include "gdet/sympoly.hpp"

namespace gdet {

using Eis = EisensteinInt<BigInt>;
using Mat2E = std::array<std::array<Eis, 2>, 2>;
using Mat3I = std::array<std::array<int, 3>, 3>;

struct RepTable {
  std::array<Mat2E, 24> rho1;
  std::array<Mat3I, 24> rho2;
  std::array<Mat3I, 24> rho3;
};

namespace detail {

inline Mat2E mat2(Eis a, Eis b, Eis c, Eis d) { return {{{a, b}, {c, d}}}; }

}  // namespace detail

inline RepTable standard_rep_table() {
  RepTable t;
  const Eis o = Eis(0), one = Eis(1), w = Eis::omega(), w2 = Eis::omega2();
  // rho1 is constant on consecutive blocks of four elements.
  const std::array<Mat2E, 6> blocks = {
      detail::mat2(one, o, o, one), detail::mat2(w, o, o, w2),  detail::mat2(w2, o, o, w),
      detail::mat2(o, one, one, o), detail::mat2(o, w, w2, o),  detail::mat2(o, w2, w, o)};
  for (std::size_t g = 0; g < 24; ++g) t.rho1[g] = blocks[g / 4];

  t.rho2 = {{
      // 1, (13)(24), (14)(23), (12)(34)
      {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
      {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}},
      {{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}},
      {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}},
      // (134), (243), (142), (123)
      {{{0, 0, -1}, {1, 0, 0}, {0, -1, 0}}},
      {{{0, 0, 1}, {-1, 0, 0}, {0, -1, 0}}},
      {{{0, 0, -1}, {-1, 0, 0}, {0, 1, 0}}},
      {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}},
      // (143), (132), (124), (234)
      {{{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}}},
      {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}},
      {{{0, -1, 0}, {0, 0, 1}, {-1, 0, 0}}},
      {{{0, -1, 0}, {0, 0, -1}, {1, 0, 0}}},
      // (1234), (1432), (24), (13)
      {{{0, -1, 0}, {1, 0, 0}, {0, 0, -1}}},
      {{{0, 1, 0}, {-1, 0, 0}, {0, 0, -1}}},
      {{{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}},
      {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}},
      // (14), (23), (1243), (1342)
      {{{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}},
      {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}},
      {{{0, 0, 1}, {0, -1, 0}, {-1, 0, 0}}},
      {{{0, 0, -1}, {0, -1, 0}, {1, 0, 0}}},
      // (12), (34), (1324), (1423)
      {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}},
      {{{1, 0, 0}, {0, 0, -1}, {0, -1, 0}}},
      {{{-1, 0, 0}, {0, 0, 1}, {0, -1, 0}}},
      {{{-1, 0, 0}, {0, 0, -1}, {0, 1, 0}}},
  }};
  for (std::size_t g = 0; g < 24; ++g) {
    const int sign = g < 12 ? 1 : -1;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t.rho3[g][i][j] = sign * t.rho2[g][i][j];
  }
  return t;
}

template <class M>
M mat_mul(const M& x, const M& y) {
  M r{};
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r[i][j] = {};
      for (std::size_t k = 0; k < n; ++k) r[i][j] = r[i][j] + x[i][k] * y[k][j];
    }
  return r;
}

/// Number of pairs (g, h) with rho(g) rho(h) != rho(gh); zero for a homomorphism.
template <class M>
std::size_t homomorphism_failures(const GroupTable& g, const std::array<M, 24>& rho) {
  std::size_t failures = 0;
  for (std::size_t a = 0; a < 24; ++a)
    for (std::size_t b = 0; b < 24; ++b)
      if (!(mat_mul(rho[a], rho[b]) == rho[g.mul(a, b)])) ++failures;
  return failures;
}

struct RepCheckReport {
  std::size_t rho1_failures = 0, rho2_failures = 0, rho3_failures = 0;  // homomorphism law
  bool rho3_is_signed_rho2 = false;
  bool q1_matches = false, d1_matches = false, d2_matches = false;

  [[nodiscard]] bool homomorphisms() const { return rho1_failures == 0 && rho2_failures == 0 && rho3_failures == 0; }
  [[nodiscard]] bool factors() const { return q1_matches && d1_matches && d2_matches; }
};

/// Symbolic sum_g x_g rho(g) for an integer representation.
inline std::vector<std::vector<IntPoly>> generic_matrix(const std::array<Mat3I, 24>& rho) {
  std::vector<std::vector<IntPoly>> m(3, std::vector<IntPoly>(3));
  for (std::size_t g = 0; g < 24; ++g)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (rho[g][i][j] != 0) m[i][j] += IntPoly::variable(g, BigInt(rho[g][i][j]));
  return m;
}

/// det(sum_g x_g rho1(g)) as an integer polynomial, or empty if some coefficient has a
/// nonzero omega part.
inline std::optional<IntPoly> rho1_determinant(const std::array<Mat2E, 24>& rho1) {
  using EPoly = SparsePoly<Eis>;
  std::vector<std::vector<EPoly>> m(2, std::vector<EPoly>(2));
  for (std::size_t g = 0; g < 24; ++g)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (!rho1[g][i][j].is_zero()) m[i][j] += EPoly::variable(g, rho1[g][i][j]);
  const EPoly det = symbolic_det(m);
  IntPoly out;
  for (const auto& [mono, c] : det.terms()) {
    if (c.y != 0) return std::nullopt;
    out.add_term(mono, c.x);
  }
  return out;
}

inline RepCheckReport rep_factor_report(const RepTable& t) {
  const GroupTable& g = *s4_group();
  const S4Symbolic& s = s4_symbolic();
  RepCheckReport r;
  r.rho1_failures = homomorphism_failures(g, t.rho1);
  r.rho2_failures = homomorphism_failures(g, t.rho2);
  r.rho3_failures = homomorphism_failures(g, t.rho3);
  r.rho3_is_signed_rho2 = true;
  for (std::size_t e = 0; e < 24; ++e) {
    const int sign = s4_permutation(e).sign();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (t.rho3[e][i][j] != sign * t.rho2[e][i][j]) r.rho3_is_signed_rho2 = false;
  }
  const auto q1 = rho1_determinant(t.rho1);
  r.q1_matches = q1.has_value() && *q1 == s.q1;
  r.d1_matches = symbolic_det(generic_matrix(t.rho2)) == s.d1;
  r.d2_matches = symbolic_det(generic_matrix(t.rho3)) == s.d2;
  return r;
}

/// True iff the determinants of the generic representation matrices equal q1, d1 and d2
/// exactly. A false result points to a transcription error in the tables or factor matrices.
inline bool rep_factor_check(const RepTable& t) { return rep_factor_report(t).factors(); }

}  // namespace gdet
