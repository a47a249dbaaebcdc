#pragma once

// Linear forms in the 24 S4 coefficients that define the factors of the S4 group determinant.
// Variable index i in 0..11 is a_{i+1}; index 12 + i is b_{i+1}. These tables are shared by the
// numeric evaluator and the symbolic engine; the representation tables in reps.hpp are an
// independent source used to check them.

#include <array>
#include <cstdint>

namespace gdet::s4 {

inline constexpr std::size_t kVariables = 24;

struct SignedVar {
  std::uint8_t var;
  std::int8_t sign;
};

using CubicEntry = std::array<SignedVar, 4>;
using CubicMatrix = std::array<std::array<CubicEntry, 3>, 3>;

constexpr SignedVar pa(int i) { return {static_cast<std::uint8_t>(i - 1), 1}; }
constexpr SignedVar ma(int i) { return {static_cast<std::uint8_t>(i - 1), -1}; }
constexpr SignedVar pb(int i) { return {static_cast<std::uint8_t>(11 + i), 1}; }
constexpr SignedVar mb(int i) { return {static_cast<std::uint8_t>(11 + i), -1}; }

/// Even-part matrix A; d1 = det(A + B), d2 = det(A - B).
inline constexpr CubicMatrix kMatrixA = {{
    {{{pa(1), ma(2), ma(3), pa(4)}, {pa(9), pa(10), ma(11), ma(12)}, {ma(5), pa(6), ma(7), pa(8)}}},
    {{{pa(5), ma(6), ma(7), pa(8)}, {pa(1), ma(2), pa(3), ma(4)}, {ma(9), pa(10), pa(11), ma(12)}}},
    {{{ma(9), pa(10), ma(11), pa(12)}, {ma(5), ma(6), pa(7), pa(8)}, {pa(1), pa(2), ma(3), ma(4)}}},
}};

/// Odd-part matrix B.
inline constexpr CubicMatrix kMatrixB = {{
    {{{pb(9), pb(10), mb(11), mb(12)}, {mb(1), pb(2), mb(3), pb(4)}, {mb(5), pb(6), pb(7), mb(8)}}},
    {{{pb(1), mb(2), mb(3), pb(4)}, {pb(5), pb(6), mb(7), mb(8)}, {pb(9), mb(10), pb(11), mb(12)}}},
    {{{mb(5), pb(6), mb(7), pb(8)}, {pb(9), mb(10), mb(11), pb(12)}, {mb(1), mb(2), pb(3), pb(4)}}},
}};

/// u_i = a_{4i-3} + ... + a_{4i}, v_i likewise over b (1-based i).
constexpr std::array<std::uint8_t, 4> quartet_a(int i) {
  const auto base = static_cast<std::uint8_t>(4 * (i - 1));
  return {base, static_cast<std::uint8_t>(base + 1), static_cast<std::uint8_t>(base + 2),
          static_cast<std::uint8_t>(base + 3)};
}
constexpr std::array<std::uint8_t, 4> quartet_b(int i) {
  auto q = quartet_a(i);
  for (auto& v : q) v = static_cast<std::uint8_t>(v + 12);
  return q;
}

/// Six-term sums A_1..A_3 (over a) and B_1..B_3 (over b), as 0-based variable indices.
inline constexpr std::array<std::array<std::uint8_t, 6>, 3> kSumsA = {{
    {0, 1, 4, 7, 8, 9},
    {0, 2, 5, 7, 9, 11},
    {0, 3, 6, 7, 9, 10},
}};
inline constexpr std::array<std::array<std::uint8_t, 6>, 3> kSumsB = {{
    {12, 13, 18, 19, 22, 23},
    {13, 14, 16, 19, 21, 22},
    {12, 14, 16, 18, 21, 23},
}};

}  // namespace gdet::s4
