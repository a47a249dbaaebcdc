#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gdet {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// p-adic valuation; an empty value stands for v_p(0) = infinity.
struct Valuation {
  std::optional<unsigned> exponent;

  [[nodiscard]] bool infinite() const { return !exponent.has_value(); }
  [[nodiscard]] unsigned value() const { return exponent.value(); }

  /// True iff the valuation is at least `k` (always true for infinity).
  [[nodiscard]] bool at_least(unsigned k) const { return infinite() || *exponent >= k; }
  [[nodiscard]] bool equals(unsigned k) const { return !infinite() && *exponent == k; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

  [[nodiscard]] std::string to_string() const {
    return infinite() ? std::string("inf") : std::to_string(*exponent);
  }
};

/// Exponent of the prime `p` in `m`, by repeated exact division.
inline Valuation valuation(const BigInt& m, unsigned p) {
  if (p < 2) throw InvalidArgument("valuation base must be >= 2");
  if (m == 0) return {};
  BigInt rest = abs(m);
  unsigned e = 0;
  const BigInt base = p;
  for (;;) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rest, base, q, r);
    if (r != 0) break;
    rest = std::move(q);
    ++e;
  }
  return Valuation{e};
}

/// `m` with every factor of `p` removed (m != 0).
inline BigInt strip_prime(BigInt m, unsigned p) {
  const BigInt base = p;
  while (m != 0 && m % base == 0) m /= base;
  return m;
}

/// Least nonnegative residue of m modulo n (n > 0).
inline BigInt mod_floor(const BigInt& m, const BigInt& n) {
  BigInt r = m % n;
  if (r < 0) r += n;
  return r;
}

inline unsigned residue(const BigInt& m, unsigned n) {
  return mod_floor(m, BigInt(n)).convert_to<unsigned>();
}

inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

inline BigInt ipow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e != 0) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw InvalidArgument("empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("invalid integer literal: " + std::string(text));
  }
  BigInt value{std::string(digits)};
  return (!text.empty() && text.front() == '-') ? BigInt(-value) : value;
}

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace gdet
