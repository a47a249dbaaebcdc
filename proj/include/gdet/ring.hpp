#pragma once

#include "gdet/group.hpp"

#include <span>
#include <vector>

namespace gdet {

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("group-ring elements belong to different groups") {}
};

/// c_g = sum over u*v = g of a_u * b_v, by a double loop over the Cayley table.
template <class T>
std::vector<T> convolve(const GroupTable& g, std::span<const T> a, std::span<const T> b) {
  const std::size_t n = g.order();
  if (a.size() != n || b.size() != n) throw InvalidArgument("coefficient vector length differs from group order");
  std::vector<T> c(n, T(0));
  for (std::size_t u = 0; u < n; ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (b[v] == 0) continue;
      c[g.mul(u, v)] += a[u] * b[v];
    }
  }
  return c;
}

/// Integer group-ring element: one coefficient per group element, in the table's index order.
/// For S4, coefficients 0..11 are a1..a12 and 12..23 are b1..b12.
class RingElement {
 public:
  explicit RingElement(GroupPtr group) : group_(std::move(group)), coeffs_(group_->order(), BigInt(0)) {}

  RingElement(GroupPtr group, std::vector<BigInt> coeffs) : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order()) {
      throw InvalidArgument("expected " + std::to_string(group_->order()) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
    }
  }

  static RingElement identity(GroupPtr group) {
    RingElement e(std::move(group));
    e.coeffs_[e.group_->identity()] = 1;
    return e;
  }

  static RingElement scalar(GroupPtr group, BigInt value) {
    RingElement e(std::move(group));
    e.coeffs_[e.group_->identity()] = std::move(value);
    return e;
  }

  static RingElement basis(GroupPtr group, std::size_t index) {
    RingElement e(std::move(group));
    e.coeffs_.at(index) = 1;
    return e;
  }

  template <class Int>
  static RingElement from_ints(GroupPtr group, std::span<const Int> values) {
    std::vector<BigInt> coeffs(values.begin(), values.end());
    return RingElement(std::move(group), std::move(coeffs));
  }

  [[nodiscard]] const GroupTable& group() const { return *group_; }
  [[nodiscard]] const GroupPtr& group_ptr() const { return group_; }
  [[nodiscard]] std::span<const BigInt> coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  BigInt& operator[](std::size_t i) { return coeffs_[i]; }

  /// S4 only: a_i for i = 1..12.
  [[nodiscard]] const BigInt& a(std::size_t i) const { return coeffs_.at(i - 1); }
  /// S4 only: b_i for i = 1..12.
  [[nodiscard]] const BigInt& b(std::size_t i) const { return coeffs_.at(11 + i); }

  RingElement& operator+=(const RingElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator-(RingElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return *a.group_ == *b.group_ && a.coeffs_ == b.coeffs_;
  }

  [[nodiscard]] bool same_group(const RingElement& o) const { return group_ == o.group_ || *group_ == *o.group_; }

 private:
  void check_same(const RingElement& o) const {
    if (!same_group(o)) throw GroupMismatch();
  }

  GroupPtr group_;
  std::vector<BigInt> coeffs_;
};

/// Group-ring product.
inline RingElement convolve(const RingElement& a, const RingElement& b) {
  if (!a.same_group(b)) throw GroupMismatch();
  return RingElement(a.group_ptr(), convolve<BigInt>(a.group(), a.coeffs(), b.coeffs()));
}

inline RingElement operator*(const RingElement& a, const RingElement& b) { return convolve(a, b); }

/// Repeated squaring under convolution.
inline RingElement power(RingElement base, std::uint64_t exponent) {
  RingElement result = RingElement::identity(base.group_ptr());
  while (exponent != 0) {
    if (exponent & 1U) result = convolve(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = convolve(base, base);
  }
  return result;
}

}  // namespace gdet
