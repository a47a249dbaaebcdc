#pragma once

#include "gdet/ring.hpp"

#include <utility>
#include <vector>

namespace gdet {

/// Dense row-major square matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    for (const auto& row : rows) {
      if (row.size() != n_) throw InvalidArgument("matrix must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  [[nodiscard]] std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) elimination. Every division is exact; pivots are the first
/// nonzero entry of the column and each row swap flips the sign.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    const T& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m(i, j) * p;
        t -= lead * m(k, j);
        m(i, j) = t / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

/// Group matrix with entry (i, j) = x_{g_i g_j^{-1}}.
inline Matrix<BigInt> group_matrix(const GroupTable& g, std::span<const BigInt> coeffs) {
  const std::size_t n = g.order();
  if (coeffs.size() != n) throw InvalidArgument("coefficient vector length differs from group order");
  Matrix<BigInt> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coeffs[g.mul(i, g.inv(j))];
  return m;
}

inline Matrix<BigInt> group_matrix(const RingElement& e) { return group_matrix(e.group(), e.coeffs()); }

/// Exact group determinant by elimination on the group matrix; works for any table.
inline BigInt det_exact(const RingElement& e) { return bareiss_determinant(group_matrix(e)); }

inline BigInt det_exact(const GroupTable& g, std::span<const BigInt> coeffs) {
  return bareiss_determinant(group_matrix(g, coeffs));
}

}  // namespace gdet
