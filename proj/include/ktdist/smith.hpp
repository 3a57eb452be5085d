#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "ktdist/bigint.hpp"
#include "ktdist/matrix.hpp"

namespace ktdist {

// Invariant factors of an integer matrix.
//
// invariant_factors holds the nonzero diagonal of the Smith normal form,
// positive and ordered so that each divides the next; unit factors are kept.
// det_sign is the sign of the determinant for square inputs (0 iff singular)
// and empty otherwise.
template <typename Scalar>
struct SnfResult {
  std::vector<Scalar> invariant_factors;
  Index rank = 0;
  std::optional<int> det_sign;

  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

using Snf = SnfResult<BigInt>;

namespace detail {

template <std::signed_integral T>
T scalar_abs(T x) { return x < 0 ? -x : x; }
inline BigInt scalar_abs(const BigInt& x) { return abs(x); }

template <std::signed_integral T>
T scalar_gcd(T a, T b) { return std::gcd(a, b); }
inline BigInt scalar_gcd(const BigInt& a, const BigInt& b) { return gcd(a, b); }

template <std::signed_integral T>
int scalar_sign(T x) { return (x > 0) - (x < 0); }
inline int scalar_sign(const BigInt& x) { return x.sign(); }

template <typename Scalar>
bool is_zero(const Scalar& x) { return x == Scalar(0); }

// Moves the nonzero entry of least magnitude in a(t.., t..) to (t, t).
// Returns false when that block is zero. Each swap flips `sign`.
template <typename Scalar>
bool bring_min_pivot(Matrix<Scalar>& a, Index t, int& sign) {
  Index best_i = -1, best_j = -1;
  Scalar best{};
  for (Index j = t; j < a.cols(); ++j) {
    for (Index i = t; i < a.rows(); ++i) {
      if (is_zero(a(i, j))) continue;
      Scalar mag = scalar_abs(a(i, j));
      if (best_i < 0 || mag < best) {
        best = std::move(mag);
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_i < 0) return false;
  if (best_i != t) {
    a.row(best_i).swap(a.row(t));
    sign = -sign;
  }
  if (best_j != t) {
    a.col(best_j).swap(a.col(t));
    sign = -sign;
  }
  return true;
}

}  // namespace detail

// Smith normal form by pivoting on the entry of least magnitude.
//
// Row and column t are cleared by Euclidean reduction against the pivot;
// whenever a remainder survives, a smaller pivot exists and the step restarts.
// Once cleared, an entry of the trailing block not divisible by the pivot is
// folded into row t, which forces another round. The determinant sign is
// tracked through the swaps, independently of the factor magnitudes.
template <typename Derived>
SnfResult<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using detail::is_zero;
  Matrix<Scalar> a = m;
  const Index rows = a.rows();
  const Index cols = a.cols();
  int sign = 1;
  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    if (!detail::bring_min_pivot(a, t, sign)) break;
    for (;;) {
      bool reduced = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (is_zero(a(i, t))) continue;
        const Scalar q = a(i, t) / a(t, t);
        for (Index j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (!is_zero(a(i, t))) reduced = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (is_zero(a(t, j))) continue;
        const Scalar q = a(t, j) / a(t, t);
        for (Index i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (!is_zero(a(t, j))) reduced = false;
      }
      if (!reduced) {
        detail::bring_min_pivot(a, t, sign);
        continue;
      }
      bool divides_all = true;
      for (Index i = t + 1; i < rows && divides_all; ++i) {
        for (Index j = t + 1; j < cols; ++j) {
          if (!is_zero(a(i, j) % a(t, t))) {
            for (Index c = t; c < cols; ++c) a(t, c) += a(i, c);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
  }

  SnfResult<Scalar> result;
  result.rank = t;
  result.invariant_factors.reserve(static_cast<std::size_t>(t));
  for (Index i = 0; i < t; ++i) {
    sign *= detail::scalar_sign(a(i, i));
    result.invariant_factors.push_back(detail::scalar_abs(a(i, i)));
  }
  if (rows == cols) result.det_sign = (t == rows) ? sign : 0;
  return result;
}

// Exact determinant by Bareiss fraction-free elimination with row pivoting.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  Matrix<Scalar> a = m;
  const Index n = a.rows();
  Scalar sign(1);
  Scalar prev(1);
  for (Index k = 0; k < n; ++k) {
    if (detail::is_zero(a(k, k))) {
      Index p = k + 1;
      while (p < n && detail::is_zero(a(p, k))) ++p;
      if (p == n) return Scalar(0);
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return n == 0 ? Scalar(1) : sign * a(n - 1, n - 1);
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_unimodular: matrix is not square");
  return detail::scalar_abs(determinant(m)) == typename Derived::Scalar(1);
}

// Largest dimension accepted by gcd_of_minors_snf.
inline constexpr Index kMinorOracleMaxDim = 10;

// Invariant factors from determinantal divisors: d_i is the gcd of all i x i
// minors and f_i = d_i / d_{i-1}. Every minor is evaluated by cofactor
// expansion along its first row, sharing sub-minors across sizes. Exponential
// in the dimension; intended only as a cross-check for small matrices.
template <typename Derived>
SnfResult<typename Derived::Scalar> gcd_of_minors_snf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index rows = m.rows();
  const Index cols = m.cols();
  if (rows > kMinorOracleMaxDim || cols > kMinorOracleMaxDim) {
    throw std::invalid_argument("gcd_of_minors_snf: " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " exceeds the " +
                                std::to_string(kMinorOracleMaxDim) + "x" +
                                std::to_string(kMinorOracleMaxDim) + " oracle limit");
  }

  auto subsets = [](Index universe, int size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << universe); ++s) {
      if (std::popcount(s) == size) out.push_back(s);
    }
    return out;
  };
  auto key = [](std::uint32_t r, std::uint32_t c) { return (std::uint64_t{r} << 32) | c; };

  SnfResult<Scalar> result;
  std::unordered_map<std::uint64_t, Scalar> previous;
  Scalar previous_divisor(1);
  const Index top = std::min(rows, cols);
  for (int size = 1; size <= top; ++size) {
    std::unordered_map<std::uint64_t, Scalar> current;
    Scalar divisor(0);
    const auto row_sets = subsets(rows, size);
    const auto col_sets = subsets(cols, size);
    for (std::uint32_t rs : row_sets) {
      const int lead = std::countr_zero(rs);
      const std::uint32_t rest_rows = rs & (rs - 1);
      for (std::uint32_t cs : col_sets) {
        Scalar minor(0);
        if (size == 1) {
          minor = m(lead, std::countr_zero(cs));
        } else {
          int position = 0;
          for (std::uint32_t bits = cs; bits != 0; bits &= bits - 1, ++position) {
            const int c = std::countr_zero(bits);
            if (detail::is_zero(m(lead, c))) continue;
            const Scalar& sub = previous.at(key(rest_rows, cs & ~(1u << c)));
            if (position % 2 == 0) {
              minor += m(lead, c) * sub;
            } else {
              minor -= m(lead, c) * sub;
            }
          }
        }
        divisor = detail::scalar_gcd(divisor, minor);
        if (size == rows && size == cols) {
          result.det_sign = detail::scalar_sign(minor);
        }
        current.emplace(key(rs, cs), std::move(minor));
      }
    }
    if (detail::is_zero(divisor)) break;
    result.invariant_factors.push_back(divisor / previous_divisor);
    result.rank = size;
    previous_divisor = std::move(divisor);
    previous = std::move(current);
  }
  if (rows == cols && !result.det_sign) result.det_sign = rows == 0 ? 1 : 0;
  if (rows == cols && result.rank < rows) result.det_sign = 0;
  return result;
}

}  // namespace ktdist
