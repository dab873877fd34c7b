#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qfrob/errors.hpp"
#include "qfrob/rational_function.hpp"
#include "qfrob/tensor.hpp"

namespace qfrob {

// Determinant by Laplace expansion with memoization over column subsets.
// Division free, so it works over any commutative ring type; cost is
// O(2^n * n) ring operations, fine for the n <= 8 this library targets.
template <class T>
T determinant(const Matrix<T>& m) {
  const std::size_t n = m.dim();
  if (n == 0) return T(1);
  const std::uint32_t full = (1U << n) - 1U;
  // minor[mask] = determinant of the bottom rows restricted to columns not in
  // `mask`, where the number of rows consumed equals popcount(mask).
  std::vector<T> memo(std::size_t{1} << n);
  std::vector<bool> have(std::size_t{1} << n, false);
  memo[full] = T(1);
  have[full] = true;
  for (std::uint32_t mask = full; mask-- > 0;) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    T acc(0);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1U << c)) continue;
      const T& entry = m(row, c);
      const std::uint32_t next = mask | (1U << c);
      if (have[next]) {
        T term = entry * memo[next];
        if (position % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++position;
    }
    memo[mask] = std::move(acc);
    have[mask] = true;
  }
  return memo[0];
}

template <class T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.dim();
  Matrix<T> out(n - 1, 2);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Transposed cofactor matrix: m * adjugate(m) = det(m) * I.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  const std::size_t n = m.dim();
  Matrix<T> adj(n, 2, T(0));
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T c = determinant(minor_matrix(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? c : T(0) - c;
    }
  return adj;
}

// adjugate(m) / det(m). Throws DegenerateMetric when det(m) is identically 0.
Matrix<RationalFunction> invert_matrix(const Matrix<RationalFunction>& m);
Matrix<Rational> invert_matrix(const Matrix<Rational>& m);

Matrix<RationalFunction> to_rational_functions(const Matrix<Polynomial>& m);
Matrix<RationalFunction> to_rational_functions(const Matrix<Rational>& m);

}  // namespace qfrob
