#pragma once

#include <array>
#include <complex>

// Index convention: TX/RX/link indices are 0-based throughout the library.
// "TX 1" of the usual two-user notation is index 0.

namespace dcsit {

using cplx = std::complex<double>;

/// Real 2x2 matrix, m[row][col].
using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Complex 2x2 matrix. For channels, row i is the channel seen by RX i and
/// column k is the contribution of TX k (received sample = sum_k h[i][k] x[k]).
using CMatrix2 = std::array<std::array<cplx, 2>, 2>;

/// Complex 2-vector; entry k is the coefficient applied at TX k.
using CVector2 = std::array<cplx, 2>;

inline constexpr int other(int index) noexcept { return 1 - index; }

inline constexpr double positive_part(double x) noexcept { return x > 0.0 ? x : 0.0; }

inline constexpr Matrix2 filled(double v) noexcept { return {{{v, v}, {v, v}}}; }

inline cplx dot(const std::array<cplx, 2>& row, const CVector2& t) noexcept {
  return row[0] * t[0] + row[1] * t[1];
}

inline double squared_norm(const CVector2& t) noexcept { return std::norm(t[0]) + std::norm(t[1]); }

}  // namespace dcsit
