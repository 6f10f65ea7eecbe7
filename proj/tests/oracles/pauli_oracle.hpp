#pragma once

// Brute-force two-qubit oracle on the 4-dimensional product space, fully
// independent of the operator-algebra engine.  Qubit convention: index 0 is
// spin-up, so the algebra state a_i+ b_j+ |0> maps to |i-1> (x) |j-1>.

#include <array>
#include <cmath>
#include <complex>

namespace pauli_oracle {

using C = std::complex<double>;
using Vec4 = std::array<C, 4>;
using Mat2 = std::array<std::array<C, 2>, 2>;
using Mat4 = std::array<std::array<C, 4>, 4>;

inline Mat2 sigma(int k) {
  switch (k) {
    case 1: return {{{0, 1}, {1, 0}}};
    case 2: return {{{0, C(0, -1)}, {C(0, 1), 0}}};
    default: return {{{1, 0}, {0, -1}}};
  }
}

inline Mat2 pauli_axis(const std::array<double, 3>& n) {
  Mat2 m{};
  for (int k = 1; k <= 3; ++k) {
    const Mat2 s = sigma(k);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[i][j] += n[k - 1] * s[i][j];
  }
  return m;
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return m;
}

inline Mat2 identity2() { return {{{1, 0}, {0, 1}}}; }

/// State from creation coefficients: sum_ij c[i][j] a_{i+1}+ b_{j+1}+ |0>.
inline Vec4 state_from_coeffs(const std::array<std::array<C, 2>, 2>& c) {
  Vec4 v{};
  double n2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      v[2 * i + j] = c[i][j];
      n2 += std::norm(c[i][j]);
    }
  const double n = std::sqrt(n2);
  for (auto& x : v) x /= n;
  return v;
}

inline Vec4 singlet() {
  return state_from_coeffs({{{C(0), C(1)}, {C(-1), C(0)}}});
}
inline Vec4 triplet(int m) {
  if (m == 1) return state_from_coeffs({{{C(1), C(0)}, {C(0), C(0)}}});
  if (m == 0) return state_from_coeffs({{{C(0), C(1)}, {C(1), C(0)}}});
  return state_from_coeffs({{{C(0), C(0)}, {C(0), C(1)}}});
}

inline C expectation(const Vec4& v, const Mat4& m) {
  C e = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e += std::conj(v[i]) * m[i][j] * v[j];
  return e;
}

/// E(na, nb) = <(na.sigma) (x) (nb.sigma)>, already +-1 normalized.
inline double correlation(const Vec4& v, const std::array<double, 3>& na,
                          const std::array<double, 3>& nb) {
  return expectation(v, kron(pauli_axis(na), pauli_axis(nb))).real();
}

inline double chsh(const Vec4& v, const std::array<double, 3>& c, const std::array<double, 3>& cp,
                   const std::array<double, 3>& d, const std::array<double, 3>& dp) {
  return std::abs(correlation(v, c, d) - correlation(v, c, dp) + correlation(v, cp, d) +
                  correlation(v, cp, dp));
}

/// Probability of outcome (+1 -> first rotated basis vector) on one side.
/// Columns of u are the rotated basis states.
inline double probability(const Vec4& v, bool side_a, const Mat2& u, int outcome) {
  const int col = outcome > 0 ? 0 : 1;
  Mat2 proj{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) proj[i][j] = u[i][col] * std::conj(u[j][col]);
  const Mat4 full = side_a ? kron(proj, identity2()) : kron(identity2(), proj);
  return expectation(v, full).real();
}

}  // namespace pauli_oracle
