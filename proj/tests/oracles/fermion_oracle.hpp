#pragma once

// Occupation-basis fermion oracle on up to 4 modes with explicit parity
// strings (Jordan-Wigner construction), independent of the symbolic engine.

#include <complex>
#include <vector>

#include "tdchsh/generator.hpp"

namespace fermion_oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

constexpr int kModes = 4;
constexpr int kDim = 1 << kModes;

inline Mat zero_matrix() { return Mat(kDim, std::vector<C>(kDim, C(0))); }

inline Mat identity() {
  Mat m = zero_matrix();
  for (int i = 0; i < kDim; ++i) m[i][i] = 1;
  return m;
}

/// Annihilator of `mode` with the parity string over lower modes.
inline Mat annihilator(int mode) {
  Mat m = zero_matrix();
  for (int n = 0; n < kDim; ++n) {
    if (!(n & (1 << mode))) continue;
    int parity = 0;
    for (int k = 0; k < mode; ++k)
      if (n & (1 << k)) parity ^= 1;
    m[n & ~(1 << mode)][n] = parity ? -1.0 : 1.0;
  }
  return m;
}

inline Mat dagger(const Mat& a) {
  Mat m = zero_matrix();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m[i][j] = std::conj(a[j][i]);
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat m = zero_matrix();
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      if (a[i][k] == C(0)) continue;
      for (int j = 0; j < kDim; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

/// Mode numbering: a1 a2 b1 b2 -> 0 1 2 3.
inline int mode_index(const tdchsh::Generator& g) {
  const int base = g.species == tdchsh::Species::A ? 0 : 2;
  return base + g.mode - 1;
}

inline Mat generator_matrix(const tdchsh::Generator& g) {
  const Mat a = annihilator(mode_index(g));
  return g.dagger ? dagger(a) : a;
}

/// <0| word |0> evaluated through the explicit matrices.
inline C vacuum_expectation(const tdchsh::Word& w) {
  Mat m = identity();
  for (const auto& g : w) m = mul(m, generator_matrix(g));
  return m[0][0];
}

}  // namespace fermion_oracle
