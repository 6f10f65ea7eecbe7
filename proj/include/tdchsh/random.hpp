#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace tdchsh {

/// Seeded random helpers.  All sampling goes through explicit formulas on
/// mt19937_64 draws so a fixed seed reproduces the same stream in every
/// build of this project.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::mt19937_64& engine() { return eng_; }

  double uniform() {  // [0, 1)
    return (eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    // Box-Muller; cache the second value.
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  std::complex<double> complex_gaussian() { return {gaussian(), gaussian()}; }

  /// Uniform point on the unit 2-sphere.
  std::array<double, 3> unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = 2.0 * M_PI * uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  /// Haar-uniform SU(2) element via a normalized quaternion.
  std::array<std::array<std::complex<double>, 2>, 2> haar_su2() {
    double q[4];
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (double& c : q) {
        c = gaussian();
        n2 += c * c;
      }
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    const double a = q[0] / n, b = q[1] / n, c = q[2] / n, d = q[3] / n;
    // U = a + i(b sigma_x + c sigma_y + d sigma_z), det U = 1.
    return {{{std::complex<double>(a, d), std::complex<double>(c, b)},
             {std::complex<double>(-c, b), std::complex<double>(a, -d)}}};
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tdchsh
