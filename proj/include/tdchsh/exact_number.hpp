#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "tdchsh/rational.hpp"

namespace tdchsh {

/// Exact element of the field Q(i, sqrt2), stored on the basis
/// {1, sqrt2, i, i*sqrt2} with rational coordinates.
///
/// This field contains every constant the CHSH derivations need (1/2, 1/sqrt2,
/// 2*sqrt2, i, ...), so equalities like F = 2*sqrt2 are decided exactly.
class ExactNumber {
 public:
  ExactNumber() = default;
  ExactNumber(std::int64_t n) : re_1_(n) {}
  ExactNumber(Rational re1, Rational re_s = 0, Rational im1 = 0, Rational im_s = 0)
      : re_1_(re1), re_sqrt2_(re_s), im_1_(im1), im_sqrt2_(im_s) {}

  static ExactNumber zero() { return ExactNumber(); }
  static ExactNumber one() { return ExactNumber(1); }
  static ExactNumber i() { return ExactNumber(0, 0, 1, 0); }
  static ExactNumber sqrt2() { return ExactNumber(0, 1, 0, 0); }
  /// 1/sqrt2 = sqrt2/2.
  static ExactNumber inv_sqrt2() { return ExactNumber(0, Rational(1, 2), 0, 0); }

  Rational re_rational() const { return re_1_; }
  Rational re_sqrt2() const { return re_sqrt2_; }
  Rational im_rational() const { return im_1_; }
  Rational im_sqrt2() const { return im_sqrt2_; }

  bool is_zero() const {
    return re_1_.is_zero() && re_sqrt2_.is_zero() && im_1_.is_zero() && im_sqrt2_.is_zero();
  }
  bool is_one() const { return *this == one(); }
  bool is_real() const { return im_1_.is_zero() && im_sqrt2_.is_zero(); }
  bool is_rational() const { return is_real() && re_sqrt2_.is_zero(); }

  friend ExactNumber operator+(const ExactNumber& a, const ExactNumber& b) {
    return ExactNumber(a.re_1_ + b.re_1_, a.re_sqrt2_ + b.re_sqrt2_, a.im_1_ + b.im_1_,
                       a.im_sqrt2_ + b.im_sqrt2_);
  }
  friend ExactNumber operator-(const ExactNumber& a, const ExactNumber& b) { return a + (-b); }
  ExactNumber operator-() const { return ExactNumber(-re_1_, -re_sqrt2_, -im_1_, -im_sqrt2_); }

  friend ExactNumber operator*(const ExactNumber& a, const ExactNumber& b) {
    // (R1 + I1 i)(R2 + I2 i) with R, I in Q(sqrt2).
    const auto [rr_1, rr_s] = mul_q2(a.re_1_, a.re_sqrt2_, b.re_1_, b.re_sqrt2_);
    const auto [ii_1, ii_s] = mul_q2(a.im_1_, a.im_sqrt2_, b.im_1_, b.im_sqrt2_);
    const auto [ri_1, ri_s] = mul_q2(a.re_1_, a.re_sqrt2_, b.im_1_, b.im_sqrt2_);
    const auto [ir_1, ir_s] = mul_q2(a.im_1_, a.im_sqrt2_, b.re_1_, b.re_sqrt2_);
    return ExactNumber(rr_1 - ii_1, rr_s - ii_s, ri_1 + ir_1, ri_s + ir_s);
  }
  ExactNumber& operator+=(const ExactNumber& o) { return *this = *this + o; }
  ExactNumber& operator-=(const ExactNumber& o) { return *this = *this - o; }
  ExactNumber& operator*=(const ExactNumber& o) { return *this = *this * o; }

  friend bool operator==(const ExactNumber& a, const ExactNumber& b) {
    return a.re_1_ == b.re_1_ && a.re_sqrt2_ == b.re_sqrt2_ && a.im_1_ == b.im_1_ &&
           a.im_sqrt2_ == b.im_sqrt2_;
  }

  /// Complex conjugate: i -> -i.
  ExactNumber conj() const { return ExactNumber(re_1_, re_sqrt2_, -im_1_, -im_sqrt2_); }

  ExactNumber inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // z * conj_i(z) = R^2 + I^2 lies in Q(sqrt2); clear sqrt2 by its conjugate.
    const ExactNumber zi = conj();
    const ExactNumber n2 = *this * zi;  // real: (a, b, 0, 0)
    const Rational a = n2.re_1_, b = n2.re_sqrt2_;
    const Rational denom = a * a - Rational(2) * b * b;
    // 1/(a + b sqrt2) = (a - b sqrt2)/denom
    const ExactNumber inv_n2(a / denom, -b / denom, 0, 0);
    return zi * inv_n2;
  }
  friend ExactNumber operator/(const ExactNumber& a, const ExactNumber& b) {
    return a * b.inverse();
  }

  /// Exact sign of a real element a + b*sqrt2. Throws for non-real values.
  int sign() const {
    if (!is_real()) throw std::domain_error("sign of non-real number");
    const Rational a = re_1_, b = re_sqrt2_;
    if (b.is_zero()) return a.sign();
    if (a.is_zero()) return b.sign();
    if (a.sign() == b.sign()) return a.sign();
    // a, b of opposite sign: compare a^2 against 2 b^2.
    const Rational a2 = a * a, b22 = Rational(2) * b * b;
    if (a2 == b22) return 0;  // cannot happen (sqrt2 irrational) unless both zero
    return b22 < a2 ? a.sign() : b.sign();
  }

  ExactNumber abs() const { return sign() < 0 ? -*this : *this; }

  std::complex<double> to_complex() const {
    constexpr double kSqrt2 = 1.4142135623730951;
    return {re_1_.to_double() + re_sqrt2_.to_double() * kSqrt2,
            im_1_.to_double() + im_sqrt2_.to_double() * kSqrt2};
  }
  double to_double() const {
    if (!is_real()) throw std::domain_error("to_double on non-real number");
    return to_complex().real();
  }

  /// Canonical literal, e.g. "(3/2)+(1/2)*sqrt2*i", "2*sqrt2", "-1", "0".
  std::string to_string() const {
    std::string out;
    append_component(out, re_1_, "");
    append_component(out, re_sqrt2_, "sqrt2");
    append_component(out, im_1_, "i");
    append_component(out, im_sqrt2_, "sqrt2*i");
    return out.empty() ? "0" : out;
  }

 private:
  static std::pair<Rational, Rational> mul_q2(const Rational& a1, const Rational& a2,
                                              const Rational& b1, const Rational& b2) {
    // (a1 + a2 sqrt2)(b1 + b2 sqrt2)
    return {a1 * b1 + Rational(2) * a2 * b2, a1 * b2 + a2 * b1};
  }

  static void append_component(std::string& out, const Rational& c, const char* unit) {
    if (c.is_zero()) return;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::string m = mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
    if (*unit == '\0') {
      out += m;
    } else if (mag == Rational(1)) {
      out += unit;
    } else {
      out += m + "*" + unit;
    }
  }

  Rational re_1_;
  Rational re_sqrt2_;
  Rational im_1_;
  Rational im_sqrt2_;
};

}  // namespace tdchsh
