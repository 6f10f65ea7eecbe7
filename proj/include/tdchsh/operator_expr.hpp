#pragma once

#include <complex>
#include <map>
#include <string>

#include "tdchsh/generator.hpp"
#include "tdchsh/scalar.hpp"

namespace tdchsh {

/// Coefficient-type operations used by the expression engine.  The primary
/// instantiation is the exact Scalar; std::complex<double> backs the float
/// path for arbitrary axes and rotations.
template <class S>
struct scalar_ops {
  static S zero() { return S::zero(); }
  static S one() { return S::one(); }
  static bool is_zero(const S& s) { return s.is_zero(); }
  static S conj(const S& s) { return s.conj(); }
  static S from_rational(const Rational& r) { return S(r); }
  static std::string to_string(const S& s) { return s.to_string(); }
};

template <>
struct scalar_ops<std::complex<double>> {
  using C = std::complex<double>;
  static C zero() { return {0.0, 0.0}; }
  static C one() { return {1.0, 0.0}; }
  static bool is_zero(const C& s) { return s == C{0.0, 0.0}; }
  static C conj(const C& s) { return std::conj(s); }
  static C from_rational(const Rational& r) { return {r.to_double(), 0.0}; }
  static std::string to_string(const C& s) {
    return "(" + std::to_string(s.real()) + "," + std::to_string(s.imag()) + ")";
  }
};

/// Element of the free *-algebra: a finite sum of scalar-weighted words.
/// Multiplication is plain concatenation; no rewriting happens here.
template <class S>
class OperatorExpr {
 public:
  using Ops = scalar_ops<S>;
  using TermMap = std::map<Word, S, WordLess>;

  OperatorExpr() = default;
  explicit OperatorExpr(const S& c) { add_term(Word{}, c); }
  OperatorExpr(const Generator& g) { add_term(Word{g}, Ops::one()); }
  OperatorExpr(const Word& w, const S& c) { add_term(w, c); }

  static OperatorExpr zero() { return {}; }
  static OperatorExpr one() { return OperatorExpr(Ops::one()); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  int degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return static_cast<int>(d);
  }
  int max_eps_grade() const {
    int g = 0;
    for (const auto& [w, c] : terms_) g = std::max(g, eps_grade(w));
    return g;
  }

  void add_term(const Word& w, const S& c) {
    if (Ops::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (Ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
  }
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, S(-1) * c);
    return out;
  }
  OperatorExpr operator-() const { return OperatorExpr() - *this; }

  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr out;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    }
    return out;
  }
  friend OperatorExpr operator*(const S& c, const OperatorExpr& x) {
    OperatorExpr out;
    for (const auto& [w, cw] : x.terms_) out.add_term(w, c * cw);
    return out;
  }

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
    return a.terms_ == b.terms_;
  }

  /// Anti-automorphism: reverses words, daggers generators, conjugates
  /// coefficients.  Involutive.
  OperatorExpr adjoint() const {
    OperatorExpr out;
    for (const auto& [w, c] : terms_) out.add_term(adjoint_word(w), Ops::conj(c));
    return out;
  }

  /// Drops every word containing two or more eps-grade-1 generators.
  OperatorExpr epsilon_truncate() const {
    OperatorExpr out;
    for (const auto& [w, c] : terms_)
      if (eps_grade(w) < 2) out.add_term(w, c);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      std::string cs = Ops::to_string(c);
      const bool composite =
          cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos ||
          cs.find(' ') != std::string::npos;
      if (!out.empty()) {
        if (!composite && cs[0] == '-') {
          out += " - ";
          cs = cs.substr(1);
        } else {
          out += " + ";
        }
      }
      if (composite) cs = "(" + cs + ")";
      if (w.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += word_to_string(w);
      } else if (cs == "-1") {
        out += "-" + word_to_string(w);
      } else {
        out += cs + "*" + word_to_string(w);
      }
    }
    return out;
  }

 private:
  TermMap terms_;
};

using Expr = OperatorExpr<Scalar>;
using CExpr = OperatorExpr<std::complex<double>>;

}  // namespace tdchsh
