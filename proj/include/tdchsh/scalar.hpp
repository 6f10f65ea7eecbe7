#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdchsh/exact_number.hpp"

namespace tdchsh {

/// Power product of named indeterminates, kept sorted by name.
///
/// An indeterminate whose name ends in '*' is by convention the complex
/// conjugate of the one without the suffix; conjugation toggles the suffix.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& var) : factors_{{var, 1}} {}

  bool is_constant() const { return factors_.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
  }
  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
        out.factors_.push_back(*ia++);
      } else if (ia == a.factors_.end() || ib->first < ia->first) {
        out.factors_.push_back(*ib++);
      } else {
        out.factors_.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  Monomial conj() const {
    Monomial out;
    for (const auto& [v, e] : factors_) out.factors_.emplace_back(toggle_star(v), e);
    std::sort(out.factors_.begin(), out.factors_.end());
    return out;
  }

  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  std::string to_string() const {
    std::string out;
    for (const auto& [v, e] : factors_) {
      if (!out.empty()) out += "*";
      out += v;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  static std::string toggle_star(const std::string& v) {
    if (!v.empty() && v.back() == '*') return v.substr(0, v.size() - 1);
    return v + "*";
  }

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

/// Exact polynomial over Q(i, sqrt2) in named indeterminates.
///
/// Indeterminates stand for vacuum expectations the rule set leaves opaque
/// (e.g. "<A1 a2+>"); all arithmetic is exact and zero terms are pruned, so
/// operator== decides polynomial identity.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t n) { add_term(Monomial(), ExactNumber(n)); }
  Scalar(Rational r) { add_term(Monomial(), ExactNumber(r)); }
  Scalar(const ExactNumber& c) { add_term(Monomial(), c); }

  static Scalar var(const std::string& name) {
    Scalar s;
    s.add_term(Monomial(name), ExactNumber::one());
    return s;
  }
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(ExactNumber::i()); }
  static Scalar sqrt2() { return Scalar(ExactNumber::sqrt2()); }
  static Scalar inv_sqrt2() { return Scalar(ExactNumber::inv_sqrt2()); }
  static Scalar half() { return Scalar(Rational(1, 2)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }
  /// The coefficient of the empty monomial.
  ExactNumber constant_part() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? ExactNumber::zero() : it->second;
  }
  ExactNumber constant_value() const {
    if (!is_constant()) throw std::domain_error("scalar is not constant: " + to_string());
    return constant_part();
  }
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  std::size_t num_terms() const { return terms_.size(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  Scalar operator-() const {
    Scalar out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  Scalar conj() const {
    Scalar out;
    for (const auto& [m, c] : terms_) out.add_term(m.conj(), c.conj());
    return out;
  }
  /// (x + conj(x))/2 with conjugation through the declared '*'-pairing.
  Scalar real_part() const { return (*this + conj()) * half(); }

  /// Numeric evaluation. The assignment maps unstarred indeterminate names to
  /// complex values; starred names evaluate to the conjugate automatically.
  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& vals) const {
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : terms_) {
      std::complex<double> t = c.to_complex();
      for (const auto& [v, e] : m.factors()) {
        std::complex<double> x;
        if (!v.empty() && v.back() == '*') {
          x = std::conj(lookup(vals, v.substr(0, v.size() - 1)));
        } else {
          x = lookup(vals, v);
        }
        for (int k = 0; k < e; ++k) t *= x;
      }
      total += t;
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.to_string();
      const bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
      if (!out.empty()) {
        if (!composite && cs[0] == '-') {
          out += " - ";
          cs = cs.substr(1);
        } else {
          out += " + ";
        }
      }
      if (composite) cs = "(" + cs + ")";
      if (m.is_constant()) {
        out += cs;
      } else if (cs == "1") {
        out += m.to_string();
      } else if (cs == "-1") {
        out += "-" + m.to_string();
      } else {
        out += cs + "*" + m.to_string();
      }
    }
    return out;
  }

 private:
  static std::complex<double> lookup(const std::map<std::string, std::complex<double>>& vals,
                                     const std::string& name) {
    auto it = vals.find(name);
    if (it == vals.end()) throw std::domain_error("unassigned indeterminate: " + name);
    return it->second;
  }

  void add_term(const Monomial& m, const ExactNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Monomial, ExactNumber> terms_;
};

}  // namespace tdchsh
