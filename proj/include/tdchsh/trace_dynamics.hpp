#pragma once

#include <string>

#include "tdchsh/algebras.hpp"
#include "tdchsh/errors.hpp"
#include "tdchsh/operator_expr.hpp"
#include "tdchsh/rewrite.hpp"

namespace tdchsh {

/// Remainder convention for the ladder contractions: the scalar unit
/// (condition a1 as stated) or the emergent sector identity 1eff.
using CommutatorConvention = ContractionUnit;

/// Declarative description of one constraint family:
///  (a1)  [a_i, a_j+] = delta_ij (anti-commutator fermionically),
///  (a2)  [a_j, A_i+] and [b_j, B_i+] nonzero but unspecified,
///  (a3)  a_i psi0 = b_i psi0 = 0,
/// with all other (anti)commutators vanishing.  The unspecified first-order
/// expectations become named indeterminates with conjugate pairing.
struct CaseSpec {
  Statistics statistics = Statistics::Bosonic;
  CommutatorConvention convention = CommutatorConvention::One;
  bool flipped = false;  // perturbation parts negated

  static CaseSpec bosonic() { return {}; }
  static CaseSpec fermionic() { return {Statistics::Fermionic, CommutatorConvention::One, false}; }
  static CaseSpec emergent_bosonic() {
    return {Statistics::Bosonic, CommutatorConvention::UnitEff, false};
  }

  /// Indeterminate name for <psi0| A_i a_j+ |psi0> (family picks A or B).
  static std::string expectation_var(Species family, int i, int j) {
    const char* f = family == Species::A ? "A" : "B";
    const char* l = family == Species::A ? "a" : "b";
    return std::string("<") + f + std::to_string(i) + " " + l + std::to_string(j) + "+>";
  }

  RewriteRules<Scalar> rules() const {
    RewriteRules<Scalar> r = ladder_rules<Scalar>(statistics, convention);
    add_perturbation_boundaries(r, statistics);
    r.validate_adjoint_consistency();
    return r;
  }

  Vacuum<Scalar> vacuum() const {
    Vacuum<Scalar> vac = ladder_vacuum<Scalar>(statistics, convention);
    const Scalar s = flipped ? Scalar(-1) : Scalar(1);
    for (Species fam : {Species::A, Species::B}) {
      for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
          const std::string name = expectation_var(fam, i, j);
          const Word w{perturbation(fam, i, false, statistics), ladder(fam, j, true, statistics)};
          vac.resolutions[w] = s * Scalar::var(name);
          vac.resolutions[adjoint_word(w)] = s * Scalar::var(Monomial::toggle_star(name));
        }
      }
    }
    return vac;
  }

  /// P0 = sum_{i,j} <A_i a_j+> + <B_i b_j+> as declared by this case.
  Scalar p0() const {
    Scalar p;
    const Scalar s = flipped ? Scalar(-1) : Scalar(1);
    for (Species fam : {Species::A, Species::B})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) p += s * Scalar::var(expectation_var(fam, i, j));
    return p;
  }
  Scalar p0_diagonal() const {
    Scalar p;
    const Scalar s = flipped ? Scalar(-1) : Scalar(1);
    for (Species fam : {Species::A, Species::B})
      for (int i = 1; i <= 2; ++i) p += s * Scalar::var(expectation_var(fam, i, i));
    return p;
  }
  Scalar p0_offdiagonal() const { return p0() - p0_diagonal(); }
};

/// Negates the perturbation parts.  The flipped case satisfies the same
/// conditions, and Re(P0) changes sign.
inline CaseSpec sign_flip(CaseSpec c) {
  c.flipped = !c.flipped;
  return c;
}

namespace td_detail {
inline Expr alpha(Statistics st, int i, bool dagger, bool with_perturbation) {
  Expr x(ladder(Species::A, i, dagger, st));
  if (with_perturbation) x = x + Expr(perturbation(Species::A, i, dagger, st));
  return x;
}
inline Expr beta(Statistics st, int i, bool dagger, bool with_perturbation) {
  Expr x(ladder(Species::B, i, dagger, st));
  if (with_perturbation) x = x + Expr(perturbation(Species::B, i, dagger, st));
  return x;
}
}  // namespace td_detail

/// The sandwiched CHSH polynomial for the canonical axes,
///   (b2 a1 - b1 a2) [ (a1+a1 - a2+a2)(b1+b1 - b2+b2)
///                   + (a1+a2 + a2+a1)(b1+b2 + b2+b1) ] (a1+b2+ - a2+b1+),
/// written in the split variables a_i + A_i, b_i + B_i.  No scalar prefactor
/// and no truncation are applied here.
inline Expr td_chsh_expression(Statistics st = Statistics::Bosonic,
                               bool with_perturbation = true) {
  using td_detail::alpha;
  using td_detail::beta;
  auto al = [&](int i, bool d) { return alpha(st, i, d, with_perturbation); };
  auto be = [&](int i, bool d) { return beta(st, i, d, with_perturbation); };

  const Expr bra = be(2, false) * al(1, false) - be(1, false) * al(2, false);
  const Expr mid =
      (al(1, true) * al(1, false) - al(2, true) * al(2, false)) *
          (be(1, true) * be(1, false) - be(2, true) * be(2, false)) +
      (al(1, true) * al(2, false) + al(2, true) * al(1, false)) *
          (be(1, true) * be(2, false) + be(2, true) * be(1, false));
  const Expr ket = al(1, true) * be(2, true) - al(2, true) * be(1, true);
  return bra * mid * ket;
}

/// The state-normalization sandwich (b2 a1 - b1 a2)(a1+b2+ - a2+b1+) in the
/// split variables; the probability-measure condition is vev of this times
/// one half equal to one.
inline Expr td_normalization_expression(Statistics st = Statistics::Bosonic,
                                        bool with_perturbation = true) {
  using td_detail::alpha;
  using td_detail::beta;
  auto al = [&](int i, bool d) { return alpha(st, i, d, with_perturbation); };
  auto be = [&](int i, bool d) { return beta(st, i, d, with_perturbation); };
  const Expr bra = be(2, false) * al(1, false) - be(1, false) * al(2, false);
  return bra * bra.adjoint();
}

/// Result of the mechanical reduction of the trace-dynamics CHSH value.
struct ReducedCHSH {
  Scalar value;        // (sqrt2/2) |vev|, sign-resolved through the constant part
  Scalar p0;           // the case's P0 combination
  Scalar raw_vev;      // the unnormalized sandwich expectation
  Scalar residual;     // value - expected closed form (zero on success)
  Scalar expected;     // 2 sqrt2 + (1/sqrt2) Re(P0)   (2 sqrt2 in the emergent case)
};

inline Scalar two_sqrt2() { return Scalar(ExactNumber(0, 2)); }

/// Pipeline: eps-truncate -> normal-order -> vev, then asserts the exact
/// closed form F_TD = 2 sqrt2 + (1/sqrt2) Re(P0) (with the Re(P0) term absent
/// under the emergent commutator convention).  Throws DerivationFailure with
/// the residual polynomial on mismatch.
inline ReducedCHSH reduce_f_td(const CaseSpec& c) {
  const Expr full = td_chsh_expression(c.statistics);
  const Expr truncated = full.epsilon_truncate();
  const Scalar raw = vev(truncated, c.rules(), c.vacuum());

  Scalar value = Scalar::inv_sqrt2() * raw;
  if (value.constant_part().sign() < 0) value = -value;

  Scalar expected = two_sqrt2();
  if (c.convention == CommutatorConvention::One)
    expected += Scalar::inv_sqrt2() * c.p0().real_part();

  const Scalar residual = value - expected;
  if (!residual.is_zero())
    throw DerivationFailure("trace-dynamics CHSH reduction mismatch", residual.to_string());
  return {value, c.p0(), raw, residual, expected};
}

struct ConstraintReport {
  Scalar lhs;             // (1/2) vev of the normalization sandwich
  Scalar reduced;         // lhs - 1, the constraint content
  Scalar expected;        // Re(sum_i diagonal expectations)
  Scalar residual;        // reduced - expected (zero on success)
  Scalar p0_constrained;  // P0 with the diagonal real parts removed
};

/// Reduces the probability-measure normalization to its closed form: the
/// condition is equivalent to Re(sum_i <A_i a_i+> + <B_i b_i+>) = 0, leaving
/// only the off-diagonal terms in P0.
inline ConstraintReport normalization_constraint(const CaseSpec& c) {
  const Expr expr = td_normalization_expression(c.statistics).epsilon_truncate();
  const Scalar lhs = Scalar::half() * vev(expr, c.rules(), c.vacuum());
  const Scalar reduced = lhs - Scalar::one();
  const Scalar expected = c.p0_diagonal().real_part();
  const Scalar residual = reduced - expected;
  if (!residual.is_zero())
    throw DerivationFailure("normalization constraint mismatch", residual.to_string());
  return {lhs, reduced, expected, residual,
          c.p0_offdiagonal() + (c.p0_diagonal() - c.p0_diagonal().real_part())};
}

/// Adler-Millard charge in the unsplit variables,
///   C~ = i sum_k ([alpha_k, alpha_k+] + [beta_k, beta_k+]).
inline Expr adler_millard_symbolic() {
  Expr sum;
  for (Species sp : {Species::Alpha, Species::Beta}) {
    for (int k = 1; k <= 2; ++k) {
      const Expr x(ladder(sp, k, false));
      const Expr xd(ladder(sp, k, true));
      sum = sum + (x * xd - xd * x);
    }
  }
  return Scalar::i() * sum;
}

/// Trace-Hamiltonian integrand (1/2) sum_k ({alpha_k, alpha_k+} + {beta_k, beta_k+}).
inline Expr trace_hamiltonian_symbolic() {
  Expr sum;
  for (Species sp : {Species::Alpha, Species::Beta}) {
    for (int k = 1; k <= 2; ++k) {
      const Expr x(ladder(sp, k, false));
      const Expr xd(ladder(sp, k, true));
      sum = sum + (x * xd + xd * x);
    }
  }
  return Scalar::half() * sum;
}

/// The charge under the emergent convention at zero perturbation: every
/// contraction yields the sector identity, so C~ normal-orders to 4 i 1eff
/// (four commutators, one unit each).
inline Expr adler_millard_emergent_reduced() {
  Expr sum;
  for (Species sp : {Species::A, Species::B}) {
    for (int k = 1; k <= 2; ++k) {
      const Expr x(ladder(sp, k, false));
      const Expr xd(ladder(sp, k, true));
      sum = sum + (x * xd - xd * x);
    }
  }
  const CaseSpec c = CaseSpec::emergent_bosonic();
  return normal_order(Scalar::i() * sum, c.rules());
}

}  // namespace tdchsh
