#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "tdchsh/spin.hpp"
#include "tdchsh/trace_dynamics.hpp"

namespace tdchsh {

/// Applies an expression to the vacuum: normal-orders and drops every word
/// that ends in an annihilator (after stripping absorbed tokens).  The result
/// is the surviving creation polynomial; zero means the state is annihilated.
template <class S>
OperatorExpr<S> apply_to_vacuum(const OperatorExpr<S>& x, const RewriteRules<S>& rules,
                                const Vacuum<S>& vac) {
  const OperatorExpr<S> no = normal_order(x, rules);
  OperatorExpr<S> out;
  for (const auto& [word, c] : no.terms()) {
    std::size_t hi = word.size();
    while (hi > 0 && vac.absorbs(word[hi - 1])) --hi;
    if (hi > 0 && vac.annihilates(word[hi - 1])) continue;
    out.add_term(Word(word.begin(), word.begin() + hi), c);
  }
  return out;
}

struct FermionicSpinReport {
  bool su2_commutators_ok = false;       // [S_i, S_j] = i eps_ijk S_k, exact
  bool cross_species_commute = false;    // [S_i^A, S_j^B] = 0, exact
  bool singlet_annihilated = false;      // total S_k |singlet> = 0, k = 1..3
  bool nilpotency_ok = false;            // (a_1+)^2 |0> = 0
  Scalar chsh_canonical;                 // exact CHSH value at the canonical axes
  bool chsh_is_two_sqrt2 = false;
};

/// Rebuilds the spin formalism with anticommutation rules and verifies that
/// the SU(2) structure, the singlet, and the canonical CHSH value survive.
inline FermionicSpinReport fermionic_spin_check() {
  const SpinContext ctx = SpinContext::fermionic();
  FermionicSpinReport rep;

  rep.su2_commutators_ok = true;
  for (Side side : {Side::A, Side::B}) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        Expr expect;
        // i eps_ijk S_k
        const int k = 6 - i - j;
        if (i != j) {
          const int sign = ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1))
                               ? 1
                               : -1;
          expect = (sign == 1 ? Scalar::i() : -Scalar::i()) * spin_operator(ctx, side, k);
        }
        const Expr si = spin_operator(ctx, side, i);
        const Expr sj = spin_operator(ctx, side, j);
        const Expr comm = normal_order(si * sj - sj * si, ctx.rules);
        if (!(comm == normal_order(expect, ctx.rules))) rep.su2_commutators_ok = false;
      }
    }
  }

  rep.cross_species_commute = true;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Expr sa = spin_operator(ctx, Side::A, i);
      const Expr sb = spin_operator(ctx, Side::B, j);
      if (!normal_order(sa * sb - sb * sa, ctx.rules).is_zero())
        rep.cross_species_commute = false;
    }
  }

  const StateExpr psi = singlet(ctx);
  rep.singlet_annihilated = true;
  for (int k = 1; k <= 3; ++k) {
    const Expr applied = apply_to_vacuum(total_spin(ctx, k) * psi.creator, ctx.rules, ctx.vacuum);
    if (!applied.is_zero()) rep.singlet_annihilated = false;
  }

  const Expr adag(ladder(Species::A, 1, true, Statistics::Fermionic));
  rep.nilpotency_ok = apply_to_vacuum(adag * adag, ctx.rules, ctx.vacuum).is_zero();

  rep.chsh_canonical = chsh(ctx, psi, canonical_chsh_axes());
  rep.chsh_is_two_sqrt2 = rep.chsh_canonical == two_sqrt2();
  return rep;
}

/// Appendix-C reduction: same pipeline under anticommutation rules.  The
/// closed form is asserted inside reduce_f_td.
inline ReducedCHSH fermionic_f_td(const CaseSpec& c = CaseSpec::fermionic()) {
  if (c.statistics != Statistics::Fermionic)
    throw std::invalid_argument("fermionic_f_td requires a fermionic case");
  return reduce_f_td(c);
}

struct SU2RepReport {
  int n = 0;
  double spin = 0.0;              // s = (n-1)/2
  double casimir = 0.0;           // s(s+1)
  double max_su2_error = 0.0;     // commutator defect of the n-dim matrices
  double max_casimir_error = 0.0; // || sum_k S_k^2 - s(s+1) I ||_max
  std::vector<double> s3_values;  // diagonal of S_3: s, s-1, ..., -s
};

/// Verifies that {(a1+)^l (a2+)^m |0> : l+m = n-1} carries the n-dimensional
/// SU(2) representation: matrix elements are computed exactly through the
/// algebra, orthonormalized numerically, and checked against the Casimir
/// s(s+1) and the commutation relations.
inline SU2RepReport su2_rep_family(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("representation dimension must be in [2, 8]");
  const SpinContext ctx = SpinContext::bosonic();
  using C = std::complex<double>;

  const Expr a1d(ladder(Species::A, 1, true));
  const Expr a2d(ladder(Species::A, 2, true));
  std::vector<Expr> basis;  // index l = n-1 ... 0 quanta in mode 1
  for (int l = n - 1; l >= 0; --l) {
    Expr c = Expr::one();
    for (int k = 0; k < l; ++k) c = c * a1d;
    for (int k = 0; k < (n - 1 - l); ++k) c = c * a2d;
    basis.push_back(c);
  }

  std::vector<double> norm(n);
  for (int p = 0; p < n; ++p) {
    const Scalar n2 = vev(basis[p].adjoint() * basis[p], ctx.rules, ctx.vacuum);
    norm[p] = std::sqrt(n2.constant_value().to_double());
  }

  auto matrix_of = [&](const Expr& op) {
    std::vector<std::vector<C>> m(n, std::vector<C>(n, 0.0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Scalar e = vev(basis[p].adjoint() * op * basis[q], ctx.rules, ctx.vacuum);
        m[p][q] = e.constant_value().to_complex() / (norm[p] * norm[q]);
      }
    return m;
  };

  std::vector<std::vector<std::vector<C>>> s(4);
  for (int k = 1; k <= 3; ++k) s[k] = matrix_of(spin_operator(ctx, Side::A, k));

  auto mat_mul = [&](const auto& a, const auto& b) {
    std::vector<std::vector<C>> m(n, std::vector<C>(n, 0.0));
    for (int p = 0; p < n; ++p)
      for (int r = 0; r < n; ++r)
        for (int q = 0; q < n; ++q) m[p][q] += a[p][r] * b[r][q];
    return m;
  };

  SU2RepReport rep;
  rep.n = n;
  rep.spin = 0.5 * (n - 1);
  rep.casimir = rep.spin * (rep.spin + 1.0);

  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;
    const int k = 6 - i - j;
    const auto lhs = mat_mul(s[i], s[j]);
    const auto rhs = mat_mul(s[j], s[i]);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const C defect = lhs[p][q] - rhs[p][q] - C(0.0, 1.0) * s[k][p][q];
        rep.max_su2_error = std::max(rep.max_su2_error, std::abs(defect));
      }
  }

  std::vector<std::vector<C>> casimir(n, std::vector<C>(n, 0.0));
  for (int k = 1; k <= 3; ++k) {
    const auto sq = mat_mul(s[k], s[k]);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) casimir[p][q] += sq[p][q];
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const C expect = p == q ? C(rep.casimir, 0.0) : C(0.0, 0.0);
      rep.max_casimir_error = std::max(rep.max_casimir_error, std::abs(casimir[p][q] - expect));
    }

  for (int p = 0; p < n; ++p) rep.s3_values.push_back(s[3][p][p].real());
  return rep;
}

}  // namespace tdchsh
