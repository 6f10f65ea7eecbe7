#pragma once

#include <vector>

#include "tdchsh/operator_expr.hpp"
#include "tdchsh/rewrite.hpp"

namespace tdchsh {

/// Which remainder the same-mode ladder contraction produces: the scalar unit
/// (standard case) or the sector token 1eff (the emergent-identity variant).
enum class ContractionUnit { One, UnitEff };

/// Rules for the two-species, two-mode ladder algebra:
///   [x_i, x_j+] = delta_ij   (or {x_i, x_j+} = delta_ij fermionically)
/// with all other (anti)commutators vanishing.  The delta is the Kronecker
/// reading: cross-mode and cross-species pairs reorder with zero remainder.
template <class S>
RewriteRules<S> ladder_rules(Statistics st, ContractionUnit unit = ContractionUnit::One) {
  RewriteRules<S> rules;
  const int sign = st == Statistics::Fermionic ? -1 : 1;
  OperatorExpr<S> remainder;
  if (unit == ContractionUnit::UnitEff) {
    remainder = OperatorExpr<S>(Word{unit_eff()}, scalar_ops<S>::one());
    rules.set_square(unit_eff(), OperatorExpr<S>::one());
  } else {
    remainder = OperatorExpr<S>::one();
  }
  for (Species sp : {Species::A, Species::B}) {
    for (int m = 1; m <= 2; ++m) {
      rules.set_rule(ladder(sp, m, false, st), ladder(sp, m, true, st), sign, remainder);
    }
  }
  return rules;
}

/// Adds the condition-(a2) boundaries: the commutators [a_j, A_i+] and their
/// adjoint images are nonzero but unspecified, so those pairs are declared
/// irreducible and resolve only inside vev.
template <class S>
void add_perturbation_boundaries(RewriteRules<S>& rules, Statistics st) {
  for (Species sp : {Species::A, Species::B}) {
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        rules.set_irreducible(ladder(sp, j, false, st), perturbation(sp, i, true, st));
        rules.set_irreducible(perturbation(sp, i, false, st), ladder(sp, j, true, st));
      }
    }
  }
}

/// Vacuum annihilated by the undaggered ladder generators of both species.
template <class S>
Vacuum<S> ladder_vacuum(Statistics st, ContractionUnit unit = ContractionUnit::One) {
  Vacuum<S> vac;
  for (Species sp : {Species::A, Species::B})
    for (int m = 1; m <= 2; ++m) vac.annihilators.push_back(ladder(sp, m, false, st));
  if (unit == ContractionUnit::UnitEff) vac.absorbers.push_back(unit_eff());
  return vac;
}

}  // namespace tdchsh
