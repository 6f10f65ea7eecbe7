#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace tdchsh {

enum class Species { A, B, Alpha, Beta, Abstract };
enum class Statistics { Bosonic, Fermionic };

/// Generator of the free *-algebra.
///
/// eps_grade 1 marks the i_eff-anticommuting perturbation parts; sector_sign
/// marks the emergent unit token (self-adjoint involution that commutes with
/// grade-0 and anticommutes with grade-1 generators).
struct Generator {
  std::string name;
  Species species = Species::A;
  int mode = 1;
  bool dagger = false;
  Statistics statistics = Statistics::Bosonic;
  int eps_grade = 0;
  bool sector_sign = false;

  Generator adjoint() const {
    Generator g = *this;
    if (!sector_sign) g.dagger = !g.dagger;
    return g;
  }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.name == b.name && a.species == b.species && a.mode == b.mode &&
           a.dagger == b.dagger && a.statistics == b.statistics && a.eps_grade == b.eps_grade &&
           a.sector_sign == b.sector_sign;
  }

  std::string to_string() const {
    if (sector_sign) return name;
    std::string s = name + std::to_string(mode);
    if (dagger) s += "+";
    return s;
  }
};

/// Normal-form total order: daggered before undaggered, the sector token
/// last.  Within the daggered block abstract species sort last, within the
/// undaggered block abstract species sort first, so that ladder generators
/// can always migrate away from an irreducible abstract boundary.
inline std::tuple<int, int, std::string, int> order_key(const Generator& g) {
  if (g.sector_sign) return {2, 0, g.name, 0};
  int rank = 0;
  switch (g.species) {
    case Species::A: rank = 1; break;
    case Species::B: rank = 2; break;
    case Species::Alpha: rank = 3; break;
    case Species::Beta: rank = 4; break;
    case Species::Abstract: rank = g.dagger ? 5 : 0; break;
  }
  return {g.dagger ? 0 : 1, rank, g.name, g.mode};
}

inline bool gen_less(const Generator& a, const Generator& b) { return order_key(a) < order_key(b); }

using Word = std::vector<Generator>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), gen_less);
  }
};

inline int eps_grade(const Word& w) {
  int g = 0;
  for (const auto& gen : w) g += gen.eps_grade;
  return g;
}

inline Word adjoint_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->adjoint());
  return out;
}

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += " ";
    s += g.to_string();
  }
  return s;
}

// --- standard generator families -------------------------------------------

/// Ladder generator a_i / b_i (or their daggered partners).
inline Generator ladder(Species sp, int mode, bool dagger,
                        Statistics st = Statistics::Bosonic) {
  const char* n = sp == Species::A ? "a" : sp == Species::B ? "b"
                  : sp == Species::Alpha ? "al" : "be";
  return {n, sp, mode, dagger, st, 0, false};
}

/// i_eff-anticommuting perturbation part (the calligraphic A_i / B_i).
/// `family` selects which ladder species it pairs with.
inline Generator perturbation(Species family, int mode, bool dagger,
                              Statistics st = Statistics::Bosonic) {
  return {family == Species::A ? "A" : "B", Species::Abstract, mode, dagger, st, 1, false};
}

/// The emergent unit token 1_eff = i_eff / i.
inline Generator unit_eff() {
  return {"1eff", Species::Abstract, 0, false, Statistics::Bosonic, 0, true};
}

}  // namespace tdchsh
