#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tdchsh/algebras.hpp"
#include "tdchsh/operator_expr.hpp"
#include "tdchsh/rewrite.hpp"

namespace tdchsh {

enum class Side { A, B };

inline Species side_species(Side s) { return s == Side::A ? Species::A : Species::B; }

/// Rule/vacuum bundle for the two-particle spin formalism, in both the exact
/// and the complex-coefficient instantiation of the engine.
struct SpinContext {
  Statistics statistics = Statistics::Bosonic;
  RewriteRules<Scalar> rules;
  Vacuum<Scalar> vacuum;
  RewriteRules<std::complex<double>> c_rules;
  Vacuum<std::complex<double>> c_vacuum;

  static SpinContext make(Statistics st) {
    SpinContext ctx;
    ctx.statistics = st;
    ctx.rules = ladder_rules<Scalar>(st);
    ctx.vacuum = ladder_vacuum<Scalar>(st);
    ctx.c_rules = ladder_rules<std::complex<double>>(st);
    ctx.c_vacuum = ladder_vacuum<std::complex<double>>(st);
    return ctx;
  }
  static SpinContext bosonic() { return make(Statistics::Bosonic); }
  static SpinContext fermionic() { return make(Statistics::Fermionic); }
};

/// The SU(2) bilinears S_1 = (x1+ x2 + x2+ x1)/2, S_2 = i(x2+ x1 - x1+ x2)/2,
/// S_3 = (x1+ x1 - x2+ x2)/2 over the chosen side's ladder pair.
inline Expr spin_operator(const SpinContext& ctx, Side side, int component) {
  const Species sp = side_species(side);
  const Statistics st = ctx.statistics;
  auto c = [&](int m) { return Expr(ladder(sp, m, true, st)); };
  auto a = [&](int m) { return Expr(ladder(sp, m, false, st)); };
  switch (component) {
    case 1: return Scalar::half() * (c(1) * a(2) + c(2) * a(1));
    case 2: return (Scalar::half() * Scalar::i()) * (c(2) * a(1) - c(1) * a(2));
    case 3: return Scalar::half() * (c(1) * a(1) - c(2) * a(2));
    default: throw std::invalid_argument("spin component must be 1, 2 or 3");
  }
}

/// Total spin S_k = S_k^A + S_k^B.
inline Expr total_spin(const SpinContext& ctx, int component) {
  return spin_operator(ctx, Side::A, component) + spin_operator(ctx, Side::B, component);
}

/// Measurement axis with exact components in Q(sqrt2).
struct ExactAxis {
  Scalar x, y, z;
};

inline ExactAxis exact_axis(Scalar x, Scalar y, Scalar z) {
  for (const Scalar* c : {&x, &y, &z}) {
    if (!c->is_constant() || !c->constant_part().is_real())
      throw std::invalid_argument("axis components must be exact real constants");
  }
  if (!(x * x + y * y + z * z == Scalar::one()))
    throw std::invalid_argument("axis is not a unit vector");
  return {x, y, z};
}

inline ExactAxis axis_x() { return exact_axis(Scalar::one(), Scalar::zero(), Scalar::zero()); }
inline ExactAxis axis_y() { return exact_axis(Scalar::zero(), Scalar::one(), Scalar::zero()); }
inline ExactAxis axis_z() { return exact_axis(Scalar::zero(), Scalar::zero(), Scalar::one()); }
/// (X + Z)/sqrt2 and (X - Z)/sqrt2, the canonical D and D' axes.
inline ExactAxis axis_xz_plus() {
  return exact_axis(Scalar::inv_sqrt2(), Scalar::zero(), Scalar::inv_sqrt2());
}
inline ExactAxis axis_xz_minus() {
  return exact_axis(Scalar::inv_sqrt2(), Scalar::zero(), -Scalar::inv_sqrt2());
}

inline Expr spin_along(const SpinContext& ctx, Side side, const ExactAxis& n) {
  return n.x * spin_operator(ctx, side, 1) + n.y * spin_operator(ctx, side, 2) +
         n.z * spin_operator(ctx, side, 3);
}

/// Lowers an exact expression to the complex-coefficient engine.
inline CExpr to_cexpr(const Expr& x) {
  CExpr out;
  for (const auto& [w, c] : x.terms()) out.add_term(w, c.constant_value().to_complex());
  return out;
}

using Vec3 = std::array<double, 3>;

inline CExpr spin_along(const SpinContext& ctx, Side side, const Vec3& n) {
  const double n2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  if (std::abs(n2 - 1.0) > 1e-12) throw std::invalid_argument("axis is not a unit vector");
  CExpr out;
  for (int k = 1; k <= 3; ++k) {
    CExpr sk = to_cexpr(spin_operator(ctx, side, k));
    out = out + std::complex<double>(n[k - 1], 0.0) * sk;
  }
  return out;
}

/// Two-particle state given as a creation polynomial applied to the vacuum,
/// together with the scalar that normalizes it.
struct StateExpr {
  Expr creator;
  Scalar normalization;
  Expr normalized() const { return normalization * creator; }
};

namespace detail {
inline std::optional<std::int64_t> perfect_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
    if (c * c == v) return c;
  return std::nullopt;
}

/// 1/sqrt(q) inside Q(sqrt2), for q = r^2 or q = 2 r^2 with r rational.
inline std::optional<ExactNumber> exact_inv_sqrt(const ExactNumber& q) {
  if (!q.is_rational() || q.sign() <= 0) return std::nullopt;
  const Rational r = q.re_rational();
  if (auto n = perfect_sqrt(r.num())) {
    if (auto d = perfect_sqrt(r.den())) return ExactNumber(Rational(*d, *n));
  }
  const Rational half_r = r * Rational(1, 2);  // q = 2 s^2 ?
  if (auto n = perfect_sqrt(half_r.num())) {
    if (auto d = perfect_sqrt(half_r.den()))
      return ExactNumber(0, Rational(*d, *n) * Rational(1, 2));  // 1/(s sqrt2) = sqrt2/(2s)
  }
  return std::nullopt;
}
}  // namespace detail

/// Wraps a creation polynomial as a normalized state.
inline StateExpr make_state(const SpinContext& ctx, Expr creator) {
  const Scalar norm2 = vev(creator.adjoint() * creator, ctx.rules, ctx.vacuum);
  const auto inv = detail::exact_inv_sqrt(norm2.constant_value());
  if (!inv) throw std::domain_error("state norm^2 has no inverse square root in Q(sqrt2)");
  return {creator, Scalar(*inv)};
}

/// The spin singlet (a1+ b2+ - a2+ b1+)|0> / sqrt2.
inline StateExpr singlet(const SpinContext& ctx) {
  const Statistics st = ctx.statistics;
  Expr c = Expr(ladder(Species::A, 1, true, st)) * Expr(ladder(Species::B, 2, true, st)) -
           Expr(ladder(Species::A, 2, true, st)) * Expr(ladder(Species::B, 1, true, st));
  return make_state(ctx, c);
}

/// Triplet states, m in {-1, 0, +1}.
inline StateExpr triplet(const SpinContext& ctx, int m) {
  const Statistics st = ctx.statistics;
  auto ad = [&](int i) { return Expr(ladder(Species::A, i, true, st)); };
  auto bd = [&](int i) { return Expr(ladder(Species::B, i, true, st)); };
  switch (m) {
    case 1: return make_state(ctx, ad(1) * bd(1));
    case 0: return make_state(ctx, ad(1) * bd(2) + ad(2) * bd(1));
    case -1: return make_state(ctx, ad(2) * bd(2));
    default: throw std::invalid_argument("triplet m must be -1, 0 or +1");
  }
}

/// Single-particle state x_m+|0> for eigenvalue checks.
inline StateExpr one_particle(const SpinContext& ctx, Side side, int mode) {
  return make_state(ctx, Expr(ladder(side_species(side), mode, true, ctx.statistics)));
}

/// <psi| obs |psi> through the vacuum expectation of the sandwiched word.
inline Scalar expectation(const SpinContext& ctx, const StateExpr& state, const Expr& obs) {
  if (obs.max_eps_grade() != 0)
    throw std::invalid_argument("expectation requires an eps-grade-0 observable");
  const Expr nc = state.normalized();
  return vev(nc.adjoint() * obs * nc, ctx.rules, ctx.vacuum);
}

/// Correlation E(M, N), normalized so perfect (anti)correlation is +-1:
/// the spin-1/2 product expectation rescaled by 4.
inline Scalar correlation(const SpinContext& ctx, const StateExpr& state, const ExactAxis& na,
                          const ExactAxis& nb) {
  return Scalar(4) * expectation(ctx, state, spin_along(ctx, Side::A, na) *
                                                 spin_along(ctx, Side::B, nb));
}

inline double correlation(const SpinContext& ctx, const StateExpr& state, const Vec3& na,
                          const Vec3& nb) {
  const CExpr nc = to_cexpr(state.normalized());
  const CExpr obs = spin_along(ctx, Side::A, na) * spin_along(ctx, Side::B, nb);
  const std::complex<double> e = vev(nc.adjoint() * obs * nc, ctx.c_rules, ctx.c_vacuum);
  return 4.0 * e.real();
}

struct CHSHAxes {
  ExactAxis c, c_prime, d, d_prime;
};

inline CHSHAxes canonical_chsh_axes() {
  return {axis_z(), axis_x(), axis_xz_plus(), axis_xz_minus()};
}

/// F = |E(C,D) - E(C,D') + E(C',D) + E(C',D')|, exact.
inline Scalar chsh(const SpinContext& ctx, const StateExpr& state, const CHSHAxes& ax) {
  const Scalar combo = correlation(ctx, state, ax.c, ax.d) -
                       correlation(ctx, state, ax.c, ax.d_prime) +
                       correlation(ctx, state, ax.c_prime, ax.d) +
                       correlation(ctx, state, ax.c_prime, ax.d_prime);
  return Scalar(combo.constant_value().abs());
}

inline double chsh(const SpinContext& ctx, const StateExpr& state, const Vec3& c,
                   const Vec3& cp, const Vec3& d, const Vec3& dp) {
  const double combo = correlation(ctx, state, c, d) - correlation(ctx, state, c, dp) +
                       correlation(ctx, state, cp, d) + correlation(ctx, state, cp, dp);
  return std::abs(combo);
}

using Mat2x = std::array<std::array<Scalar, 2>, 2>;
using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;

inline Mat2x exact_identity_rotation() {
  return {{{Scalar::one(), Scalar::zero()}, {Scalar::zero(), Scalar::one()}}};
}

namespace detail {
inline void check_unitary(const Mat2x& u) {
  // U+ U = 1, exactly.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Scalar s;
      for (int k = 0; k < 2; ++k) s += u[k][i].conj() * u[k][j];
      if (!(s == (i == j ? Scalar::one() : Scalar::zero())))
        throw std::invalid_argument("basis rotation is not unitary");
    }
  }
}
inline void check_unitary(const Mat2c& u) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::complex<double> s = 0.0;
      for (int k = 0; k < 2; ++k) s += std::conj(u[k][i]) * u[k][j];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-12)
        throw std::invalid_argument("basis rotation is not unitary within 1e-12");
    }
  }
}
}  // namespace detail

/// Annihilator of the rotated one-particle basis state number `mode`
/// (columns of U are the rotated basis vectors).
inline Expr rotated_annihilator(const SpinContext& ctx, Side side, const Mat2x& u, int mode) {
  Expr out;
  for (int j = 1; j <= 2; ++j)
    out = out + u[j - 1][mode - 1].conj() * Expr(ladder(side_species(side), j, false,
                                                        ctx.statistics));
  return out;
}
inline CExpr rotated_annihilator(const SpinContext& ctx, Side side, const Mat2c& u, int mode) {
  CExpr out;
  for (int j = 1; j <= 2; ++j)
    out = out + std::conj(u[j - 1][mode - 1]) *
                    CExpr(ladder(side_species(side), j, false, ctx.statistics));
  return out;
}

/// Probability of measuring `outcome` (+1 or -1) on `side` in the basis
/// rotated by U, computed as the sum over the other particle's basis of
/// squared amplitudes.  `far_rotation` rotates the basis that is summed
/// over; completeness makes the result independent of it.
inline Scalar measurement_probability(const SpinContext& ctx, const StateExpr& state, Side side,
                                      const Mat2x& u, int outcome,
                                      const Mat2x& far_rotation = exact_identity_rotation()) {
  detail::check_unitary(u);
  detail::check_unitary(far_rotation);
  const Side far = side == Side::A ? Side::B : Side::A;
  const int mode = outcome > 0 ? 1 : 2;
  const Expr near_op = rotated_annihilator(ctx, side, u, mode);
  const Expr nc = state.normalized();
  Scalar p;
  for (int k = 1; k <= 2; ++k) {
    const Expr far_op = rotated_annihilator(ctx, far, far_rotation, k);
    const Scalar amp = vev(far_op * near_op * nc, ctx.rules, ctx.vacuum);
    p += amp * amp.conj();
  }
  return p;
}

inline double measurement_probability(const SpinContext& ctx, const StateExpr& state, Side side,
                                      const Mat2c& u, int outcome,
                                      const Mat2c& far_rotation = Mat2c{{{1.0, 0.0},
                                                                         {0.0, 1.0}}}) {
  detail::check_unitary(u);
  detail::check_unitary(far_rotation);
  const Side far = side == Side::A ? Side::B : Side::A;
  const int mode = outcome > 0 ? 1 : 2;
  const CExpr near_op = rotated_annihilator(ctx, side, u, mode);
  const CExpr nc = to_cexpr(state.normalized());
  double p = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const CExpr far_op = rotated_annihilator(ctx, far, far_rotation, k);
    const std::complex<double> amp = vev(far_op * near_op * nc, ctx.c_rules, ctx.c_vacuum);
    p += std::norm(amp);
  }
  return p;
}

struct CausalityReport {
  std::size_t rotations = 0;
  double max_deviation = 0.0;
  bool all_exact_zero = true;  // meaningful only for the exact overload
};

/// For each far-basis rotation, checks that the near particle's outcome
/// probabilities are unchanged.  Both particles take the near role in turn.
inline CausalityReport causality_check(const SpinContext& ctx, const StateExpr& state,
                                       const std::vector<Mat2c>& rotations) {
  CausalityReport rep;
  rep.rotations = rotations.size();
  const Mat2c id{{{1.0, 0.0}, {0.0, 1.0}}};
  for (Side near : {Side::A, Side::B}) {
    for (int outcome : {+1, -1}) {
      const double base = measurement_probability(ctx, state, near, id, outcome, id);
      for (const auto& v : rotations) {
        const double p = measurement_probability(ctx, state, near, id, outcome, v);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(p - base));
      }
    }
  }
  rep.all_exact_zero = rep.max_deviation == 0.0;
  return rep;
}

inline CausalityReport causality_check_exact(const SpinContext& ctx, const StateExpr& state,
                                             const std::vector<Mat2x>& rotations) {
  CausalityReport rep;
  rep.rotations = rotations.size();
  const Mat2x id = exact_identity_rotation();
  for (Side near : {Side::A, Side::B}) {
    for (int outcome : {+1, -1}) {
      const Scalar base = measurement_probability(ctx, state, near, id, outcome, id);
      for (const auto& v : rotations) {
        const Scalar p = measurement_probability(ctx, state, near, id, outcome, v);
        const Scalar dev = p - base;
        if (!dev.is_zero()) {
          rep.all_exact_zero = false;
          rep.max_deviation =
              std::max(rep.max_deviation, std::abs(dev.constant_value().to_complex()));
        }
      }
    }
  }
  return rep;
}

}  // namespace tdchsh
