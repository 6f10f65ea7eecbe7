#include <catch2/catch_amalgamated.hpp>

#include "tdchsh/operator_expr.hpp"
#include "tdchsh/random.hpp"

using namespace tdchsh;

namespace {

Generator random_generator(Rng& rng) {
  const Species sp = rng.uniform() < 0.5 ? Species::A : Species::B;
  const int mode = rng.uniform() < 0.5 ? 1 : 2;
  const bool dag = rng.uniform() < 0.5;
  if (rng.uniform() < 0.25) return perturbation(sp, mode, dag);
  return ladder(sp, mode, dag);
}

Expr random_word_expr(Rng& rng, int max_len = 4) {
  Word w;
  const int len = 1 + static_cast<int>(rng.engine()() % max_len);
  for (int i = 0; i < len; ++i) w.push_back(random_generator(rng));
  const auto num = static_cast<std::int64_t>(rng.engine()() % 7) - 3;
  return Expr(w, Scalar(num == 0 ? 1 : num));
}

Expr random_expr(Rng& rng) {
  Expr e = random_word_expr(rng);
  while (rng.uniform() < 0.5) e = e + random_word_expr(rng);
  return e;
}

}  // namespace

TEST_CASE("free product concatenates words") {
  const Expr a1(ladder(Species::A, 1, false));
  const Expr a1d(ladder(Species::A, 1, true));
  const Expr p = a1 * a1d;
  REQUIRE(p.num_terms() == 1);
  CHECK(p.terms().begin()->first == Word{ladder(Species::A, 1, false), ladder(Species::A, 1, true)});
  CHECK(p.terms().begin()->second == Scalar::one());
  CHECK(p.to_string() == "a1 a1+");
}

TEST_CASE("multiplication by zero annihilates") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const Expr x = random_expr(rng);
    CHECK((x * Expr::zero()).is_zero());
    CHECK((Expr::zero() * x).is_zero());
  }
}

TEST_CASE("free product is noncommutative") {
  const Expr ad(ladder(Species::A, 1, true));
  const Expr bd(ladder(Species::B, 2, true));
  CHECK(!(ad * bd == bd * ad));
}

TEST_CASE("ring axioms for operator expressions") {
  Rng rng(20240602);
  for (int t = 0; t < 200; ++t) {
    const Expr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("adjoint reverses, daggers and conjugates") {
  const Expr a1d(ladder(Species::A, 1, true));
  const Expr a2d(ladder(Species::A, 2, true));
  const Expr b1d(ladder(Species::B, 1, true));
  const Expr b2d(ladder(Species::B, 2, true));
  const Expr singlet_creator = a1d * b2d - a2d * b1d;

  Expr expect;  // b2 a1 - b1 a2
  expect = expect + Expr(ladder(Species::B, 2, false)) * Expr(ladder(Species::A, 1, false));
  expect = expect - Expr(ladder(Species::B, 1, false)) * Expr(ladder(Species::A, 2, false));
  CHECK(singlet_creator.adjoint() == expect);

  CHECK((Scalar::i() * Expr(ladder(Species::A, 1, false))).adjoint() ==
        -Scalar::i() * Expr(ladder(Species::A, 1, true)));
}

TEST_CASE("adjoint is an involutive anti-automorphism") {
  Rng rng(20240603);
  for (int t = 0; t < 100; ++t) {
    const Expr x = random_expr(rng), y = random_expr(rng);
    CHECK(x.adjoint().adjoint() == x);
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
  }
}

TEST_CASE("epsilon truncation removes quadratic perturbation words") {
  const Expr pa1(perturbation(Species::A, 1, false));
  const Expr pa2(perturbation(Species::A, 2, false));
  const Expr a1d(ladder(Species::A, 1, true));
  CHECK((pa1 * pa2).epsilon_truncate().is_zero());
  CHECK((pa1 * a1d).epsilon_truncate() == pa1 * a1d);
  const Expr n = Expr(ladder(Species::A, 1, true)) * Expr(ladder(Species::A, 1, false));
  CHECK(n.epsilon_truncate() == n);
}

TEST_CASE("epsilon truncation is an additive projection") {
  Rng rng(20240604);
  for (int t = 0; t < 100; ++t) {
    const Expr x = random_expr(rng), y = random_expr(rng);
    CHECK(x.epsilon_truncate().epsilon_truncate() == x.epsilon_truncate());
    CHECK((x + y).epsilon_truncate() == x.epsilon_truncate() + y.epsilon_truncate());
  }
}
