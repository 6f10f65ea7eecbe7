#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <map>

#include "tdchsh/exact_number.hpp"
#include "tdchsh/random.hpp"
#include "tdchsh/scalar.hpp"

using namespace tdchsh;

namespace {

Rational random_rational(Rng& rng) {
  const auto num = static_cast<std::int64_t>(rng.engine()() % 21) - 10;
  const auto den = static_cast<std::int64_t>(rng.engine()() % 6) + 1;
  return Rational(num, den);
}

ExactNumber random_number(Rng& rng) {
  return ExactNumber(random_rational(rng), random_rational(rng), random_rational(rng),
                     random_rational(rng));
}

Scalar random_scalar(Rng& rng) {
  Scalar s(random_number(rng));
  const char* vars[] = {"x", "y", "z"};
  for (const char* v : vars)
    if (rng.uniform() < 0.5) s = s + Scalar(random_number(rng)) * Scalar::var(v);
  return s;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("field arithmetic in Q(i, sqrt2)") {
  const ExactNumber s2 = ExactNumber::sqrt2();
  CHECK(s2 * s2 == ExactNumber(2));
  CHECK(ExactNumber::i() * ExactNumber::i() == ExactNumber(-1));
  CHECK(ExactNumber::inv_sqrt2() * s2 == ExactNumber::one());

  const ExactNumber z(Rational(3, 2), Rational(1, 5), Rational(-2), Rational(7, 3));
  CHECK(z * z.inverse() == ExactNumber::one());
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
}

TEST_CASE("exact sign of real field elements") {
  CHECK(ExactNumber(Rational(3), Rational(-2)).sign() == 1);    // 3 - 2 sqrt2 > 0
  CHECK(ExactNumber(Rational(-3), Rational(2)).sign() == -1);   // symmetric
  CHECK(ExactNumber(Rational(-1), Rational(1)).sign() == 1);    // sqrt2 - 1 > 0
  CHECK(ExactNumber(Rational(2), Rational(-1)).sign() == 1);    // 2 - sqrt2 > 0
  CHECK(ExactNumber::zero().sign() == 0);
  CHECK(ExactNumber(Rational(-2), Rational(1)).abs() == ExactNumber(Rational(2), Rational(-1)));
}

TEST_CASE("canonical literals") {
  CHECK(ExactNumber(Rational(3, 2), Rational(0), Rational(0), Rational(1, 2)).to_string() ==
        "(3/2)+(1/2)*sqrt2*i");
  CHECK(ExactNumber(0, 2).to_string() == "2*sqrt2");
  CHECK(ExactNumber(-1).to_string() == "-1");
  CHECK(ExactNumber::zero().to_string() == "0");
  CHECK((Scalar(2) + Scalar::var("x") * Scalar::sqrt2()).to_string() == "2 + sqrt2*x");
}

TEST_CASE("scalar ring axioms on random triples") {
  Rng rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Scalar::zero());
  }
}

TEST_CASE("conjugation pairs indeterminates") {
  const Scalar x = Scalar::var("p");
  CHECK(x.conj() == Scalar::var("p*"));
  CHECK(x.conj().conj() == x);
  const Scalar re = x.real_part();
  CHECK(re == (Scalar::var("p") + Scalar::var("p*")) * Scalar::half());
  CHECK(re.conj() == re);
}

TEST_CASE("numeric evaluation with conjugate pairing") {
  const Scalar poly = Scalar(2) * Scalar::var("p") + Scalar::sqrt2() * Scalar::var("p*");
  std::map<std::string, std::complex<double>> vals{{"p", {0.25, -1.5}}};
  const auto v = poly.evaluate(vals);
  const std::complex<double> expect =
      2.0 * std::complex<double>(0.25, -1.5) + std::sqrt(2.0) * std::complex<double>(0.25, 1.5);
  CHECK(std::abs(v - expect) < 1e-14);
  CHECK_THROWS_AS(poly.evaluate({}), std::domain_error);
}
