#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/laurent.hpp"

using namespace shakekit;

TEST_CASE("parse and print round trip") {
  const auto p = LaurentPoly::parse("t^-2 - 3*t^-1 + 5 - 3*t + t^2");
  CHECK(p.to_string() == "t^-2 - 3*t^-1 + 5 - 3*t + t^2");
  CHECK(p.coeff(-1) == -3);
  CHECK(p.min_exp() == -2);
  CHECK(p.max_exp() == 2);
  CHECK(p.is_symmetric());
  CHECK(LaurentPoly::parse("3t + t^(-2) − 4").to_string() == "t^-2 - 4 + 3*t");
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::parse("-t").to_string() == "-t");
}

TEST_CASE("parse rejects garbage") {
  CHECK_THROWS_AS(LaurentPoly::parse("t^"), InputError);
  CHECK_THROWS_AS(LaurentPoly::parse("x + 1"), InputError);
  CHECK_THROWS_AS(LaurentPoly::parse(""), InputError);
  CHECK_THROWS_AS(LaurentPoly::parse("2 + + t"), InputError);
}

TEST_CASE("zero coefficients are dropped") {
  const auto p = LaurentPoly::parse("t - t + 2*t^3 - 2*t^3");
  CHECK(p.is_zero());
  CHECK(LaurentPoly::t() - LaurentPoly::t() == LaurentPoly());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_laurent(rng, 4, 5);
    const auto b = oracle::random_laurent(rng, 4, 5);
    const auto c = oracle::random_laurent(rng, 4, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK(lp_add(a, b) == a + b);
    CHECK(lp_mul(a, b) == a * b);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(12);
  const std::complex<double> z = std::polar(1.0, 0.7);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_laurent(rng, 3, 4);
    const auto b = oracle::random_laurent(rng, 3, 4);
    CHECK(std::abs((a * b).eval(z) - a.eval(z) * b.eval(z)) < 1e-9);
    CHECK(std::abs((a + b).eval(z) - (a.eval(z) + b.eval(z))) < 1e-9);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
  }
}

TEST_CASE("symmetric real evaluation matches complex evaluation") {
  const auto p = LaurentPoly::parse("t^-3 + 2*t^-1 - 7 + 2*t + t^3");
  for (int k = 1; k < 17; ++k) {
    const auto w = UnitCirclePoint::root(k, 17);
    CHECK(std::abs(p.eval_symmetric_real(w.re()) - p.eval(w.value()).real()) < 1e-9);
    CHECK(lp_eval_unit(p, w).imag() == 0.0);
  }
}

TEST_CASE("exact division") {
  const auto a = LaurentPoly::parse("t^-1 - 1 + t");
  const auto b = LaurentPoly::parse("2 - t^3");
  CHECK((a * b).exact_div(a) == b);
  CHECK((a * b).exact_div(b) == a);
  CHECK_THROWS_AS(LaurentPoly::parse("t + 2").exact_div(LaurentPoly::parse("t + 1")), DomainError);
  CHECK_THROWS_AS(a.exact_div(LaurentPoly()), DomainError);
}

TEST_CASE("shift and norm") {
  const auto p = LaurentPoly::parse("2 - 3*t");
  CHECK(p.shifted(-2).to_string() == "2*t^-2 - 3*t^-1");
  CHECK(p.l1_norm() == 5.0);
}

TEST_CASE("unit circle points") {
  CHECK(UnitCirclePoint::root(2, 4) == UnitCirclePoint::root(1, 2));
  CHECK(UnitCirclePoint::root(-1, 3) == UnitCirclePoint::root(2, 3));
  CHECK(UnitCirclePoint::root(5, 5).is_one());
  CHECK(UnitCirclePoint::root(1, 2).re() == -1.0);
  CHECK(UnitCirclePoint::root(1, 6).re() == 0.5);
  CHECK(UnitCirclePoint::root(1, 4).re() == 0.0);
  CHECK(UnitCirclePoint::root(3, 7).order() == 7);
  CHECK(UnitCirclePoint::parse("3/9").to_string() == "1/3");
  CHECK(std::abs(UnitCirclePoint::root(1, 8).theta() - std::numbers::pi / 4) < 1e-15);
  CHECK_THROWS_AS(UnitCirclePoint::root(1, 0), DomainError);
  CHECK_THROWS_AS(UnitCirclePoint::parse("1/"), InputError);
  CHECK(UnitCirclePoint::angle(1.0).order() == 0);
}
