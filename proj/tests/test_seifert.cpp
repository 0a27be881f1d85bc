#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/seifert.hpp"
#include "shakekit/verify.hpp"

using namespace shakekit;

TEST_CASE("Alexander polynomial of Q") {
  const auto q = verify::displayed_q_seifert();
  CHECK(q == an_family(1));
  CHECK(alexander(q).to_string() == "t^-2 - 3*t^-1 + 5 - 3*t + t^2");
  CHECK(det_laurent(alexander_pencil(q.matrix())) == LaurentPoly::parse("1 - 3*t + 5*t^2 - 3*t^3 + t^4"));
}

TEST_CASE("Alexander polynomial edge cases") {
  CHECK(alexander(SeifertMatrix(IntMatrix(0))) == LaurentPoly(1));
  CHECK(alexander(SeifertMatrix::from_rows({{-1, 1}, {0, -1}})).to_string() == "t^-1 - 1 + t");
  CHECK_THROWS_AS(alexander(SeifertMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), OddDimension);
  CHECK_THROWS_AS(alexander(SeifertMatrix(IntMatrix(2, 0))), DomainError);
}

TEST_CASE("A_n family shape") {
  CHECK_THROWS_AS(an_family(0), DomainError);
  const auto a3 = an_family(3).matrix();
  CHECK(a3.dim() == 8);
  CHECK(a3(1, 7) == -1);
  CHECK(a3(4, 3) == 1);
  CHECK(a3(7, 6) == 1);
  CHECK(an_family(2) == verify::displayed_q1_seifert());
}

TEST_CASE("closed form agrees with the determinant for n = 1..14") {
  for (int n = 1; n <= 14; ++n) {
    const auto d = alexander(an_family(n));
    CHECK(d == delta_n_closed(n));
    CHECK(d.eval_at_one() == 1);
    CHECK(d.is_symmetric());
  }
  for (int n = 1; n <= 2; ++n) {
    const auto leibniz = oracle::det(alexander_pencil(an_family(n).matrix()));
    CHECK(leibniz.shifted(-(n + 1)) == delta_n_closed(n));
  }
}

TEST_CASE("closed form at roots of unity") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto t = UnitCirclePoint::root(k, n);
      CHECK(std::abs(lp_eval_unit(delta_n_closed(n), t).real() - (2 * t.re() - 1)) < 1e-9);
    }
  }
}

TEST_CASE("classical signatures") {
  CHECK(classical_signature_seifert(verify::displayed_q_seifert()) == 0);
  CHECK(classical_signature_seifert(verify::displayed_q1_seifert()) == 2);
  CHECK(classical_signature_seifert(SeifertMatrix::from_rows({{-1, 1}, {0, -1}})) == -2);
  CHECK(lt_signature(an_family(2), UnitCirclePoint::root(1, 2)) == 2);
  CHECK(lt_signature(an_family(1), UnitCirclePoint::root(1, 2)) == 0);
}

TEST_CASE("sign scan finds the trefoil roots") {
  const auto arcs = delta_sign_scan(LaurentPoly::parse("t^-1 - 1 + t"), 720);
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].theta_lo <= std::numbers::pi / 3);
  CHECK(arcs[0].theta_hi >= std::numbers::pi / 3);
  CHECK(delta_sign_scan(delta_n_closed(1), 360).empty());
  CHECK_THROWS_AS(delta_sign_scan(LaurentPoly::parse("t"), 360), DomainError);
}

TEST_CASE("LT signature is constant between sign changes of Delta") {
  const int grid = 360;
  for (int n = 1; n <= 5; ++n) {
    const auto a = an_family(n);
    const auto delta = alexander(a);
    const LeviTristramForm form(a);
    const auto arcs = delta_sign_scan(delta, grid);
    int jumps = 0;
    for (int i = 2; i < grid / 2; ++i) {
      const auto w0 = UnitCirclePoint::root(i - 1, grid);
      const auto w1 = UnitCirclePoint::root(i, grid);
      const double d0 = delta.eval_symmetric_real(w0.re());
      const double d1 = delta.eval_symmetric_real(w1.re());
      const int s0 = form.signature_at(w0);
      const int s1 = form.signature_at(w1);
      if ((d0 > 0) == (d1 > 0)) CHECK(s0 == s1);
      else ++jumps;
    }
    // Sign changes come in conjugate pairs.
    CHECK(2 * jumps <= static_cast<int>(arcs.size()));
  }
}

TEST_CASE("LT form caches agree with direct evaluation") {
  const auto a = an_family(4);
  const LeviTristramForm form(a);
  for (int k = 1; k < 11; ++k) {
    const auto w = UnitCirclePoint::root(k, 11);
    CHECK(form.signature_at(w) == lt_signature(a, w));
  }
}
