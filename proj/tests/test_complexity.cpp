#include <doctest.h>

#include "shakekit/complexity.hpp"
#include "shakekit/errors.hpp"

using namespace shakekit;

TEST_CASE("primes") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(20) == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(primes_up_to(60).size() == 17);
}

TEST_CASE("half LT signature is a compatible invariant on the family") {
  const auto inv = half_lt_signature();
  CHECK(inv.name == "half-LT-signature");
  CHECK(inv.genus_bound_scale == 2);
  CHECK(inv.normalized(an_family(1), UnitCirclePoint::root(1, 2)) == 0);
  CHECK(inv.normalized(an_family(2), UnitCirclePoint::root(1, 2)) == 1);
}

TEST_CASE("family profile") {
  const auto profile = family_profile(UnitCirclePoint::root(1, 2));
  CHECK(profile(1) == 0);
  CHECK(profile(2) == 1);
  CHECK(profile(2) == 1);
  CHECK_FALSE(profile.in_domain(0));
  CHECK_THROWS_AS(profile(0), DomainError);
}

TEST_CASE("witness roots") {
  CHECK(find_witness_root(1, 60) == UnitCirclePoint::root(1, 2));
  CHECK(find_witness_root(2, 60) == UnitCirclePoint::root(1, 3));
  CHECK(find_witness_root(6, 60) == UnitCirclePoint::root(2, 7));
  for (int n = 1; n <= 15; n += 2) CHECK(find_witness_root(n, 60) == UnitCirclePoint::root(1, 2));
  CHECK_THROWS_AS(find_witness_root(0, 60), DomainError);
  CHECK_THROWS_AS(find_witness_root(6, 5), WitnessNotFound);
}

TEST_CASE("certificates") {
  const auto cert = certify_complexity(1, 3);
  CHECK(cert.bound == 3);
  CHECK(cert.witness == UnitCirclePoint::root(1, 2));
  CHECK(cert.i_q == 0);
  CHECK(cert.i_qn == 1);
  CHECK(cert.term == "bar(P_1*)_1^3 o P_1^3");
  CHECK_FALSE(cert.mirror);

  const auto even = certify_complexity(2, 2);
  CHECK(even.bound >= 2);
  CHECK(even.witness.order() == 3);

  for (long long n = -9; n <= 9; n += 2) {
    for (long long c = 1; c <= 5; ++c) {
      const auto odd = certify_complexity(n, c);
      CHECK(odd.bound == c);
      CHECK(odd.witness == UnitCirclePoint::root(1, 2));
      CHECK(odd.mirror == (n < 0));
    }
  }
  CHECK_THROWS_AS(certify_complexity(0, 1), DomainError);
  CHECK_THROWS_AS(certify_complexity(2, 0), DomainError);
  CHECK_THROWS_AS(certify_complexity(6, 1, 5), WitnessNotFound);
}

TEST_CASE("certificates are deterministic") {
  CHECK(certify_complexity(4, 2) == certify_complexity(4, 2));
}

TEST_CASE("sigma(Q) vanishes at prime roots") {
  CHECK(sigma_q_vanishes_check(360, 50));
  CHECK_FALSE(lt_vanishes_at_prime_roots(an_family(2), 7));
  CHECK_THROWS_AS(sigma_q_vanishes_check(0, 50), DomainError);
}
