#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shakekit/exactlinalg.hpp"
#include "shakekit/laurent.hpp"
#include "shakekit/patterns.hpp"
#include "shakekit/seifert.hpp"

namespace shakekit {

/// A knot invariant that is a concordance homomorphism and invariant under
/// 0-trace diffeomorphism. `evaluator(A, w) / genus_bound_scale` bounds the
/// 4-genus in magnitude.
struct CompatibleInvariant {
  std::string name;
  std::function<int(const SeifertMatrix&, const UnitCirclePoint&)> evaluator;
  int genus_bound_scale = 1;

  long long normalized(const SeifertMatrix& a, const UnitCirclePoint& w) const;
};

/// sigma(K, w) / 2.
CompatibleInvariant half_lt_signature(double tol = kDefaultTolerance);

/// Record proving c(K_{n,c}) >= c for K_{n,c} = (bar(Q*)_n)^c o Q^c with
/// Q = P_1.
struct ComplexityCertificate {
  long long n = 0;
  long long c = 0;
  UnitCirclePoint witness = UnitCirclePoint::root(1, 2);
  std::string invariant_name;
  long long i_q = 0;
  long long i_qn = 0;
  long long bound = 0;
  std::string term;
  /// Set for n < 0: the bound was computed on the |n| profile.
  bool mirror = false;

  bool operator==(const ComplexityCertificate&) const = default;
};

std::vector<int> primes_up_to(int limit);

/// The Q = P_1 base pattern and the atom P it twists.
patterns::Pattern base_pattern_q();

/// m -> sigma(an_family(m), w) / 2, defined for m >= 1. Values are computed
/// lazily and cached; copies share the cache.
patterns::InvariantProfile family_profile(const UnitCirclePoint& w, double tol = kDefaultTolerance);

/// Assigns family_profile to the atom "P".
patterns::Assignment family_assignment(const UnitCirclePoint& w, double tol = kDefaultTolerance);

/// First root of unity exp(2 pi i k/p), p prime <= max_order, ordered by
/// (p, k) with 0 < k <= p/2, at which the guarded LT signature of
/// an_family(1 + n) is non-zero. Throws WitnessNotFound.
UnitCirclePoint find_witness_root(int n, int max_order, double tol = kDefaultTolerance);

/// Throws DomainError for n = 0 or c < 1, WitnessNotFound from the search,
/// and Error when the two evaluation routes disagree.
ComplexityCertificate certify_complexity(long long n, long long c, int max_order = 60,
                                         double tol = kDefaultTolerance);

/// Delta_1 > 0 on the grid via 4x^2 - 6x + 3 (x = Re t), and the LT
/// signature of an_family(1) vanishes at every guarded prime-order root.
bool sigma_q_vanishes_check(int grid, int max_prime_order, double tol = kDefaultTolerance);

/// True iff the guarded LT signature of `a` is zero at every prime-order
/// root of order <= max_prime_order where the guard passes.
bool lt_vanishes_at_prime_roots(const SeifertMatrix& a, int max_prime_order,
                                double tol = kDefaultTolerance);

}  // namespace shakekit
