#include "shakekit/complexity.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "shakekit/errors.hpp"

namespace shakekit {

long long CompatibleInvariant::normalized(const SeifertMatrix& a, const UnitCirclePoint& w) const {
  const int raw = evaluator(a, w);
  if (raw % genus_bound_scale != 0) {
    throw Error("internal: " + name + " value " + std::to_string(raw) + " is not divisible by " +
                std::to_string(genus_bound_scale));
  }
  return raw / genus_bound_scale;
}

CompatibleInvariant half_lt_signature(double tol) {
  return {"half-LT-signature",
          [tol](const SeifertMatrix& a, const UnitCirclePoint& w) { return lt_signature(a, w, tol); },
          2};
}

std::vector<int> primes_up_to(int limit) {
  std::vector<int> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (int p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (long long q = 1LL * p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

patterns::Pattern base_pattern_q() {
  return patterns::Pattern::twist(patterns::Pattern::atom("P"), 1);
}

patterns::InvariantProfile family_profile(const UnitCirclePoint& w, double tol) {
  struct Cache {
    std::mutex mu;
    std::map<long long, long long> values;
  };
  auto cache = std::make_shared<Cache>();
  auto fn = [cache, w, tol](long long m) {
    std::lock_guard lock(cache->mu);
    if (auto it = cache->values.find(m); it != cache->values.end()) return it->second;
    const auto inv = half_lt_signature(tol);
    const long long v = inv.normalized(an_family(static_cast<int>(m)), w);
    cache->values.emplace(m, v);
    return v;
  };
  return patterns::InvariantProfile(fn, 1, std::nullopt, "half-LT-signature of A_m");
}

patterns::Assignment family_assignment(const UnitCirclePoint& w, double tol) {
  patterns::Assignment a;
  a.emplace("P", family_profile(w, tol));
  return a;
}

UnitCirclePoint find_witness_root(int n, int max_order, double tol) {
  if (n < 1) throw DomainError("witness search needs n >= 1, got " + std::to_string(n));
  const LeviTristramForm form(an_family(1 + n));
  for (int p : primes_up_to(max_order)) {
    for (int k = 1; k <= p / 2; ++k) {
      const auto w = UnitCirclePoint::root(k, p);
      try {
        if (form.signature_at(w, tol) != 0) return w;
      } catch (const NearSingular&) {
        // Delta vanishes at or near w; the next candidate decides.
      }
    }
  }
  throw WitnessNotFound("no prime-order root of order <= " + std::to_string(max_order) +
                        " has non-zero signature for n = " + std::to_string(n) +
                        "; raise the maximum order");
}

ComplexityCertificate certify_complexity(long long n, long long c, int max_order, double tol) {
  if (n == 0) throw DomainError("framing n must be non-zero");
  if (c < 1) throw DomainError("complexity c must be >= 1, got " + std::to_string(c));
  const long long m = std::llabs(n);

  ComplexityCertificate cert;
  cert.n = n;
  cert.c = c;
  cert.mirror = n < 0;
  cert.witness = find_witness_root(static_cast<int>(m), max_order, tol);

  const auto inv = half_lt_signature(tol);
  cert.invariant_name = inv.name;
  cert.i_q = inv.normalized(an_family(1), cert.witness);
  cert.i_qn = inv.normalized(an_family(static_cast<int>(1 + m)), cert.witness);
  cert.bound = c * std::llabs(cert.i_q - cert.i_qn);

  const patterns::Pattern q = base_pattern_q();
  cert.term = patterns::retrace_term(q, n, c).to_string();
  const long long via_calculus =
      patterns::eval_invariant(patterns::retrace_term(q, m, c), family_assignment(cert.witness, tol));
  if (std::llabs(via_calculus) != cert.bound) {
    throw Error("internal: satellite-formula evaluation " + std::to_string(via_calculus) +
                " disagrees with bound " + std::to_string(cert.bound));
  }
  if (cert.bound < c) {
    throw Error("internal: witness " + cert.witness.to_string() + " gives bound " +
                std::to_string(cert.bound) + " < c");
  }
  return cert;
}

bool sigma_q_vanishes_check(int grid, int max_prime_order, double tol) {
  if (grid < 1) throw DomainError("grid must be positive");
  for (int i = 0; i < grid; ++i) {
    const double x = UnitCirclePoint::root(i, grid).re();
    if (!(4 * x * x - 6 * x + 3 > 0)) return false;
  }
  return lt_vanishes_at_prime_roots(an_family(1), max_prime_order, tol);
}

bool lt_vanishes_at_prime_roots(const SeifertMatrix& a, int max_prime_order, double tol) {
  const LeviTristramForm form(a);
  for (int p : primes_up_to(max_prime_order)) {
    for (int k = 1; k < p; ++k) {
      try {
        if (form.signature_at(UnitCirclePoint::root(k, p), tol) != 0) return false;
      } catch (const NearSingular&) {
        continue;
      }
    }
  }
  return true;
}

}  // namespace shakekit
