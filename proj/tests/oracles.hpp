#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "shakekit/exactlinalg.hpp"
#include "shakekit/laurent.hpp"

namespace oracle {

using shakekit::BigInt;
using shakekit::IntMatrix;
using shakekit::LaurentMatrix;
using shakekit::LaurentPoly;

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

/// Leibniz sum over all permutations.
template <typename Matrix, typename Value>
Value leibniz(const Matrix& m, Value zero, Value one) {
  std::vector<std::size_t> perm(m.dim());
  std::iota(perm.begin(), perm.end(), 0);
  Value total = zero;
  do {
    Value prod = one;
    for (std::size_t i = 0; i < perm.size(); ++i) prod = prod * Value(m(i, perm[i]));
    if (permutation_sign(perm) > 0) total = total + prod;
    else total = total - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline LaurentPoly det(const LaurentMatrix& m) { return leibniz(m, LaurentPoly(), LaurentPoly(1)); }

inline BigInt det(const IntMatrix& m, std::size_t k) {
  IntMatrix lead(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
  BigInt total = 0;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    BigInt prod = 1;
    for (std::size_t i = 0; i < k; ++i) prod *= static_cast<long>(lead(i, perm[i]));
    total += permutation_sign(perm) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Jacobi: signature from sign changes of leading principal minors. Returns
/// false when some minor vanishes.
inline bool jacobi_signature(const IntMatrix& s, int& out) {
  BigInt prev = 1;
  int changes = 0;
  for (std::size_t k = 1; k <= s.dim(); ++k) {
    const BigInt d = det(s, k);
    if (d == 0) return false;
    if (sgn(d) != sgn(prev)) ++changes;
    prev = d;
  }
  out = static_cast<int>(s.dim()) - 2 * changes;
  return true;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

/// Product of random elementary integer operations; determinant +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t dim) {
  IntMatrix p(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) p(i, i) = 1;
  if (dim < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::uniform_int_distribution<int> k(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    const int f = k(rng);
    for (std::size_t r = 0; r < dim; ++r) p(r, a) += f * p(r, b);
  }
  return p;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.dim(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int span, int coeff) {
  std::uniform_int_distribution<int> lo(-span, span), c(-coeff, coeff);
  const int start = lo(rng);
  LaurentPoly p;
  for (int e = start; e <= start + span; ++e) p += LaurentPoly::monomial(c(rng), e);
  return p;
}

}  // namespace oracle
