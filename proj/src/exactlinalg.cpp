#include "shakekit/exactlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

namespace shakekit {

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("dimension mismatch in matrix sum");
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

LaurentMatrix alexander_pencil(const IntMatrix& a) {
  const std::size_t n = a.dim();
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = LaurentPoly::monomial(BigInt(static_cast<long>(a(i, j))), 1) -
                LaurentPoly(static_cast<long>(a(j, i)));
  return m;
}

LaurentPoly det_laurent(const LaurentMatrix& input) {
  const std::size_t n = input.dim();
  if (n == 0) return LaurentPoly(1);

  // Clear negative exponents row by row so elimination stays in Z[t].
  LaurentMatrix m = input;
  LaurentPoly::Exponent total_shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    LaurentPoly::Exponent lo = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      lo = any ? std::min(lo, m(i, j).min_exp()) : m(i, j).min_exp();
      any = true;
    }
    if (!any) return {};
    if (lo != 0) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).shifted(-lo);
      total_shift -= lo;
    }
  }

  // Bareiss elimination: every division below is exact.
  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return {};
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).exact_div(prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1).shifted(-total_shift);
  return negate ? -det : det;
}

Inertia inertia_symmetric_exact(const IntMatrix& s) {
  if (!s.is_symmetric()) throw DomainError("inertia requires a symmetric matrix");

  // Symmetric elimination over Z. Each step replaces the trailing block by a
  // positive multiple of its Schur complement, then divides out the content.
  std::size_t n = s.dim();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(s(i, j));

  Inertia out;
  auto remove_indices = [&](std::vector<std::size_t> drop) {
    std::sort(drop.rbegin(), drop.rend());
    for (auto d : drop) {
      m.erase(m.begin() + static_cast<std::ptrdiff_t>(d));
      for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(d));
    }
    n = m.size();
  };
  auto reduce_content = [&]() {
    BigInt g = 0;
    for (const auto& row : m)
      for (const auto& v : row) g = gcd(g, v);
    if (g > 1)
      for (auto& row : m)
        for (auto& v : row) v /= g;
  };

  while (n > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i][i] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < n) {
      // 1x1 pivot p: p * (S - v v^T / p) = p S - v v^T, sign of p folded in.
      const BigInt p = m[piv][piv];
      if (p > 0) ++out.n_plus;
      else ++out.n_minus;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == piv) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == piv) continue;
          m[i][j] = m[i][j] * p - m[i][piv] * m[piv][j];
          if (p < 0) m[i][j] = -m[i][j];
        }
      }
      remove_indices({piv});
      reduce_content();
      continue;
    }

    // All diagonal entries vanish: look for a hyperbolic 2x2 block.
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m[i][j] != 0) {
          bi = i;
          bj = j;
          break;
        }
      }
    }
    if (bi == n) {
      out.n_zero += static_cast<int>(n);
      break;
    }
    // [[0,b],[b,0]] has inertia (1,0,1). Scaling the Schur complement by b^2:
    // b^2 S - b (v_i v_j^T + v_j v_i^T).
    const BigInt b = m[bi][bj];
    ++out.n_plus;
    ++out.n_minus;
    const BigInt b2 = b * b;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == bi || i == bj) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == bi || j == bj) continue;
        m[i][j] = b2 * m[i][j] - b * (m[i][bi] * m[bj][j] + m[i][bj] * m[bi][j]);
      }
    }
    remove_indices({bi, bj});
    reduce_content();
  }
  return out;
}

int signature(const IntMatrix& s) { return inertia_symmetric_exact(s).signature(); }

Inertia inertia_hermitian_at_root(const IntMatrix& a, const UnitCirclePoint& w, double tol) {
  return inertia_hermitian_at_root(a, w, tol, det_laurent(alexander_pencil(a)));
}

Inertia inertia_hermitian_at_root(const IntMatrix& a, const UnitCirclePoint& w, double tol,
                                  const LaurentPoly& pencil_det) {
  if (w.is_one()) throw InvalidRoot("the Hermitian form vanishes identically at w = 1");
  const std::size_t n = a.dim();
  if (n == 0) return {};

  // det H = (conj(w) - 1)^n det(wA - A^T), and |conj(w) - 1| > 0 here, so
  // the determinant polynomial decides singularity.
  LaurentPoly centered = pencil_det;
  if (n % 2 == 0) centered = pencil_det.shifted(-static_cast<LaurentPoly::Exponent>(n / 2));
  const double det_abs = std::abs(lp_eval_unit(centered, w));
  const double det_scale = pencil_det.l1_norm();
  if (!(det_abs > tol * det_scale)) {
    throw NearSingular("form is singular or near-singular at w = " + w.to_string() +
                       " (|det| = " + std::to_string(det_abs) + "); perturb the root");
  }

  const std::complex<double> z = w.value();
  const std::complex<double> lhs = 1.0 - z;
  const std::complex<double> rhs = 1.0 - std::conj(z);
  Eigen::MatrixXcd h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          lhs * static_cast<double>(a(i, j)) + rhs * static_cast<double>(a(j, i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NearSingular("eigenvalue solver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();

  Inertia out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::fabs(ev(i)) <= tol * scale) ++out.n_zero;
    else if (ev(i) > 0) ++out.n_plus;
    else ++out.n_minus;
  }
  if (out.n_zero != 0) {
    throw NearSingular("form has a near-zero eigenvalue at w = " + w.to_string() +
                       "; perturb the root");
  }
  if ((out.signature() - static_cast<int>(n)) % 2 != 0) {
    throw Error("internal: signature parity disagrees with dimension");
  }
  return out;
}

}  // namespace shakekit
