#include "shakekit/seifert.hpp"

#include <numbers>

#include "shakekit/errors.hpp"

namespace shakekit {

LaurentPoly alexander(const SeifertMatrix& a) {
  const auto n = static_cast<int>(a.dim());
  if (n % 2 != 0) throw OddDimension(n);
  LaurentPoly delta = det_laurent(alexander_pencil(a.matrix())).shifted(-n / 2);
  if (!delta.is_symmetric() || delta.eval_at_one() != 1) {
    throw DomainError("det(tA - A^T) is not a knot Alexander polynomial: " + delta.to_string());
  }
  return delta;
}

int lt_signature(const SeifertMatrix& a, const UnitCirclePoint& w, double tol) {
  return inertia_hermitian_at_root(a.matrix(), w, tol).signature();
}

int classical_signature_seifert(const SeifertMatrix& a) { return signature(a.symmetrized()); }

SeifertMatrix an_family(int n) {
  if (n < 1) throw DomainError("an_family needs n >= 1, got " + std::to_string(n));
  const auto dim = static_cast<std::size_t>(2 * n + 2);
  IntMatrix a(dim, 0);
  constexpr long long corner[4][4] = {{1, 1, 1, 0}, {0, 0, 1, 0}, {1, 2, 0, 0}, {0, 0, -1, 0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = corner[i][j];
  // For n = 1 this lands on (2,4) of the 4x4 corner; the chain below is empty.
  a(1, dim - 1) = -1;
  for (std::size_t i = 4; i < dim; ++i) a(i, i - 1) = 1;
  return SeifertMatrix(std::move(a));
}

LaurentPoly delta_n_closed(int n) {
  if (n < 1) throw DomainError("delta_n_closed needs n >= 1, got " + std::to_string(n));
  using M = LaurentPoly;
  return M::monomial(1, -(n + 1)) + M::monomial(-2, -n) + M::monomial(1, -(n - 1)) +
         M::monomial(-1, -1) + M(3) + M::monomial(-1, 1) + M::monomial(1, n - 1) +
         M::monomial(-2, n) + M::monomial(1, n + 1);
}

std::vector<Arc> delta_sign_scan(const LaurentPoly& p, int grid_size) {
  if (!p.is_symmetric()) throw DomainError("sign scan needs a symmetric polynomial");
  if (grid_size < 2) throw DomainError("sign scan needs at least two grid points");
  const double step = 2.0 * std::numbers::pi / grid_size;
  std::vector<double> values(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    const auto pt = UnitCirclePoint::root(i, grid_size);
    values[static_cast<std::size_t>(i)] = p.eval_symmetric_real(pt.re());
  }
  // A zero on a grid point sits inside the arc between its nonzero
  // neighbours, so compare consecutive nonzero samples.
  std::vector<int> nonzero;
  for (int i = 0; i < grid_size; ++i) {
    if (values[static_cast<std::size_t>(i)] != 0.0) nonzero.push_back(i);
  }
  std::vector<Arc> arcs;
  for (std::size_t idx = 0; idx < nonzero.size(); ++idx) {
    const int i = nonzero[idx];
    const bool last = idx + 1 == nonzero.size();
    const int j = last ? nonzero[0] + grid_size : nonzero[idx + 1];
    const double a = values[static_cast<std::size_t>(i)];
    const double b = values[static_cast<std::size_t>(j % grid_size)];
    if ((a > 0) != (b > 0)) arcs.push_back({i * step, j * step});
  }
  return arcs;
}

LeviTristramForm::LeviTristramForm(SeifertMatrix a)
    : a_(std::move(a)), det_(det_laurent(alexander_pencil(a_.matrix()))) {}

int LeviTristramForm::signature_at(const UnitCirclePoint& w, double tol) const {
  return inertia_hermitian_at_root(a_.matrix(), w, tol, det_).signature();
}

}  // namespace shakekit
