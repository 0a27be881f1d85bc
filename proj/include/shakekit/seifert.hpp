#pragma once

#include <vector>

#include "shakekit/exactlinalg.hpp"
#include "shakekit/laurent.hpp"

namespace shakekit {

/// Integer Seifert form A = [lk(b_i, b_j^+)].
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(IntMatrix a) : a_(std::move(a)) {}
  static SeifertMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    return SeifertMatrix(IntMatrix::from_rows(rows));
  }

  const IntMatrix& matrix() const { return a_; }
  std::size_t dim() const { return a_.dim(); }
  IntMatrix symmetrized() const { return a_ + a_.transposed(); }

  bool operator==(const SeifertMatrix&) const = default;

 private:
  IntMatrix a_;
};

/// t^(-dim/2) det(tA - A^T). Throws OddDimension, and DomainError when the
/// result is not a symmetric polynomial with value 1 at t = 1.
LaurentPoly alexander(const SeifertMatrix& a);

/// Levine-Tristram signature at w != 1, guarded against singular forms.
int lt_signature(const SeifertMatrix& a, const UnitCirclePoint& w,
                 double tol = kDefaultTolerance);

/// Signature of A + A^T, exact.
int classical_signature_seifert(const SeifertMatrix& a);

/// The (2n+2)-square Seifert form of the twisted pattern family P_n: the
/// fixed 4x4 corner, a -1 at (2, 2n+2) (1-based), and ones on the
/// subdiagonal from row 5 to the last row.
SeifertMatrix an_family(int n);

/// Nine-term closed form of the symmetrized Alexander polynomial of P_n.
LaurentPoly delta_n_closed(int n);

struct Arc {
  double theta_lo;
  double theta_hi;
};

/// Arcs between consecutive nonzero samples at the grid angles
/// 2*pi*i/grid_size where the real evaluation of the symmetric polynomial p
/// changes sign. Samples that are exactly zero are skipped, so an arc may
/// span several grid steps; the last arc may end past 2*pi.
std::vector<Arc> delta_sign_scan(const LaurentPoly& p, int grid_size);

/// Caches det(tA - A^T) so repeated root-of-unity queries on one matrix do
/// not redo the elimination.
class LeviTristramForm {
 public:
  explicit LeviTristramForm(SeifertMatrix a);
  const SeifertMatrix& seifert() const { return a_; }
  const LaurentPoly& pencil_det() const { return det_; }
  int signature_at(const UnitCirclePoint& w, double tol = kDefaultTolerance) const;

 private:
  SeifertMatrix a_;
  LaurentPoly det_;
};

}  // namespace shakekit
