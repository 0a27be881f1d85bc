#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shakekit/errors.hpp"
#include "shakekit/laurent.hpp"

namespace shakekit {

/// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  SquareMatrix(std::size_t dim, T fill) : dim_(dim), data_(dim * dim, fill) {}

  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows);

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  SquareMatrix transposed() const {
    SquareMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }
  std::vector<std::vector<T>> rows() const {
    std::vector<std::vector<T>> out(dim_, std::vector<T>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

template <typename T>
SquareMatrix<T> SquareMatrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InputError("matrix row " + std::to_string(i) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

using IntMatrix = SquareMatrix<long long>;
using LaurentMatrix = SquareMatrix<LaurentPoly>;

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

constexpr double kDefaultTolerance = 1e-9;

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int signature() const { return n_plus - n_minus; }
  int dim() const { return n_plus + n_zero + n_minus; }
  bool operator==(const Inertia&) const = default;
};

/// Fraction-free determinant over Z[t, 1/t].
LaurentPoly det_laurent(const LaurentMatrix& m);

/// tA - A^T as a Laurent matrix.
LaurentMatrix alexander_pencil(const IntMatrix& a);

/// Exact inertia of a symmetric integer matrix. Throws DomainError when the
/// input is not symmetric.
Inertia inertia_symmetric_exact(const IntMatrix& s);
int signature(const IntMatrix& s);

/// Inertia of H = (1 - w)A + (1 - conj(w))A^T. The result is only returned
/// when H is certifiably non-singular: |det(wA - A^T)| must exceed
/// tol * ||det(tA - A^T)||_1, and every eigenvalue must exceed
/// tol * max|eigenvalue| in magnitude. Otherwise NearSingular is thrown.
/// InvalidRoot is thrown for w = 1.
Inertia inertia_hermitian_at_root(const IntMatrix& a, const UnitCirclePoint& w,
                                  double tol = kDefaultTolerance);
/// Same, reusing a precomputed det(tA - A^T).
Inertia inertia_hermitian_at_root(const IntMatrix& a, const UnitCirclePoint& w, double tol,
                                  const LaurentPoly& pencil_det);

}  // namespace shakekit
