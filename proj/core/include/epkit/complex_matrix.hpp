#ifndef EPKIT_COMPLEX_MATRIX_HPP
#define EPKIT_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "epkit/tolerances.hpp"

namespace epkit {

using Cplx = std::complex<double>;

/// Dense complex matrix, row-major, dimensions fixed at construction.
/// The single matrix carrier used across the toolkit.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cplx> entries);
  /// Row-by-row literal, e.g. {{1,0},{0,1}}. Rows must have equal length.
  ComplexMatrix(std::initializer_list<std::initializer_list<Cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Cplx>& data() const { return data_; }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(Cplx scalar) const;

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  double frobenius_norm() const;
  double max_abs() const;
  Cplx trace() const;
  bool all_finite() const;

  /// Throws InputError if any entry is NaN or infinite.
  void require_finite(const char* context) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cplx> data_;
};

/// Standard matrix product. Throws InputError on inner-dimension mismatch.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Inverse by partially pivoted LU. Throws NumericalError when a pivot falls
/// below tol.pivot_rel * ||a||_F (message carries the pivot magnitude) or the
/// condition estimate exceeds tol.cond_bound.
ComplexMatrix mat_inv(const ComplexMatrix& a, const Tolerances& tol = {});

/// Solve a x = b for possibly multiple right-hand sides (b is n x m).
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b,
                       const Tolerances& tol = {});

Cplx determinant(const ComplexMatrix& a, const Tolerances& tol = {});

/// Numerical rank from Householder QR with column pivoting: the number of
/// |R_kk| above tol_abs.
int matrix_rank(const ComplexMatrix& m, double tol_abs);

/// Orthonormal basis of the (right) null space, as matrix columns, from the
/// same pivoted QR. Returns an n x 0 matrix when the kernel is trivial.
ComplexMatrix kernel_basis(const ComplexMatrix& m, double tol_abs);

}  // namespace epkit

#endif
