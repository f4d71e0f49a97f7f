#include "epkit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "epkit/errors.hpp"

namespace epkit {

namespace {

void require_positive_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Cplx(0.0, 0.0)) {
  require_positive_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require_positive_dims(rows, cols);
  if (data_.size() != rows * cols)
    throw InputError("entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_positive_dims(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged row in matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix addition: shape mismatch");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix subtraction: shape mismatch");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Cplx scalar) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Cplx ComplexMatrix::trace() const {
  if (!is_square()) throw InputError("trace of non-square matrix");
  Cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (const Cplx& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

void ComplexMatrix::require_finite(const char* context) const {
  if (!all_finite()) {
    std::ostringstream msg;
    msg << context << ": matrix contains NaN or infinite entries";
    throw InputError(msg.str());
  }
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("mat_mul: inner dimensions disagree");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Cplx aik = a(i, k);
      if (aik == Cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

namespace {

struct Lu {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;  // row permutation
  int sign;
  double min_pivot;
};

Lu lu_factor(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) throw InputError("LU factorization requires a square matrix");
  const std::size_t n = a.rows();
  Lu f{a, std::vector<std::size_t>(n), 1, 0.0};
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

  const double pivot_floor = tol.pivot_rel * a.frobenius_norm();
  f.min_pivot = std::abs(f.lu(0, 0));

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(f.lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= pivot_floor) {
      std::ostringstream msg;
      msg << "singular matrix: pivot magnitude " << best << " at column " << k
          << " is below tolerance " << pivot_floor;
      throw NumericalError(msg.str());
    }
    f.min_pivot = std::min(f.min_pivot, best);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    const Cplx d = f.lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Cplx m = f.lu(i, k) / d;
      f.lu(i, k) = m;
      if (m == Cplx(0.0, 0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
    }
  }
  return f;
}

ComplexMatrix lu_solve_factored(const Lu& f, const ComplexMatrix& b) {
  const std::size_t n = f.lu.rows();
  if (b.rows() != n) throw InputError("lu_solve: right-hand side has wrong row count");
  ComplexMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    // forward substitution on permuted rows
    for (std::size_t i = 0; i < n; ++i) {
      Cplx s = b(f.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x(j, c);
      x(i, c) = s;
    }
    // back substitution
    for (std::size_t ii = n; ii-- > 0;) {
      Cplx s = x(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x(j, c);
      x(ii, c) = s / f.lu(ii, ii);
    }
  }
  return x;
}

}  // namespace

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol) {
  return lu_solve_factored(lu_factor(a, tol), b);
}

ComplexMatrix mat_inv(const ComplexMatrix& a, const Tolerances& tol) {
  const Lu f = lu_factor(a, tol);
  const ComplexMatrix inv = lu_solve_factored(f, ComplexMatrix::identity(a.rows()));
  const double cond_est = a.frobenius_norm() * inv.frobenius_norm();
  if (cond_est > tol.cond_bound) {
    std::ostringstream msg;
    msg << "mat_inv: condition estimate " << cond_est << " exceeds bound " << tol.cond_bound;
    throw NumericalError(msg.str());
  }
  return inv;
}

Cplx determinant(const ComplexMatrix& a, const Tolerances& tol) {
  Tolerances loose = tol;
  loose.pivot_rel = 0.0;  // exact zero pivot still detected below
  Lu f{ComplexMatrix(1, 1), {}, 1, 0.0};
  try {
    f = lu_factor(a, loose);
  } catch (const NumericalError&) {
    return Cplx(0.0, 0.0);
  }
  Cplx det = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

namespace {

/// Householder QR with column pivoting. Returns R (in place of m), the column
/// permutation, and the Householder reflectors are discarded: rank and kernel
/// questions only need R and the permutation.
struct PivotedQr {
  ComplexMatrix r;
  std::vector<std::size_t> col_perm;
};

PivotedQr qr_column_pivot(const ComplexMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  PivotedQr out{m, std::vector<std::size_t>(cols)};
  for (std::size_t j = 0; j < cols; ++j) out.col_perm[j] = j;
  ComplexMatrix& r = out.r;

  std::vector<double> colnorm(cols, 0.0);
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    for (std::size_t j = k; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < rows; ++i) s += std::norm(r(i, j));
      colnorm[j] = s;
    }
    std::size_t piv = k;
    for (std::size_t j = k + 1; j < cols; ++j)
      if (colnorm[j] > colnorm[piv]) piv = j;
    if (piv != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(r(i, k), r(i, piv));
      std::swap(out.col_perm[k], out.col_perm[piv]);
      std::swap(colnorm[k], colnorm[piv]);
    }
    const double xnorm = std::sqrt(colnorm[k]);
    if (xnorm == 0.0) continue;

    // Householder vector v = x - alpha e1 with alpha = -exp(i arg x0) |x|
    const Cplx x0 = r(k, k);
    const double ax0 = std::abs(x0);
    const Cplx phase = ax0 > 0.0 ? x0 / ax0 : Cplx(1.0, 0.0);
    const Cplx alpha = -phase * xnorm;
    std::vector<Cplx> v(rows - k);
    for (std::size_t i = k; i < rows; ++i) v[i - k] = r(i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (const Cplx& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    r(k, k) = alpha;
    for (std::size_t i = k + 1; i < rows; ++i) r(i, k) = 0.0;
    for (std::size_t j = k + 1; j < cols; ++j) {
      Cplx dot = 0.0;
      for (std::size_t i = k; i < rows; ++i) dot += std::conj(v[i - k]) * r(i, j);
      dot *= beta;
      for (std::size_t i = k; i < rows; ++i) r(i, j) -= dot * v[i - k];
    }
  }
  return out;
}

int rank_from_r(const PivotedQr& qr, double tol_abs) {
  const std::size_t steps = std::min(qr.r.rows(), qr.r.cols());
  int rank = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    if (std::abs(qr.r(k, k)) > tol_abs)
      ++rank;
    else
      break;  // diagonal of pivoted R is non-increasing in magnitude
  }
  return rank;
}

}  // namespace

int matrix_rank(const ComplexMatrix& m, double tol_abs) {
  return rank_from_r(qr_column_pivot(m), tol_abs);
}

ComplexMatrix kernel_basis(const ComplexMatrix& m, double tol_abs) {
  const PivotedQr qr = qr_column_pivot(m);
  const std::size_t n = m.cols();
  const auto rank = static_cast<std::size_t>(rank_from_r(qr, tol_abs));
  const std::size_t nullity = n - rank;
  if (nullity == 0) throw NumericalError("kernel_basis: matrix has trivial null space");

  // Solve R11 * X = -R12 (R11 is rank x rank upper triangular).
  ComplexMatrix basis(n, nullity);
  for (std::size_t f = 0; f < nullity; ++f) {
    const std::size_t free_col = rank + f;
    std::vector<Cplx> x(rank, Cplx(0.0, 0.0));
    for (std::size_t ii = rank; ii-- > 0;) {
      Cplx s = -qr.r(ii, free_col);
      for (std::size_t j = ii + 1; j < rank; ++j) s -= qr.r(ii, j) * x[j];
      x[ii] = s / qr.r(ii, ii);
    }
    for (std::size_t i = 0; i < rank; ++i) basis(qr.col_perm[i], f) = x[i];
    basis(qr.col_perm[free_col], f) = 1.0;
  }

  // Orthonormalize (modified Gram-Schmidt), keeps the basis deterministic.
  for (std::size_t c = 0; c < nullity; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Cplx dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(basis(i, p)) * basis(i, c);
      for (std::size_t i = 0; i < n; ++i) basis(i, c) -= dot * basis(i, p);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(basis(i, c));
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (std::size_t i = 0; i < n; ++i) basis(i, c) /= norm;
  }
  return basis;
}

}  // namespace epkit
