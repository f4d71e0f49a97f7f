#ifndef EPKIT_POLYNOMIAL_HPP
#define EPKIT_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "epkit/complex_matrix.hpp"

namespace epkit {

/// Univariate polynomial with complex coefficients, stored ascending.
/// The zero polynomial has an empty coefficient vector and degree() == -1;
/// otherwise the leading coefficient is nonzero (exact zeros are trimmed).
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Cplx> ascending_coeffs);
  ComplexPolynomial(std::initializer_list<Cplx> ascending_coeffs);

  static ComplexPolynomial constant(Cplx c);
  /// The monomial c * x^power.
  static ComplexPolynomial monomial(Cplx c, std::size_t power);
  static ComplexPolynomial from_roots(const std::vector<Cplx>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Cplx>& coeffs() const { return coeffs_; }
  Cplx coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Cplx(0.0, 0.0); }

  Cplx eval(Cplx x) const;
  ComplexPolynomial derivative() const;

  ComplexPolynomial operator+(const ComplexPolynomial& other) const;
  ComplexPolynomial operator-(const ComplexPolynomial& other) const;
  ComplexPolynomial operator*(const ComplexPolynomial& other) const;
  ComplexPolynomial operator*(Cplx scalar) const;
  /// Multiply by x^k.
  ComplexPolynomial shifted_up(std::size_t k) const;

  bool operator==(const ComplexPolynomial& other) const { return coeffs_ == other.coeffs_; }

  /// Largest |coefficient|; 0 for the zero polynomial.
  double max_abs_coeff() const;
  /// Drop coefficients with |c| <= eps_abs (used after cancellation-heavy sums).
  ComplexPolynomial pruned(double eps_abs) const;

 private:
  void normalize();
  std::vector<Cplx> coeffs_;
};

/// Dense matrix of polynomials; carrier for the triangular resolvent factors
/// and for leading-order secular pencils.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ComplexPolynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ComplexPolynomial& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  PolyMatrix operator*(const PolyMatrix& other) const;
  std::vector<ComplexPolynomial> apply(const std::vector<ComplexPolynomial>& v) const;
  ComplexMatrix eval(Cplx x) const;
  bool operator==(const PolyMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ComplexPolynomial> data_;
};

/// Determinant by Laplace expansion; intended for small matrices (the secular
/// pencils are L x L with L rarely above 4).
ComplexPolynomial poly_det(const PolyMatrix& m);

}  // namespace epkit

#endif
