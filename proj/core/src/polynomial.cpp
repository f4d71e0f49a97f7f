#include "epkit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "epkit/errors.hpp"

namespace epkit {

ComplexPolynomial::ComplexPolynomial(std::vector<Cplx> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Cplx> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
  normalize();
}

void ComplexPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Cplx(0.0, 0.0)) coeffs_.pop_back();
}

ComplexPolynomial ComplexPolynomial::constant(Cplx c) { return ComplexPolynomial({c}); }

ComplexPolynomial ComplexPolynomial::monomial(Cplx c, std::size_t power) {
  std::vector<Cplx> coeffs(power + 1, Cplx(0.0, 0.0));
  coeffs[power] = c;
  return ComplexPolynomial(std::move(coeffs));
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<Cplx>& roots) {
  ComplexPolynomial p = constant(1.0);
  for (const Cplx& r : roots) p = p * ComplexPolynomial({-r, 1.0});
  return p;
}

Cplx ComplexPolynomial::eval(Cplx x) const {
  Cplx y = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) y = y * x + coeffs_[k];
  return y;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return ComplexPolynomial();
  std::vector<Cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::operator+(const ComplexPolynomial& other) const {
  std::vector<Cplx> out(std::max(coeffs_.size(), other.coeffs_.size()), Cplx(0.0, 0.0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::operator-(const ComplexPolynomial& other) const {
  std::vector<Cplx> out(std::max(coeffs_.size(), other.coeffs_.size()), Cplx(0.0, 0.0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] -= other.coeffs_[k];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::operator*(const ComplexPolynomial& other) const {
  if (is_zero() || other.is_zero()) return ComplexPolynomial();
  std::vector<Cplx> out(coeffs_.size() + other.coeffs_.size() - 1, Cplx(0.0, 0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == Cplx(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::operator*(Cplx scalar) const {
  std::vector<Cplx> out(coeffs_);
  for (Cplx& c : out) c *= scalar;
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : ComplexPolynomial();
  std::vector<Cplx> out(coeffs_.size() + k, Cplx(0.0, 0.0));
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return ComplexPolynomial(std::move(out));
}

double ComplexPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const Cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ComplexPolynomial ComplexPolynomial::pruned(double eps_abs) const {
  std::vector<Cplx> out(coeffs_);
  for (Cplx& c : out)
    if (std::abs(c) <= eps_abs) c = 0.0;
  return ComplexPolynomial(std::move(out));
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("PolyMatrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ComplexPolynomial::constant(1.0);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("PolyMatrix multiply: inner dimensions disagree");
  PolyMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      ComplexPolynomial acc;
      for (std::size_t k = 0; k < cols_; ++k) acc = acc + (*this)(i, k) * other(k, j);
      out(i, j) = acc;
    }
  return out;
}

std::vector<ComplexPolynomial> PolyMatrix::apply(const std::vector<ComplexPolynomial>& v) const {
  if (v.size() != cols_) throw InputError("PolyMatrix apply: vector length mismatch");
  std::vector<ComplexPolynomial> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    ComplexPolynomial acc;
    for (std::size_t k = 0; k < cols_; ++k) acc = acc + (*this)(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix PolyMatrix::eval(Cplx x) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).eval(x);
  return out;
}

namespace {

ComplexPolynomial det_recursive(const PolyMatrix& m, std::vector<std::size_t>& cols,
                                std::size_t row) {
  const std::size_t n = cols.size();
  if (n == 1) return m(row, cols[0]);
  ComplexPolynomial acc;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t col = cols[j];
    if (m(row, col).is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) rest.push_back(cols[k]);
    ComplexPolynomial minor = det_recursive(m, rest, row + 1);
    ComplexPolynomial term = m(row, col) * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

ComplexPolynomial poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("poly_det requires a square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return det_recursive(m, cols, 0);
}

}  // namespace epkit
