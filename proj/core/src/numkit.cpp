#include "epkit/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "epkit/errors.hpp"

namespace epkit {

std::string to_string(RootProvenance p) {
  switch (p) {
    case RootProvenance::oracle: return "oracle";
    case RootProvenance::secular: return "secular";
    case RootProvenance::leading_order: return "leading-order";
  }
  return "unknown";
}

std::vector<Cplx> SpectrumReport::values() const {
  std::vector<Cplx> v;
  v.reserve(roots.size());
  for (const SpectrumRoot& r : roots) v.push_back(r.value);
  return v;
}

bool SpectrumReport::all_real() const {
  return std::all_of(roots.begin(), roots.end(),
                     [](const SpectrumRoot& r) { return r.is_real; });
}

ComplexPolynomial char_poly(const ComplexMatrix& a) {
  if (!a.is_square()) throw InputError("char_poly requires a square matrix");
  const auto n = a.rows();
  if (static_cast<int>(n) > kOracleMaxDim)
    throw InputError("char_poly: dimension exceeds the oracle cap of 16");

  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Cplx> coeffs(n + 1, Cplx(0.0, 0.0));
  coeffs[n] = 1.0;
  ComplexMatrix m = ComplexMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix am = mat_mul(a, m);
    const Cplx c = -am.trace() / static_cast<double>(k);
    coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) am(i, i) += c;
      m = std::move(am);
    }
  }
  return ComplexPolynomial(std::move(coeffs));
}

namespace {

double residual_scale(const ComplexPolynomial& p, double r) {
  double s = 0.0, rk = 1.0;
  for (const Cplx& c : p.coeffs()) {
    s += std::abs(c) * rk;
    rk *= r;
  }
  return std::max(s, p.max_abs_coeff());
}

/// Snap clustered values to their cluster mean (multiplicity reporting).
void cluster_roots(std::vector<Cplx>& roots, double cluster_rel) {
  const std::size_t n = roots.size();
  std::vector<int> group(n, -1);
  int ngroups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    group[i] = ngroups;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (group[j] >= 0) continue;
      const double radius = cluster_rel * std::max(1.0, std::abs(roots[i]));
      if (std::abs(roots[i] - roots[j]) <= radius) group[j] = ngroups;
    }
    ++ngroups;
  }
  for (int g = 0; g < ngroups; ++g) {
    Cplx mean = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (group[i] == g) {
        mean += roots[i];
        ++count;
      }
    if (count < 2) continue;
    mean /= static_cast<double>(count);
    for (std::size_t i = 0; i < n; ++i)
      if (group[i] == g) roots[i] = mean;
  }
}

void sort_by_re_im(std::vector<Cplx>& v) {
  std::sort(v.begin(), v.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<Cplx> poly_roots(const ComplexPolynomial& p, const Tolerances& tol) {
  if (p.degree() < 1) throw InputError("poly_roots requires degree >= 1");

  // Exact zero trailing coefficients are roots at the origin; deflate them.
  std::vector<Cplx> coeffs = p.coeffs();
  std::vector<Cplx> roots;
  std::size_t zeros = 0;
  while (zeros + 1 < coeffs.size() && coeffs[zeros] == Cplx(0.0, 0.0)) ++zeros;
  roots.assign(zeros, Cplx(0.0, 0.0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));

  const std::size_t deg = coeffs.size() - 1;
  if (deg > 0) {
    const ComplexPolynomial q{std::vector<Cplx>(coeffs)};
    const ComplexPolynomial dq = q.derivative();

    // Initial guesses on a circle whose radius comes from coefficient bounds:
    // geometric-mean estimate |c0/cn|^(1/n), capped by the Cauchy bound.
    const double lead = std::abs(coeffs.back());
    double cauchy = 0.0;
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k)
      cauchy = std::max(cauchy, std::abs(coeffs[k]) / lead);
    cauchy += 1.0;
    double radius = std::pow(std::abs(coeffs.front()) / lead, 1.0 / static_cast<double>(deg));
    radius = std::clamp(radius, 1e-12, cauchy);

    std::vector<Cplx> z(deg);
    for (std::size_t j = 0; j < deg; ++j) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(deg) + 0.7;
      z[j] = radius * Cplx(std::cos(angle), std::sin(angle));
    }

    bool converged = false;
    for (int iter = 0; iter < tol.root_max_iter && !converged; ++iter) {
      converged = true;
      for (std::size_t i = 0; i < deg; ++i) {
        const Cplx pv = q.eval(z[i]);
        if (std::abs(pv) <= tol.root_residual * residual_scale(q, std::abs(z[i]))) continue;
        const Cplx dv = dq.eval(z[i]);
        Cplx newton = dv != Cplx(0.0, 0.0) ? pv / dv : Cplx(0.0, 0.0);
        Cplx sum = 0.0;
        for (std::size_t j = 0; j < deg; ++j)
          if (j != i) sum += 1.0 / (z[i] - z[j]);
        const Cplx denom = 1.0 - newton * sum;
        Cplx step = denom != Cplx(0.0, 0.0) ? newton / denom : newton;
        if (step == Cplx(0.0, 0.0)) {
          // stalled on a critical point; nudge off it
          step = (1e-6 * std::max(1.0, std::abs(z[i]))) * Cplx(0.7, 0.7);
        }
        z[i] -= step;
        if (std::abs(step) > 1e-14 * std::max(1.0, std::abs(z[i]))) converged = false;
      }
    }

    // Newton polishing, accepted only when it lowers the residual.
    for (std::size_t i = 0; i < deg; ++i) {
      for (int it = 0; it < 3; ++it) {
        const Cplx pv = q.eval(z[i]);
        const Cplx dv = dq.eval(z[i]);
        if (dv == Cplx(0.0, 0.0)) break;
        const Cplx cand = z[i] - pv / dv;
        if (std::abs(q.eval(cand)) < std::abs(pv))
          z[i] = cand;
        else
          break;
      }
    }

    std::vector<double> residuals(deg);
    bool ok = true;
    for (std::size_t i = 0; i < deg; ++i) {
      residuals[i] = std::abs(q.eval(z[i])) / residual_scale(q, std::abs(z[i]));
      if (residuals[i] > tol.root_residual) ok = false;
    }
    if (!ok) {
      std::ostringstream msg;
      msg << "poly_roots: no convergence after " << tol.root_max_iter
          << " iterations; relative residuals:";
      for (double r : residuals) msg << " " << r;
      throw NumericalError(msg.str());
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }

  cluster_roots(roots, tol.cluster_rel);
  sort_by_re_im(roots);
  return roots;
}

SpectrumReport make_report(std::vector<Cplx> roots, RootProvenance provenance,
                           const Tolerances& tol) {
  sort_by_re_im(roots);
  SpectrumReport report{{}, provenance, tol.reality};
  report.roots.reserve(roots.size());
  for (const Cplx& z : roots) {
    const bool real = std::abs(z.imag()) <= tol.reality * std::max(1.0, std::abs(z));
    report.roots.push_back(SpectrumRoot{z, real});
  }
  return report;
}

SpectrumReport eig_oracle(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) throw InputError("eig_oracle requires a square matrix");
  if (static_cast<int>(a.rows()) > kOracleMaxDim)
    throw InputError("eig_oracle: dimension exceeds the oracle cap of 16");
  a.require_finite("eig_oracle");
  return make_report(poly_roots(char_poly(a), tol), RootProvenance::oracle, tol);
}

double quasi_hermiticity_residual(const ComplexMatrix& h, const ComplexMatrix& theta,
                                  const Tolerances& tol) {
  if (!h.is_square() || !theta.is_square() || h.rows() != theta.rows())
    throw InputError("quasi_hermiticity_residual: H and Theta must be square, same size");
  const double theta_scale = std::max(theta.frobenius_norm(), 1e-300);
  const double herm_dev = (theta - theta.adjoint()).frobenius_norm();
  if (herm_dev > tol.hermiticity_rel * theta_scale)
    throw InputError("quasi_hermiticity_residual: Theta is not Hermitian");
  const SpectrumReport spec = eig_oracle(theta, tol);
  for (const SpectrumRoot& r : spec.roots)
    if (r.value.real() <= 0.0)
      throw InputError("quasi_hermiticity_residual: Theta is not positive definite");
  return (mat_mul(h.adjoint(), theta) - mat_mul(theta, h)).frobenius_norm();
}

}  // namespace epkit
