#ifndef EPKIT_NUMKIT_HPP
#define EPKIT_NUMKIT_HPP

#include <string>
#include <vector>

#include "epkit/complex_matrix.hpp"
#include "epkit/polynomial.hpp"
#include "epkit/tolerances.hpp"

namespace epkit {

/// Where a reported spectrum came from.
enum class RootProvenance { oracle, secular, leading_order };

std::string to_string(RootProvenance p);

struct SpectrumRoot {
  Cplx value;
  bool is_real;
};

struct SpectrumReport {
  std::vector<SpectrumRoot> roots;  // sorted by (Re, Im)
  RootProvenance provenance;
  double tol_reality;

  std::vector<Cplx> values() const;
  bool all_real() const;
};

/// Maximum matrix dimension the brute-force spectral routines accept.
inline constexpr int kOracleMaxDim = 16;

/// Monic characteristic polynomial det(xI - a) by the Faddeev-LeVerrier
/// trace recursion. Requires square a with dimension <= kOracleMaxDim.
ComplexPolynomial char_poly(const ComplexMatrix& a);

/// All complex roots by Aberth-Ehrlich simultaneous iteration with Newton
/// polishing. Roots within cluster radius are snapped to their cluster mean,
/// so multiple roots come out as repeated values. Throws NumericalError with
/// the residuals if the iteration has not converged after tol.root_max_iter
/// sweeps.
std::vector<Cplx> poly_roots(const ComplexPolynomial& p, const Tolerances& tol = {});

/// Brute-force eigenvalues via char_poly + poly_roots; the ground truth that
/// every perturbative result is checked against.
SpectrumReport eig_oracle(const ComplexMatrix& a, const Tolerances& tol = {});

/// Flag roots and package them as a report.
SpectrumReport make_report(std::vector<Cplx> roots, RootProvenance provenance,
                           const Tolerances& tol = {});

/// Frobenius norm of H^dagger Theta - Theta H. Theta must be Hermitian
/// positive definite (checked; eigenvalues via the oracle).
double quasi_hermiticity_residual(const ComplexMatrix& h, const ComplexMatrix& theta,
                                  const Tolerances& tol = {});

}  // namespace epkit

#endif
