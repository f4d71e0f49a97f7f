#ifndef EPKIT_TOLERANCES_HPP
#define EPKIT_TOLERANCES_HPP

namespace epkit {

/// Every numeric threshold used by the toolkit, in one record. Functions
/// take this by const reference and default to these values; callers that
/// need looser or tighter behavior pass an adjusted copy.
struct Tolerances {
  /// mat_inv: a pivot below pivot_rel * ||a||_F is treated as singular.
  double pivot_rel = 1e-12;
  /// mat_inv: reject inverses whose condition estimate exceeds this.
  double cond_bound = 1e12;
  /// poly_roots: accept a root when |p(z)| <= root_residual * scale(z).
  double root_residual = 1e-9;
  /// poly_roots: give up after this many Aberth sweeps.
  int root_max_iter = 200;
  /// multiplicity clustering radius, relative to max(1, |root|).
  double cluster_rel = 1e-6;
  /// reality flag: |Im z| <= reality * max(1, |z|).
  double reality = 1e-8;
  /// rank decisions in Jordan-structure detection, relative to ||H||_F.
  double rank_rel = 1e-8;
  /// accepted transition-matrix residual ||HQ - QJ||_F / ||H||_F.
  double transition_rel = 1e-8;
  /// quasi-Hermiticity: Theta must be Hermitian to this (relative).
  double hermiticity_rel = 1e-12;
  /// Newton refinement of compatibility systems: target residual.
  double compat_residual = 1e-10;
  /// Newton refinement: maximum iterations per seed.
  int compat_max_iter = 60;
};

}  // namespace epkit

#endif
