#ifndef EPKIT_JORDAN_HPP
#define EPKIT_JORDAN_HPP

#include <string>
#include <vector>

#include "epkit/complex_matrix.hpp"
#include "epkit/tolerances.hpp"

namespace epkit {

/// Ordered block-size signature M_1 >= M_2 >= ... >= M_L of a degenerate
/// Jordan structure. Identifies the degeneracy class of an exceptional point.
class PartitionSpec {
 public:
  /// Throws InputError unless parts are positive and non-increasing.
  explicit PartitionSpec(std::vector<int> parts);
  PartitionSpec(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int K() const { return k_; }
  int L() const { return static_cast<int>(parts_.size()); }
  int part(int j) const { return parts_[static_cast<std::size_t>(j)]; }
  /// Offset of block j inside a K-vector (sum of the preceding parts).
  int block_offset(int j) const;
  bool operator==(const PartitionSpec& other) const { return parts_ == other.parts_; }

  std::string to_string() const;  // e.g. "3+2"

 private:
  std::vector<int> parts_;
  int k_;
};

struct JordanSpec {
  PartitionSpec partition;
  Cplx eta;
};

/// m x m Jordan block: eta on the diagonal, 1 on the superdiagonal.
ComplexMatrix jordan_block(int m, Cplx eta);

/// Block-diagonal direct sum of Jordan blocks in partition order.
ComplexMatrix jordan_direct_sum(const JordanSpec& spec);

/// n x n shift: 1 on the subdiagonal, 0 elsewhere.
ComplexMatrix shift_matrix(int n);

/// n x 1 column (1, 0, ..., 0)^T.
ComplexMatrix first_basis_vector(int n);

/// Default rank tolerance for structure detection: rank_rel * ||h||_F.
double default_rank_tol(const ComplexMatrix& h, const Tolerances& tol = {});

/// Partition inferred from the kernel-dimension sequence d_k of (H - eta I)^k:
/// the number of blocks of size >= k is d_k - d_{k-1}. Throws NumericalError
/// (with the detected sequence) when eta is not the only eigenvalue.
PartitionSpec detect_jordan_structure(const ComplexMatrix& h, Cplx eta, double rank_tol);

/// Invertible Q with H Q = Q J(eta) whose columns are Jordan chains, longest
/// blocks first. Chains are normalized: unit-norm head with its first
/// significant component made real positive. Throws NumericalError when the
/// detected structure disagrees with the requested one or the residual
/// ||HQ - QJ||_F exceeds tol.transition_rel * ||H||_F.
ComplexMatrix transition_matrix(const ComplexMatrix& h, const JordanSpec& spec, double rank_tol,
                                const Tolerances& tol = {});

}  // namespace epkit

#endif
