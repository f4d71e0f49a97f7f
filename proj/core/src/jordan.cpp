#include "epkit/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "epkit/errors.hpp"
#include "epkit/numkit.hpp"

namespace epkit {

PartitionSpec::PartitionSpec(std::vector<int> parts) : parts_(std::move(parts)), k_(0) {
  if (parts_.empty()) throw InputError("PartitionSpec: at least one part required");
  int prev = parts_.front();
  for (int p : parts_) {
    if (p < 1) throw InputError("PartitionSpec: parts must be positive");
    if (p > prev) throw InputError("PartitionSpec: parts must be non-increasing");
    prev = p;
    k_ += p;
  }
}

PartitionSpec::PartitionSpec(std::initializer_list<int> parts)
    : PartitionSpec(std::vector<int>(parts)) {}

int PartitionSpec::block_offset(int j) const {
  return std::accumulate(parts_.begin(), parts_.begin() + j, 0);
}

std::string PartitionSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << "+";
    out << parts_[i];
  }
  return out.str();
}

ComplexMatrix jordan_block(int m, Cplx eta) {
  if (m < 1) throw InputError("jordan_block: dimension must be >= 1");
  ComplexMatrix j(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    j(i, i) = eta;
    if (i + 1 < m) j(i, i + 1) = 1.0;
  }
  return j;
}

ComplexMatrix jordan_direct_sum(const JordanSpec& spec) {
  const int k = spec.partition.K();
  ComplexMatrix out(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  int offset = 0;
  for (int m : spec.partition.parts()) {
    for (int i = 0; i < m; ++i) {
      out(offset + i, offset + i) = spec.eta;
      if (i + 1 < m) out(offset + i, offset + i + 1) = 1.0;
    }
    offset += m;
  }
  return out;
}

ComplexMatrix shift_matrix(int n) {
  if (n < 1) throw InputError("shift_matrix: dimension must be >= 1");
  ComplexMatrix pi(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) pi(i, i - 1) = 1.0;
  return pi;
}

ComplexMatrix first_basis_vector(int n) {
  if (n < 1) throw InputError("first_basis_vector: dimension must be >= 1");
  ComplexMatrix e(static_cast<std::size_t>(n), 1);
  e(0, 0) = 1.0;
  return e;
}

double default_rank_tol(const ComplexMatrix& h, const Tolerances& tol) {
  return tol.rank_rel * h.frobenius_norm();
}

namespace {

/// Kernel dimensions d_k = dim ker B^k, computed on B/||B|| with per-power
/// renormalization so that the floating-point noise floor of high powers of a
/// (near-)nilpotent matrix stays far below the rank threshold.
struct KernelSequence {
  std::vector<int> dims;                 // d_1, d_2, ... until K or plateau
  std::vector<ComplexMatrix> powers;     // renormalized B^k, k = 1..dims.size()
  double scaled_tol;                     // rank threshold on the scaled powers
};

KernelSequence kernel_dimension_sequence(const ComplexMatrix& b, double rank_tol) {
  const int k = static_cast<int>(b.rows());
  const double bnorm = b.frobenius_norm();
  KernelSequence seq;
  if (bnorm == 0.0) {
    // H == eta I: kernel is everything at the first power.
    seq.dims.assign(1, k);
    seq.powers.push_back(b);
    seq.scaled_tol = 0.5;
    return seq;
  }
  seq.scaled_tol = std::min(rank_tol / bnorm, 0.5);

  ComplexMatrix scaled = b * Cplx(1.0 / bnorm, 0.0);
  ComplexMatrix power = scaled;
  for (int step = 1; step <= k; ++step) {
    const int dim = k - matrix_rank(power, seq.scaled_tol);
    const int prev = seq.dims.empty() ? 0 : seq.dims.back();
    seq.dims.push_back(dim);
    seq.powers.push_back(power);
    if (dim >= k || dim == prev) break;
    ComplexMatrix next = mat_mul(scaled, power);
    const double nnorm = next.frobenius_norm();
    if (nnorm <= 1e-300) {
      seq.dims.push_back(k);
      seq.powers.push_back(next);
      break;
    }
    power = next * Cplx(1.0 / nnorm, 0.0);
  }
  return seq;
}

std::string sequence_to_string(const std::vector<int>& dims) {
  std::ostringstream out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out << ",";
    out << dims[i];
  }
  return out.str();
}

PartitionSpec partition_from_dims(const std::vector<int>& dims, int k) {
  // blocks of size >= j: b_j = d_j - d_{j-1}; size exactly j: b_j - b_{j+1}.
  std::vector<int> b;
  int prev = 0;
  for (int d : dims) {
    b.push_back(d - prev);
    prev = d;
  }
  std::vector<int> parts;
  for (std::size_t j = b.size(); j-- > 0;) {
    const int exactly = b[j] - (j + 1 < b.size() ? b[j + 1] : 0);
    for (int c = 0; c < exactly; ++c) parts.push_back(static_cast<int>(j) + 1);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (std::accumulate(parts.begin(), parts.end(), 0) != k)
    throw NumericalError("jordan structure detection: inconsistent kernel dimensions d_k = " +
                         sequence_to_string(dims));
  return PartitionSpec(parts);
}

}  // namespace

PartitionSpec detect_jordan_structure(const ComplexMatrix& h, Cplx eta, double rank_tol) {
  if (!h.is_square()) throw InputError("detect_jordan_structure requires a square matrix");
  const int k = static_cast<int>(h.rows());
  if (k > kOracleMaxDimJordan())
    throw InputError("detect_jordan_structure: dimension exceeds the desk-scale cap of 16");
  h.require_finite("detect_jordan_structure");

  ComplexMatrix b = h;
  for (int i = 0; i < k; ++i) b(i, i) -= eta;

  const KernelSequence seq = kernel_dimension_sequence(b, rank_tol);
  if (seq.dims.back() < k)
    throw NumericalError(
        "detect_jordan_structure: eta is not the only eigenvalue; kernel dimension sequence "
        "d_k = " +
        sequence_to_string(seq.dims));
  // Weyr monotonicity: violations mean the rank decisions are inconsistent.
  int prev_jump = k + 1, prev = 0;
  for (int d : seq.dims) {
    const int jump = d - prev;
    if (jump > prev_jump)
      throw NumericalError("detect_jordan_structure: non-monotonic kernel growth, d_k = " +
                           sequence_to_string(seq.dims));
    prev_jump = jump;
    prev = d;
  }
  return partition_from_dims(seq.dims, k);
}

namespace {

/// Project v on the orthogonal complement of the span of the (orthonormal)
/// columns collected in basis[0..count).
void orthogonalize_against(std::vector<Cplx>& v, const std::vector<std::vector<Cplx>>& basis) {
  for (const auto& u : basis) {
    Cplx dot = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(u[i]) * v[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * u[i];
  }
}

double vec_norm(const std::vector<Cplx>& v) {
  double s = 0.0;
  for (const Cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<Cplx> column_of(const ComplexMatrix& m, std::size_t j) {
  std::vector<Cplx> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

std::vector<Cplx> apply_mat(const ComplexMatrix& m, const std::vector<Cplx>& v) {
  std::vector<Cplx> out(m.rows(), Cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

int kOracleMaxDimJordan() { return 16; }

ComplexMatrix transition_matrix(const ComplexMatrix& h, const JordanSpec& spec, double rank_tol,
                                const Tolerances& tol) {
  const int k = spec.partition.K();
  if (!h.is_square() || static_cast<int>(h.rows()) != k)
    throw InputError("transition_matrix: H dimension must equal the partition sum K");

  const PartitionSpec detected = detect_jordan_structure(h, spec.eta, rank_tol);
  if (!(detected == spec.partition))
    throw NumericalError("transition_matrix: detected structure " + detected.to_string() +
                         " does not match requested " + spec.partition.to_string());

  ComplexMatrix b = h;
  for (int i = 0; i < k; ++i) b(i, i) -= spec.eta;
  const KernelSequence seq = kernel_dimension_sequence(b, rank_tol);

  // Chain tops, longest blocks first. At height s a new top is a kernel
  // vector of B^s independent of ker B^(s-1) and of the height-s members of
  // the longer chains already built.
  const std::vector<int>& parts = spec.partition.parts();
  const int max_height = parts.front();
  std::vector<std::vector<Cplx>> used;  // orthonormal span of the excluded subspace
  std::vector<std::vector<std::vector<Cplx>>> chains;  // chains[c][j] = q_{j+1}

  for (int s = max_height; s >= 1; --s) {
    const int count_s =
        static_cast<int>(std::count(parts.begin(), parts.end(), s));
    if (count_s == 0) continue;

    used.clear();
    if (s >= 2) {
      const ComplexMatrix lower = kernel_basis(seq.powers[s - 2], seq.scaled_tol);
      for (std::size_t j = 0; j < lower.cols(); ++j) used.push_back(column_of(lower, j));
    }
    for (const auto& chain : chains) {
      // height-s member of a longer chain, normalized for conditioning
      std::vector<Cplx> member = chain[static_cast<std::size_t>(s) - 1];
      const double n = vec_norm(member);
      if (n > 0.0)
        for (Cplx& z : member) z /= n;
      orthogonalize_against(member, used);
      const double rn = vec_norm(member);
      if (rn > 1e-14)
        for (Cplx& z : member) z /= rn;
      used.push_back(member);
    }

    const ComplexMatrix level = kernel_basis(seq.powers[s - 1], seq.scaled_tol);
    for (int c = 0; c < count_s; ++c) {
      // pick the candidate with the largest component outside `used`
      std::vector<Cplx> best;
      double best_norm = -1.0;
      for (std::size_t j = 0; j < level.cols(); ++j) {
        std::vector<Cplx> cand = column_of(level, j);
        orthogonalize_against(cand, used);
        const double n = vec_norm(cand);
        if (n > best_norm) {
          best_norm = n;
          best = std::move(cand);
        }
      }
      if (best_norm < 1e-10)
        throw NumericalError("transition_matrix: could not find an independent chain top at "
                             "height " +
                             std::to_string(s));
      for (Cplx& z : best) z /= best_norm;
      used.push_back(best);

      std::vector<std::vector<Cplx>> chain(static_cast<std::size_t>(s));
      chain[static_cast<std::size_t>(s) - 1] = best;
      for (int j = s - 1; j >= 1; --j)
        chain[static_cast<std::size_t>(j) - 1] =
            apply_mat(b, chain[static_cast<std::size_t>(j)]);
      chains.push_back(std::move(chain));
    }
  }

  // Chains were built longest-first, matching the partition order.
  ComplexMatrix q(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  int col = 0;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    auto& chain = chains[c];
    // normalize: unit head with first significant component real positive
    const std::vector<Cplx>& head = chain.front();
    const double head_norm = vec_norm(head);
    if (head_norm <= 0.0)
      throw NumericalError("transition_matrix: zero chain head");
    Cplx lead = 0.0;
    for (const Cplx& z : head)
      if (std::abs(z) > 1e-12 * head_norm) {
        lead = z;
        break;
      }
    const Cplx phase = lead != Cplx(0.0, 0.0) ? std::abs(lead) / lead : Cplx(1.0, 0.0);
    const Cplx scale = phase / head_norm;
    for (auto& vec : chain)
      for (Cplx& z : vec) z *= scale;

    for (const auto& vec : chain) {
      for (int i = 0; i < k; ++i) q(i, col) = vec[static_cast<std::size_t>(i)];
      ++col;
    }
  }

  const ComplexMatrix j = jordan_direct_sum(spec);
  const double residual = (mat_mul(h, q) - mat_mul(q, j)).frobenius_norm();
  const double hnorm = std::max(h.frobenius_norm(), 1e-300);
  if (residual > tol.transition_rel * hnorm) {
    std::ostringstream msg;
    msg << "transition_matrix: residual " << residual << " exceeds " << tol.transition_rel
        << " * ||H|| = " << tol.transition_rel * hnorm;
    throw NumericalError(msg.str());
  }
  if (matrix_rank(q, 1e-12 * std::max(1.0, q.frobenius_norm())) < k)
    throw NumericalError("transition_matrix: chain vectors are numerically dependent");
  return q;
}

}  // namespace epkit
