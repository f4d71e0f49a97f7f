#ifndef EPKIT_RNG_HPP
#define EPKIT_RNG_HPP

#include <cstdint>
#include <random>

#include "epkit/complex_matrix.hpp"

namespace epkit {

/// Seeded random source with platform-stable output. std::mt19937_64 is
/// bit-exact everywhere; the distributions below avoid std::uniform_*
/// (whose sequences are implementation-defined) so outputs embedding a seed
/// reproduce byte-identically across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Cplx complex_in_square(double half_width) {
    const double re = uniform(-half_width, half_width);
    const double im = uniform(-half_width, half_width);
    return {re, im};
  }

  ComplexMatrix complex_matrix(std::size_t rows, std::size_t cols, double half_width) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex_in_square(half_width);
    return m;
  }

  ComplexMatrix real_matrix(std::size_t rows, std::size_t cols, double half_width) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-half_width, half_width);
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace epkit

#endif
