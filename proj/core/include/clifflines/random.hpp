#pragma once

#include "clifflines/linalg.hpp"

#include <cstdint>
#include <random>

namespace clifflines {

/// Seedable generator with a fully specified output stream: std::mt19937_64
/// (whose sequence the C++ standard fixes) with hand-written transforms, so
/// samples agree across standard libraries.
///
///   uniform()  = (next() >> 11) * 2^-53            in [0, 1)
///   normal()   = Box-Muller on (1 - uniform(), uniform()), cosine branch only
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for item `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  Vec normal_vec(Eigen::Index n);
  Vec unit_vec(Eigen::Index n);
  Mat normal_mat(Eigen::Index rows, Eigen::Index cols);
  /// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the
  /// sign of R's diagonal folded into Q).
  Mat orthogonal(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace clifflines
