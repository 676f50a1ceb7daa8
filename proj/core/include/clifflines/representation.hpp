#pragma once

#include "clifflines/linalg.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clifflines {

inline constexpr double kRelationTolerance = 1e-10;

/// Max residual of the Clifford relations E_i^2 = -I, E_iE_j + E_jE_i = 0.
struct RelationReport {
  double max_residual = 0.0;
  int worst_i = -1;  // 0-based; worst_i == worst_j for a square relation
  int worst_j = -1;
};

RelationReport check_relations(std::span<const Mat> generators);

/// Average of g^T g over the 2^r blade products g of the generators. Every
/// generator is orthogonal with respect to the returned metric.
Mat dirac_metric(std::span<const Mat> generators);

/// A representation of Cliff(r) on R^n: generators E_1..E_r and an inner
/// product <x, y> = x^T M y for which 1 and every E_i act conformally.
/// Immutable once built.
class Representation {
 public:
  /// Validates square, equally sized matrices against the Clifford
  /// relations (throws RelationViolation naming the failing pair) and attaches
  /// the Dirac-averaged metric.
  static Representation from_generators(MatList generators,
                                         double tol = kRelationTolerance);

  /// Generators plus an explicit metric. The metric must be symmetric
  /// positive definite and make the generators orthogonal.
  static Representation with_metric(MatList generators, Mat metric,
                                    double tol = kRelationTolerance);

  /// Cliff(0) acting on R^n: no generators, identity metric.
  static Representation trivial(int n);

  int r() const { return static_cast<int>(generators_.size()); }
  int n() const { return n_; }
  const MatList& generators() const { return generators_; }
  const Mat& generator(int i) const { return generators_.at(i); }
  const Mat& metric() const { return metric_; }
  bool metric_is_identity(double tol = kRelationTolerance) const {
    return is_identity(metric_, tol);
  }

  /// alpha[0] * I + sum_{i>=1} alpha[i] * E_i.
  Mat operator_of(const Vec& alpha) const;

  /// operator_of(alpha) * x. Throws DimensionMismatch.
  Vec apply(const Vec& alpha, const Vec& x) const;

  /// Same representation in an M-orthonormal frame (M = L L^T, generators
  /// L^T E L^-T), so the returned metric is the identity. `frame()` of the
  /// result maps new coordinates back to the old ones.
  Representation orthonormalized() const;
  const Mat& frame() const { return frame_; }

  /// |x|_M.
  double norm(const Vec& x) const;

 private:
  Representation(MatList generators, Mat metric, int n);

  MatList generators_;
  Mat metric_;
  Mat frame_;
  int n_ = 0;
};

/// Names accepted by builtin(): cliff1_r2, cliff2_r4, cliff3_r4_plus,
/// cliff3_r4_minus, cliff7_r8_left, cliff7_r8_right.
const std::vector<std::string>& builtin_names();

/// Throws UnknownName.
Representation builtin(std::string_view name);

}  // namespace clifflines
