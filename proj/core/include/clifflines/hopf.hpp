#pragma once

#include "clifflines/circle.hpp"
#include "clifflines/representation.hpp"

#include <optional>
#include <vector>

namespace clifflines {

enum class HopfForm {
  global,  // (alpha, x) -> phi(alpha)^-1 x, alpha in R^{r+1} minus 0
  local,   // (alpha, x) -> phi(1 - alpha)^-1 x, alpha in R^r
};

inline constexpr double kDefaultSingularEpsilon = 1e-10;

/// Hopf-type map attached to a representation. The local form may carry an
/// embedding R^m -> R^{r+1} of its alpha-space into span(1, e_1..e_r); by
/// default alpha lands in span(e_1..e_r) unchanged.
class HopfMap {
 public:
  HopfMap(Representation rep, HopfForm form);
  /// Local form with an explicit (r+1) x m embedding matrix.
  HopfMap(Representation rep, Mat embedding);

  const Representation& rep() const { return rep_; }
  HopfForm form() const { return form_; }
  int alpha_dim() const;
  int n() const { return rep_.n(); }
  int domain_dim() const { return alpha_dim() + n(); }
  const Mat& embedding() const { return embedding_; }

  /// Point of V-hat that alpha is inverted at: alpha itself (global) or
  /// 1 - embedding * alpha (local).
  Vec hat(const Vec& alpha) const;

  /// Throws SingularAt when q(hat(alpha)) < epsilon, DimensionMismatch on
  /// bad sizes.
  Vec eval(const Vec& alpha, const Vec& x) const;
  /// eval on a stacked (alpha, x) domain point.
  Vec eval(const Vec& y) const;

  void set_singular_epsilon(double eps) { epsilon_ = eps; }

 private:
  Representation rep_;
  HopfForm form_;
  Mat embedding_;
  bool conformal_inverse_;
  double epsilon_ = kDefaultSingularEpsilon;
};

/// Parameters sampled along a line; Chebyshev nodes cos((2k+1)pi/2m) on
/// [-1, 1], sorted ascending.
std::vector<double> chebyshev_nodes(int count);

inline constexpr int kDefaultLineSamples = 64;

struct LineGerm {
  Vec direction;  // in the stacked (alpha, x) domain
  double step = 1.0;
  int samples = kDefaultLineSamples;
  // Point the line passes through at t = 0. Defaults to the origin for the
  // local form and to (1, 0, ..., 0) in V-hat for the global form.
  std::optional<Vec> offset;

  std::vector<double> parameters() const;
};

/// Images of offset + t * direction over the sampled parameters.
std::vector<Vec> line_image(const HopfMap& map, const LineGerm& line);

}  // namespace clifflines
