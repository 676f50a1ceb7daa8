#pragma once

#include "clifflines/circle.hpp"
#include "clifflines/hopf.hpp"
#include "clifflines/hurwitz_radon.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace clifflines {

/// Black-box germ Phi : (R^r x R^n, 0) -> (R^n, 0), expected to restrict to
/// the identity on 0 x R^n. `thread_safe == false` forces serial evaluation.
struct LocalProjection {
  int r = 0;
  int n = 0;
  std::function<Vec(const Vec& alpha, const Vec& x)> eval;
  bool thread_safe = true;

  Vec operator()(const Vec& alpha, const Vec& x) const { return eval(alpha, x); }
  Vec at(const Vec& y) const { return eval(y.head(r), y.tail(n)); }
};

/// Second-order part of Phi(alpha, x) = x + Gamma(alpha, x) + Delta(alpha) + ...
struct JetData {
  BilinearMap gamma;
  // delta[k] is symmetric r x r with Delta_k(alpha) = alpha^T delta[k] alpha.
  MatList delta;
  double step = 0.0;
  bool richardson = false;
};

inline constexpr double kDefaultJetStep = 1e-3;

/// Central finite differences on the grid {0, +-h} per coordinate pair.
/// With `richardson`, combines steps h and h/2 as (4 J(h/2) - J(h)) / 3.
JetData extract_jet(const LocalProjection& phi, double h = kDefaultJetStep,
                    bool richardson = false);

struct DivisibilityReport {
  double delta_residual = 0.0;  // max |delta| entry
  double delta_bound = 0.0;     // tol * |Gamma|
  bool delta_ok = true;
  double symmetric_residual = 0.0;  // worst |G + G^T - 2p Id| over slices
  double conformal_residual = 0.0;  // worst polarized |G_i^T G_j + G_j^T G_i - 2q_ij Id|
  double gamma_bound = 0.0;
  bool gamma_ok = true;
  bool passed() const { return delta_ok && gamma_ok; }
};

/// Delta must vanish and, for every alpha, (Gamma, Gamma) and (x, Gamma) must
/// be divisible by (x, x): the matrix identities G + G^T = 2p Id and
/// polarized G_i^T G_j + G_j^T G_i = 2q_ij Id.
DivisibilityReport check_lemma_div(const JetData& jet, double tol);

/// |Phi(0, x) - x| / |x| over x = h * basis vectors.
double local_projection_defect(const LocalProjection& phi, double h = kDefaultJetStep);

struct ReconstructOptions {
  double step = kDefaultJetStep;
  bool richardson = true;
  double tol = 1e-6;  // jet divisibility check, factorization, and germ comparison
  int lines = 200;
  int samples = 64;  // per germ, split between t > 0 and t < 0
  double t_min = 1e-3;
  double t_max = 1e-1;
  double degenerate_ratio = 1e-8;  // |x-part| / |direction| below this is degenerate
  std::uint64_t seed = 0;
  int jobs = 1;
  bool throw_on_mismatch = true;
};

struct GermComparison {
  std::size_t index = 0;
  Vec direction;
  bool degenerate = false;
  bool matched = false;
  std::optional<CircleClassification> phi_circle;
  std::optional<CircleClassification> normal_circle;
  std::string error;  // classification failure, if any
};

struct ReconstructReport {
  JetData jet;
  DivisibilityReport lemma;
  double local_projection_defect = 0.0;
  std::optional<CliffordFactorization> factorization;
  std::optional<HopfMap> normal_form;
  std::vector<GermComparison> comparisons;
  std::size_t matched = 0;
  std::size_t degenerate = 0;
  std::vector<std::size_t> mismatched;
  bool passed() const { return mismatched.empty() && factorization.has_value(); }
};

/// Parameters of a circle germ through 0: Chebyshev nodes on
/// [t_min, t_max] mirrored to negative t, plus t = 0.
std::vector<double> germ_parameters(int samples, double t_min, double t_max);

/// Recovers the Clifford normal form F(alpha, x) = phi(1 - alpha)^-1 x from
/// the 2-jet of `phi` and compares the circle germs of both maps on seeded
/// random lines. Throws Lemma2Violation, FactorizationFailure and, unless
/// disabled, ComparisonFailure.
ReconstructReport reconstruct(const LocalProjection& phi, const ReconstructOptions& options = {});

/// Random directions used by reconstruct, in line order.
std::vector<Vec> random_directions(int dim, int count, std::uint64_t seed);

}  // namespace clifflines
