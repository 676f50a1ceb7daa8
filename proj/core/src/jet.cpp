#include "clifflines/jet.hpp"

#include "clifflines/error.hpp"
#include "clifflines/parallel.hpp"
#include "clifflines/random.hpp"

#include <algorithm>
#include <cmath>

namespace clifflines {

namespace {

struct RawJet {
  MatList gamma;
  MatList delta;
};

RawJet differences(const LocalProjection& phi, double h) {
  const int r = phi.r;
  const int n = phi.n;
  const Vec zero_a = Vec::Zero(r);
  const Vec zero_x = Vec::Zero(n);
  auto eval = [&](const Vec& a, const Vec& x) {
    Vec v = phi(a, x);
    if (v.size() != n) throw EvaluationFailure("map returned a value of the wrong dimension");
    return v;
  };

  RawJet jet;
  jet.gamma.assign(r, Mat::Zero(n, n));
  jet.delta.assign(n, Mat::Zero(r, r));
  const double inv4h2 = 1.0 / (4.0 * h * h);
  for (int i = 0; i < r; ++i) {
    const Vec a = h * Vec::Unit(r, i);
    for (int j = 0; j < n; ++j) {
      const Vec x = h * Vec::Unit(n, j);
      jet.gamma[i].col(j) = (eval(a, x) - eval(-a, x) - eval(a, -x) + eval(-a, -x)) * inv4h2;
    }
  }

  // Pure-alpha Hessian H; Delta(alpha) = alpha^T (H / 2) alpha.
  const Vec f0 = eval(zero_a, zero_x);
  for (int i = 0; i < r; ++i) {
    const Vec ei = h * Vec::Unit(r, i);
    const Vec hii = (eval(ei, zero_x) - 2.0 * f0 + eval(-ei, zero_x)) / (h * h);
    for (int k = 0; k < n; ++k) jet.delta[k](i, i) = 0.5 * hii[k];
    for (int j = i + 1; j < r; ++j) {
      const Vec ej = h * Vec::Unit(r, j);
      const Vec hij = (eval(ei + ej, zero_x) - eval(ei - ej, zero_x) -
                       eval(-ei + ej, zero_x) + eval(-ei - ej, zero_x)) * inv4h2;
      for (int k = 0; k < n; ++k) jet.delta[k](i, j) = jet.delta[k](j, i) = 0.5 * hij[k];
    }
  }
  return jet;
}

double max_abs(const MatList& mats) {
  double m = 0.0;
  for (const Mat& a : mats) m = std::max(m, clifflines::max_abs(a));
  return m;
}

}  // namespace

JetData extract_jet(const LocalProjection& phi, double h, bool richardson) {
  if (!(h > 0)) throw InvalidArgument("finite-difference step must be positive");
  if (phi.r < 0 || phi.n < 1 || !phi.eval) throw InvalidArgument("local projection is not set up");
  RawJet coarse = differences(phi, h);
  if (richardson) {
    const RawJet fine = differences(phi, 0.5 * h);
    for (std::size_t i = 0; i < coarse.gamma.size(); ++i)
      coarse.gamma[i] = (4.0 * fine.gamma[i] - coarse.gamma[i]) / 3.0;
    for (std::size_t k = 0; k < coarse.delta.size(); ++k)
      coarse.delta[k] = (4.0 * fine.delta[k] - coarse.delta[k]) / 3.0;
  }
  JetData jet;
  jet.gamma.r = phi.r;
  jet.gamma.n = phi.n;
  jet.gamma.slices = std::move(coarse.gamma);
  jet.delta = std::move(coarse.delta);
  jet.step = h;
  jet.richardson = richardson;
  return jet;
}

DivisibilityReport check_lemma_div(const JetData& jet, double tol) {
  DivisibilityReport rep;
  const double gamma_size = max_abs(jet.gamma.slices);
  rep.delta_residual = max_abs(jet.delta);
  rep.delta_bound = tol * gamma_size;
  rep.delta_ok = rep.delta_residual <= rep.delta_bound;

  const MatList& slices = jet.gamma.slices;
  const int n = jet.gamma.n;
  const Mat id = Mat::Identity(n, n);
  double scale = 1.0;
  for (const Mat& g : slices) scale = std::max(scale, g.squaredNorm() / n);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const Mat sym = slices[i] + slices[i].transpose();
    rep.symmetric_residual = std::max(rep.symmetric_residual,
                                      clifflines::max_abs(sym - (sym.trace() / n) * id));
    for (std::size_t j = i; j < slices.size(); ++j) {
      const Mat pol = slices[i].transpose() * slices[j] + slices[j].transpose() * slices[i];
      rep.conformal_residual = std::max(rep.conformal_residual,
                                        clifflines::max_abs(pol - (pol.trace() / n) * id));
    }
  }
  rep.gamma_bound = tol * scale;
  rep.gamma_ok = rep.symmetric_residual <= tol * std::sqrt(scale) &&
                 rep.conformal_residual <= rep.gamma_bound;
  return rep;
}

double local_projection_defect(const LocalProjection& phi, double h) {
  double worst = 0.0;
  const Vec zero_a = Vec::Zero(phi.r);
  for (int j = 0; j < phi.n; ++j) {
    for (double s : {h, -h}) {
      const Vec x = s * Vec::Unit(phi.n, j);
      worst = std::max(worst, (phi(zero_a, x) - x).norm() / h);
    }
  }
  return worst;
}

std::vector<double> germ_parameters(int samples, double t_min, double t_max) {
  if (samples < 2) throw InvalidArgument("germ sampling needs at least two samples");
  if (!(t_min > 0 && t_max > t_min)) throw InvalidArgument("germ sampling range must satisfy 0 < t_min < t_max");
  const int side = samples / 2;
  const auto nodes = chebyshev_nodes(side);
  std::vector<double> t;
  t.reserve(2 * side + 1);
  for (double c : nodes) t.push_back(t_min + 0.5 * (c + 1.0) * (t_max - t_min));
  const std::size_t positive = t.size();
  for (std::size_t i = 0; i < positive; ++i) t.push_back(-t[i]);
  t.push_back(0.0);
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Vec> random_directions(int dim, int count, std::uint64_t seed) {
  std::vector<Vec> dirs;
  dirs.reserve(count);
  for (int i = 0; i < count; ++i) dirs.push_back(Rng::stream(seed, i).unit_vec(dim));
  return dirs;
}

ReconstructReport reconstruct(const LocalProjection& phi, const ReconstructOptions& options) {
  if (!(options.tol > 0)) throw InvalidArgument("tolerance must be positive");
  ReconstructReport report;
  report.local_projection_defect = local_projection_defect(phi, options.step);
  if (report.local_projection_defect > options.tol)
    throw InvalidArgument("map is not a local projection: |Phi(0,x) - x| / |x| = " +
                          std::to_string(report.local_projection_defect));

  report.jet = extract_jet(phi, options.step, options.richardson);
  report.lemma = check_lemma_div(report.jet, options.tol);
  if (!report.lemma.passed())
    throw Lemma2Violation(report.lemma.delta_residual,
                          std::max(report.lemma.symmetric_residual, report.lemma.conformal_residual));

  try {
    report.factorization = factor(report.jet.gamma, options.tol, FactorMode::normal_form);
  } catch (const Error& e) {
    throw FactorizationFailure(e.code() + ": " + e.what());
  }
  report.normal_form.emplace(report.factorization->rep, report.factorization->embedding);
  const HopfMap& normal = *report.normal_form;

  const auto params = germ_parameters(options.samples, options.t_min, options.t_max);
  const auto dirs = random_directions(phi.r + phi.n, options.lines, options.seed);
  report.comparisons.resize(dirs.size());

  auto compare = [&](std::size_t i) {
    GermComparison& c = report.comparisons[i];
    c.index = i;
    c.direction = dirs[i];
    if (dirs[i].tail(phi.n).norm() < options.degenerate_ratio * dirs[i].norm()) {
      c.degenerate = true;
      return;
    }
    std::vector<Vec> phi_pts;
    std::vector<Vec> normal_pts;
    for (double t : params) {
      const Vec y = t * dirs[i];
      phi_pts.push_back(phi.at(y));
      normal_pts.push_back(normal.eval(y));
    }
    try {
      c.phi_circle = classify_points(phi_pts, options.tol);
      c.normal_circle = classify_points(normal_pts, options.tol);
      c.matched = same_circle(*c.phi_circle, *c.normal_circle, options.tol);
    } catch (const Error& e) {
      c.error = e.code() + ": " + e.what();
    }
  };
  parallel_for(dirs.size(), phi.thread_safe ? options.jobs : 1, compare);

  for (const auto& c : report.comparisons) {
    if (c.degenerate) {
      ++report.degenerate;
    } else if (c.matched) {
      ++report.matched;
    } else {
      report.mismatched.push_back(c.index);
    }
  }
  if (options.throw_on_mismatch && !report.mismatched.empty())
    throw ComparisonFailure(report.mismatched);
  return report;
}

}  // namespace clifflines
