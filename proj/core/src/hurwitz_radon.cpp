#include "clifflines/hurwitz_radon.hpp"

#include "clifflines/error.hpp"
#include "clifflines/random.hpp"

#include <algorithm>
#include <cmath>

namespace clifflines {

BilinearMap BilinearMap::from_slices(MatList slices) {
  if (slices.empty()) throw InvalidArgument("bilinear map needs at least one slice");
  const Eigen::Index n = slices[0].rows();
  if (n == 0) throw DimensionMismatch("slices must be nonempty");
  for (const Mat& s : slices)
    if (s.rows() != n || s.cols() != n)
      throw DimensionMismatch("slices must be square matrices of equal size");
  BilinearMap g;
  g.r = static_cast<int>(slices.size());
  g.n = static_cast<int>(n);
  g.slices = std::move(slices);
  return g;
}

Mat BilinearMap::operator_at(const Vec& alpha) const {
  if (alpha.size() != r)
    throw DimensionMismatch("alpha has " + std::to_string(alpha.size()) +
                            " components, expected " + std::to_string(r));
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < r; ++i) out.noalias() += alpha[i] * slices[i];
  return out;
}

ComplexMultiplicationReport detect_complex_multiplication(const Mat& a, double tol) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw DimensionMismatch("complex multiplication test needs a square matrix");
  const auto n = static_cast<double>(a.rows());
  const Mat id = Mat::Identity(a.rows(), a.cols());
  ComplexMultiplicationReport rep;
  rep.p = a.trace() / n;
  const Mat ata = a.transpose() * a;
  rep.q = ata.trace() / n;
  rep.symmetric_residual = max_abs(a + a.transpose() - 2.0 * rep.p * id);
  rep.conformal_residual = max_abs(ata - rep.q * id);

  const double linear_scale = std::max(1.0, std::sqrt(rep.q));
  const double quadratic_scale = std::max(1.0, rep.q);
  rep.cauchy_schwarz_ok = rep.q >= rep.p * rep.p - tol * quadratic_scale;
  rep.is_cm = rep.symmetric_residual <= tol * linear_scale &&
              rep.conformal_residual <= tol * quadratic_scale && rep.cauchy_schwarz_ok;
  if (rep.is_cm && rep.q - rep.p * rep.p > tol * quadratic_scale)
    rep.structure = (a - rep.p * id) / std::sqrt(rep.q - rep.p * rep.p);
  return rep;
}

namespace {

double slice_scale(const MatList& mats) {
  double s = 1.0;
  for (const Mat& m : mats) s = std::max(s, m.squaredNorm() / static_cast<double>(m.rows()));
  return s;
}

// Gram matrix of the polarized form over `mats`; the pair (i, j) must satisfy
// M_i^T M_j + M_j^T M_i = 2 q_ij Id. `offset` shifts reported indices.
Mat polarized_gram(const MatList& mats, double tol, int offset) {
  const auto count = static_cast<Eigen::Index>(mats.size());
  const Eigen::Index n = mats[0].rows();
  const Mat id = Mat::Identity(n, n);
  const double scale = slice_scale(mats);
  Mat gram(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = i; j < count; ++j) {
      const Mat sym = mats[i].transpose() * mats[j] + mats[j].transpose() * mats[i];
      const double qij = sym.trace() / (2.0 * static_cast<double>(n));
      const double residual = max_abs(sym - 2.0 * qij * id);
      if (residual > tol * scale)
        throw NotConformal(static_cast<int>(i) + offset, static_cast<int>(j) + offset, residual);
      gram(i, j) = gram(j, i) = qij;
    }
  }
  return gram;
}

// q-orthonormal basis (as coefficient columns) of span(e_0, ..., e_{m-1}),
// processed in order, dropping directions whose remaining q-norm^2 falls
// below `drop` times their original q-norm^2.
Mat gram_schmidt(const Mat& gram, double drop) {
  const Eigen::Index m = gram.rows();
  Mat basis(m, 0);
  for (Eigen::Index i = 0; i < m; ++i) {
    Vec v = Vec::Unit(m, i);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < basis.cols(); ++j)
        v -= basis.col(j).dot(gram * v) * basis.col(j);
    const double norm2 = v.dot(gram * v);
    if (norm2 <= drop * gram(i, i)) continue;
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = v / std::sqrt(norm2);
  }
  return basis;
}

Mat combine(const MatList& mats, const Vec& coeffs) {
  Mat out = Mat::Zero(mats[0].rows(), mats[0].cols());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) out.noalias() += coeffs[i] * mats[i];
  return out;
}

// Rank test on the Gram matrix of {Id, G_1..G_r}: Id lies in the slice span
// when the augmented Gram is numerically singular.
constexpr double kSpanConditionThreshold = 1e-8;

Representation build_rep(MatList gens, int n, double tol) {
  if (gens.empty()) return Representation::trivial(n);
  return Representation::from_generators(std::move(gens), std::max(tol, kRelationTolerance));
}

}  // namespace

Mat recover_qform(const BilinearMap& gamma, double tol) {
  Mat q = polarized_gram(gamma.slices, tol, 0);
  const double scale = slice_scale(gamma.slices);
  const double min_eig = Eigen::SelfAdjointEigenSolver<Mat>(q).eigenvalues().minCoeff();
  if (min_eig <= tol * scale) throw NotPositiveDefinite(min_eig);
  return q;
}

CliffordFactorization factor(const BilinearMap& gamma, double tol, FactorMode mode) {
  const Mat qform = recover_qform(gamma, tol);
  const int n = gamma.n;
  const int r = gamma.r;

  MatList augmented;
  augmented.reserve(r + 1);
  augmented.push_back(Mat::Identity(n, n));
  for (const Mat& s : gamma.slices) augmented.push_back(s);

  std::optional<Mat> aug_gram;
  bool id_in_span = false;
  if (mode != FactorMode::hurwitz) {
    try {
      aug_gram = polarized_gram(augmented, tol, -1);
      const Vec eig = Eigen::SelfAdjointEigenSolver<Mat>(*aug_gram).eigenvalues();
      id_in_span = eig.minCoeff() <= kSpanConditionThreshold * eig.maxCoeff();
    } catch (const NotConformal&) {
      if (mode == FactorMode::normal_form) throw;
    }
  }

  const bool normal = mode == FactorMode::normal_form ||
                      (mode == FactorMode::automatic && aug_gram && id_in_span);
  if (normal) {
    // Orthonormal basis of V-hat = span(Id, slices) starting at Id.
    const Mat basis = gram_schmidt(*aug_gram, kSpanConditionThreshold);
    MatList gens;
    for (Eigen::Index j = 1; j < basis.cols(); ++j) gens.push_back(combine(augmented, basis.col(j)));
    // embedding(j, i) = q(G_i, B_j)
    Mat embedding = basis.transpose() * aug_gram->rightCols(r);
    return CliffordFactorization{build_rep(std::move(gens), n, tol), Mat::Identity(n, n),
                                 std::move(embedding), qform, true};
  }

  const Mat basis = gram_schmidt(qform, kSpanConditionThreshold);
  if (basis.cols() != r) throw FactorizationFailure("slice Gram matrix lost rank during orthonormalization");
  const Mat gauge = combine(gamma.slices, basis.col(0));
  const double gauge_residual = max_abs(gauge.transpose() * gauge - Mat::Identity(n, n));
  if (gauge_residual > std::max(tol, kRelationTolerance) * 10.0)
    throw FactorizationFailure("gauge is not orthogonal (residual " + std::to_string(gauge_residual) + ")");
  MatList gens;
  for (int j = 1; j < r; ++j) gens.push_back(combine(gamma.slices, basis.col(j)) * gauge.transpose());
  Mat embedding = basis.transpose() * qform;
  return CliffordFactorization{build_rep(std::move(gens), n, tol), gauge, std::move(embedding),
                               qform, false};
}

Mat CliffordFactorization::operator_at(const Vec& alpha) const {
  return rep.operator_of(embedding * alpha) * gauge;
}

Vec CliffordFactorization::eval(const Vec& alpha, const Vec& x) const {
  return operator_at(alpha) * x;
}

double reconstruction_residual(const BilinearMap& gamma, const CliffordFactorization& f,
                               int random_samples, std::uint64_t seed) {
  double worst = 0.0;
  auto probe = [&](const Vec& alpha, const Vec& x) {
    const double denom = alpha.norm() * x.norm();
    if (denom == 0.0) return;
    worst = std::max(worst, (gamma(alpha, x) - f.eval(alpha, x)).norm() / denom);
  };
  for (int i = 0; i < gamma.r; ++i)
    for (int j = 0; j < gamma.n; ++j) probe(Vec::Unit(gamma.r, i), Vec::Unit(gamma.n, j));
  Rng rng(seed);
  for (int s = 0; s < random_samples; ++s) {
    const Vec alpha = rng.normal_vec(gamma.r);
    const Vec x = rng.normal_vec(gamma.n);
    probe(alpha, x);
  }
  return worst;
}

}  // namespace clifflines
