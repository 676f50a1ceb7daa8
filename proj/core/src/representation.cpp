#include "clifflines/representation.hpp"

#include "clifflines/error.hpp"
#include "clifflines/quaternion.hpp"

#include <cmath>

namespace clifflines {

RelationReport check_relations(std::span<const Mat> generators) {
  RelationReport report;
  const auto r = static_cast<int>(generators.size());
  for (int i = 0; i < r; ++i) {
    const Mat& ei = generators[i];
    const Mat id = Mat::Identity(ei.rows(), ei.cols());
    for (int j = i; j < r; ++j) {
      const Mat& ej = generators[j];
      const double residual =
          i == j ? max_abs(ei * ei + id) : max_abs(ei * ej + ej * ei);
      if (residual > report.max_residual || report.worst_i < 0) {
        report.max_residual = residual;
        report.worst_i = i;
        report.worst_j = j;
      }
    }
  }
  if (report.worst_i < 0) report.max_residual = 0.0;
  return report;
}

Mat dirac_metric(std::span<const Mat> generators) {
  if (generators.empty()) throw InvalidArgument("dirac_metric needs at least one generator");
  const auto r = generators.size();
  const Eigen::Index n = generators[0].rows();
  Mat sum = Mat::Zero(n, n);
  const std::size_t count = std::size_t{1} << r;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Mat g = Mat::Identity(n, n);
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) g = g * generators[i];
    sum.noalias() += g.transpose() * g;
  }
  sum /= static_cast<double>(count);
  return 0.5 * (sum + sum.transpose());
}

namespace {

int validate_shapes(const MatList& generators) {
  if (generators.empty()) throw InvalidArgument("a representation needs at least one generator");
  const Eigen::Index n = generators[0].rows();
  if (n == 0) throw DimensionMismatch("generators must be nonempty matrices");
  for (const Mat& g : generators)
    if (g.rows() != n || g.cols() != n)
      throw DimensionMismatch("generators must be square matrices of equal size");
  return static_cast<int>(n);
}

void validate_relations(const MatList& generators, double tol) {
  const auto report = check_relations(generators);
  if (report.max_residual > tol)
    throw RelationViolation(report.worst_i, report.worst_j, report.max_residual);
}

}  // namespace

Representation::Representation(MatList generators, Mat metric, int n)
    : generators_(std::move(generators)),
      metric_(std::move(metric)),
      frame_(Mat::Identity(n, n)),
      n_(n) {}

Representation Representation::from_generators(MatList generators, double tol) {
  const int n = validate_shapes(generators);
  validate_relations(generators, tol);
  Mat metric = dirac_metric(generators);
  return Representation(std::move(generators), std::move(metric), n);
}

Representation Representation::trivial(int n) {
  if (n < 1) throw DimensionMismatch("representation dimension must be positive");
  return Representation({}, Mat::Identity(n, n), n);
}

Representation Representation::with_metric(MatList generators, Mat metric, double tol) {
  const int n = validate_shapes(generators);
  validate_relations(generators, tol);
  if (metric.rows() != n || metric.cols() != n)
    throw DimensionMismatch("metric size does not match generators");
  if (max_abs(metric - metric.transpose()) > tol * std::max(1.0, max_abs(metric)))
    throw InvalidArgument("metric is not symmetric");
  if (Eigen::LLT<Mat>(metric).info() != Eigen::Success)
    throw NotPositiveDefinite(Eigen::SelfAdjointEigenSolver<Mat>(metric).eigenvalues().minCoeff());
  const double scale = std::max(1.0, max_abs(metric));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Mat& e = generators[i];
    const double residual = max_abs(e.transpose() * metric * e - metric);
    if (residual > tol * scale)
      throw InvalidArgument("generator " + std::to_string(i + 1) +
                            " is not orthogonal for the supplied metric (residual " +
                            std::to_string(residual) + ")");
  }
  return Representation(std::move(generators), std::move(metric), n);
}

Mat Representation::operator_of(const Vec& alpha) const {
  if (alpha.size() != r() + 1)
    throw DimensionMismatch("alpha has " + std::to_string(alpha.size()) +
                            " components, expected " + std::to_string(r() + 1));
  Mat op = alpha[0] * Mat::Identity(n_, n_);
  for (int i = 0; i < r(); ++i) op.noalias() += alpha[i + 1] * generators_[i];
  return op;
}

Vec Representation::apply(const Vec& alpha, const Vec& x) const {
  if (x.size() != n_)
    throw DimensionMismatch("x has " + std::to_string(x.size()) +
                            " components, expected " + std::to_string(n_));
  return operator_of(alpha) * x;
}

Representation Representation::orthonormalized() const {
  Eigen::LLT<Mat> llt(metric_);
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite(0.0);
  const Mat lower = llt.matrixL();
  const Mat upper = lower.transpose();
  // frame = L^-T maps orthonormal coordinates y = L^T x back to x.
  const Mat frame = upper.triangularView<Eigen::Upper>().solve(Mat::Identity(n_, n_));
  MatList gens;
  gens.reserve(generators_.size());
  for (const Mat& e : generators_) gens.push_back(upper * e * frame);
  Representation out(std::move(gens), Mat::Identity(n_, n_), n_);
  out.frame_ = frame_ * frame;
  return out;
}

double Representation::norm(const Vec& x) const {
  return std::sqrt(std::max(0.0, x.dot(metric_ * x)));
}

namespace {

Mat block2(const Mat4& a, const Mat4& b, const Mat4& c, const Mat4& d) {
  Mat m(8, 8);
  m << a, b, c, d;
  return m;
}

// (a, b) in H^2 acting as [[L_a, -R_conj(b)], [R_b, L_conj(a)]]; with `swap`
// the roles of left and right multiplication are exchanged.
Mat pair_action(const Quaternion& a, const Quaternion& b, bool swap) {
  auto left = [swap](const Quaternion& q) { return swap ? right_mul_matrix(q) : left_mul_matrix(q); };
  auto right = [swap](const Quaternion& q) { return swap ? left_mul_matrix(q) : right_mul_matrix(q); };
  return block2(left(a), -right(b.conj()), right(b), left(a.conj()));
}

MatList cliff7(bool swap) {
  const Quaternion zero{};
  const Quaternion units[] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  MatList gens;
  for (const auto& u : units) gens.push_back(pair_action(u, zero, swap));
  gens.push_back(pair_action(zero, Quaternion::one(), swap));
  for (const auto& u : units) gens.push_back(pair_action(zero, u, swap));
  return gens;
}

MatList cliff3(double sign) {
  return {sign * left_mul_matrix(Quaternion::i()), sign * left_mul_matrix(Quaternion::j()),
          sign * left_mul_matrix(Quaternion::k())};
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "cliff1_r2",       "cliff2_r4",      "cliff3_r4_plus",
      "cliff3_r4_minus", "cliff7_r8_left", "cliff7_r8_right"};
  return names;
}

Representation builtin(std::string_view name) {
  MatList gens;
  if (name == "cliff1_r2") {
    Mat j(2, 2);
    j << 0, -1, 1, 0;
    gens = {j};
  } else if (name == "cliff2_r4") {
    gens = {left_mul_matrix(Quaternion::i()), left_mul_matrix(Quaternion::j())};
  } else if (name == "cliff3_r4_plus") {
    gens = cliff3(1.0);
  } else if (name == "cliff3_r4_minus") {
    gens = cliff3(-1.0);
  } else if (name == "cliff7_r8_left") {
    gens = cliff7(false);
  } else if (name == "cliff7_r8_right") {
    gens = cliff7(true);
  } else {
    throw UnknownName(std::string(name));
  }
  return Representation::from_generators(std::move(gens));
}

}  // namespace clifflines
