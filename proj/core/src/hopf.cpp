#include "clifflines/hopf.hpp"

#include "clifflines/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace clifflines {

HopfMap::HopfMap(Representation rep, HopfForm form)
    : rep_(std::move(rep)), form_(form) {
  if (form_ == HopfForm::local) {
    embedding_ = Mat::Zero(rep_.r() + 1, rep_.r());
    embedding_.bottomRows(rep_.r()).setIdentity();
  }
  conformal_inverse_ = rep_.metric_is_identity();
}

HopfMap::HopfMap(Representation rep, Mat embedding)
    : rep_(std::move(rep)), form_(HopfForm::local), embedding_(std::move(embedding)) {
  if (embedding_.rows() != rep_.r() + 1)
    throw DimensionMismatch("embedding must have r + 1 rows");
  conformal_inverse_ = rep_.metric_is_identity();
}

int HopfMap::alpha_dim() const {
  return form_ == HopfForm::global ? rep_.r() + 1 : static_cast<int>(embedding_.cols());
}

Vec HopfMap::hat(const Vec& alpha) const {
  if (alpha.size() != alpha_dim())
    throw DimensionMismatch("alpha has " + std::to_string(alpha.size()) +
                            " components, expected " + std::to_string(alpha_dim()));
  if (form_ == HopfForm::global) return alpha;
  Vec h = -(embedding_ * alpha);
  h[0] += 1.0;
  return h;
}

Vec HopfMap::eval(const Vec& alpha, const Vec& x) const {
  if (x.size() != n())
    throw DimensionMismatch("x has " + std::to_string(x.size()) +
                            " components, expected " + std::to_string(n()));
  const Vec a = hat(alpha);
  const double q = a.squaredNorm();
  if (q < epsilon_) throw SingularAt(std::vector<double>(alpha.data(), alpha.data() + alpha.size()), q);
  if (conformal_inverse_) {
    // phi(a)^-1 = phi(conj a) / q(a) with conj negating generator components.
    Vec conj = -a;
    conj[0] = a[0];
    return rep_.apply(conj, x) / q;
  }
  return rep_.operator_of(a).partialPivLu().solve(x);
}

Vec HopfMap::eval(const Vec& y) const {
  if (y.size() != domain_dim())
    throw DimensionMismatch("domain point has " + std::to_string(y.size()) +
                            " components, expected " + std::to_string(domain_dim()));
  return eval(y.head(alpha_dim()), y.tail(n()));
}

std::vector<double> chebyshev_nodes(int count) {
  if (count < 1) throw InvalidArgument("need at least one sample");
  std::vector<double> t(count);
  for (int k = 0; k < count; ++k)
    t[k] = -std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * count));
  return t;
}

std::vector<double> LineGerm::parameters() const {
  auto t = chebyshev_nodes(samples);
  for (double& v : t) v *= step;
  return t;
}

std::vector<Vec> line_image(const HopfMap& map, const LineGerm& line) {
  if (line.direction.size() != map.domain_dim())
    throw DimensionMismatch("line direction does not match the map's domain");
  if (line.direction.norm() == 0.0) throw InvalidArgument("line direction must be nonzero");
  Vec base = Vec::Zero(map.domain_dim());
  if (line.offset) {
    if (line.offset->size() != map.domain_dim())
      throw DimensionMismatch("line offset does not match the map's domain");
    base = *line.offset;
  } else if (map.form() == HopfForm::global) {
    base[0] = 1.0;
  }
  std::vector<Vec> out;
  out.reserve(line.samples);
  for (double t : line.parameters()) out.push_back(map.eval(Vec(base + t * line.direction)));
  return out;
}

}  // namespace clifflines
