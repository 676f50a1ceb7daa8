#include "clifflines/error.hpp"

#include <sstream>

namespace clifflines {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

ZeroQuaternion::ZeroQuaternion(double n)
    : Error("ZeroQuaternion", "quaternion norm " + fmt(n) + " is below epsilon"), norm(n) {}

PoleReached::PoleReached(double n)
    : Error("PoleReached", "denominator norm " + fmt(n) + " is below epsilon"), norm(n) {}

RankMismatch::RankMismatch(int lhs, int rhs)
    : Error("RankMismatch", "Cliff(" + std::to_string(lhs) + ") and Cliff(" +
                                std::to_string(rhs) + ") elements cannot be combined") {}

RelationViolation::RelationViolation(int i_, int j_, double res)
    : Error("RelationViolation",
            (i_ == j_ ? "E" + std::to_string(i_ + 1) + "^2 + I"
                      : "E" + std::to_string(i_ + 1) + "E" + std::to_string(j_ + 1) + " + E" +
                            std::to_string(j_ + 1) + "E" + std::to_string(i_ + 1)) +
                " has residual " + fmt(res)),
      i(i_),
      j(j_),
      residual(res) {}

UnknownName::UnknownName(const std::string& name)
    : Error("UnknownName", "unknown representation '" + name + "'") {}

SingularAt::SingularAt(std::vector<double> a, double q_)
    : Error("SingularAt", "q(alpha) = " + fmt(q_) + " is below epsilon"), alpha(std::move(a)), q(q_) {}

NotACircle::NotACircle(double res, double sc, const std::string& reason)
    : Error("NotACircle", reason + " (residual " + fmt(res) + ", scale " + fmt(sc) + ")"),
      residual(res),
      scale(sc) {}

NotConformal::NotConformal(int i_, int j_, double res)
    : Error("NotConformal", "polarized product of slices " + std::to_string(i_) + " and " +
                                std::to_string(j_) + " is not scalar (residual " + fmt(res) + ")"),
      i(i_),
      j(j_),
      residual(res) {}

NotPositiveDefinite::NotPositiveDefinite(double m)
    : Error("NotPositiveDefinite", "quadratic form is not positive definite (min eigenvalue " +
                                       fmt(m) + ")"),
      min_eigenvalue(m) {}

Lemma2Violation::Lemma2Violation(double d, double g)
    : Error("Lemma2Violation", "2-jet fails the divisibility conditions (delta residual " + fmt(d) +
                                   ", gamma residual " + fmt(g) + ")"),
      delta_residual(d),
      gamma_residual(g) {}

namespace {
std::string list_lines(const std::vector<std::size_t>& lines) {
  std::string s;
  for (std::size_t k = 0; k < lines.size() && k < 20; ++k) s += (k ? ", " : "") + std::to_string(lines[k]);
  if (lines.size() > 20) s += ", ...";
  return s;
}
}  // namespace

ComparisonFailure::ComparisonFailure(std::vector<std::size_t> l)
    : Error("ComparisonFailure", std::to_string(l.size()) + " line germ(s) disagree: " + list_lines(l)),
      lines(std::move(l)) {}

}  // namespace clifflines
