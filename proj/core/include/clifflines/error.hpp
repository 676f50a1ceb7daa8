#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace clifflines {

// Base class for every failure raised by the library. `code()` is a stable
// identifier used in structured JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ZeroQuaternion : public Error {
 public:
  explicit ZeroQuaternion(double norm);
  double norm;
};

class PoleReached : public Error {
 public:
  explicit PoleReached(double norm);
  double norm;
};

class RankMismatch : public Error {
 public:
  RankMismatch(int lhs, int rhs);
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("DimensionMismatch", what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error("InvalidArgument", what) {}
};

// A pair of generators violating the Clifford relations. i == j refers to
// the square relation E_i^2 = -I.
class RelationViolation : public Error {
 public:
  RelationViolation(int i, int j, double residual);
  int i;
  int j;
  double residual;
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name);
};

class SingularAt : public Error {
 public:
  SingularAt(std::vector<double> alpha, double q);
  std::vector<double> alpha;
  double q;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("EmptyInput", "point set is empty") {}
};

class NotACircle : public Error {
 public:
  NotACircle(double residual, double scale, const std::string& reason);
  double residual;
  double scale;
};

class NotConformal : public Error {
 public:
  NotConformal(int i, int j, double residual);
  int i;
  int j;
  double residual;
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(double min_eigenvalue);
  double min_eigenvalue;
};

class Lemma2Violation : public Error {
 public:
  Lemma2Violation(double delta_residual, double gamma_residual);
  double delta_residual;
  double gamma_residual;
};

class FactorizationFailure : public Error {
 public:
  explicit FactorizationFailure(const std::string& what)
      : Error("FactorizationFailure", what) {}
};

class ComparisonFailure : public Error {
 public:
  explicit ComparisonFailure(std::vector<std::size_t> lines);
  std::vector<std::size_t> lines;
};

class EvaluationFailure : public Error {
 public:
  explicit EvaluationFailure(const std::string& what)
      : Error("EvaluationFailure", what) {}
};

}  // namespace clifflines
