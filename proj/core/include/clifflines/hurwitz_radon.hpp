#pragma once

#include "clifflines/linalg.hpp"
#include "clifflines/representation.hpp"

#include <optional>

namespace clifflines {

/// Gamma(alpha, x) = sum_i alpha_i G_i x.
struct BilinearMap {
  int r = 0;
  int n = 0;
  MatList slices;

  static BilinearMap from_slices(MatList slices);

  /// sum_i alpha_i G_i.
  Mat operator_at(const Vec& alpha) const;
  Vec operator()(const Vec& alpha, const Vec& x) const { return operator_at(alpha) * x; }
};

inline constexpr double kDefaultConformalTolerance = 1e-9;

/// Outcome of testing A for a complex multiplication: A + A^T = 2p Id and
/// A^T A = q Id. `structure` is the compatible complex structure
/// (A - p Id)/sqrt(q - p^2); absent in the real case q = p^2.
struct ComplexMultiplicationReport {
  bool is_cm = false;
  double p = 0.0;
  double q = 0.0;
  std::optional<Mat> structure;
  double symmetric_residual = 0.0;  // |A + A^T - 2p Id|_max
  double conformal_residual = 0.0;  // |A^T A - q Id|_max
  bool cauchy_schwarz_ok = true;    // q >= p^2 (within tol)
};

ComplexMultiplicationReport detect_complex_multiplication(
    const Mat& a, double tol = kDefaultConformalTolerance);

/// Gram matrix of the Euclidean form q on alpha-space, read off the
/// polarization G_i^T G_j + G_j^T G_i = 2 q_ij Id. Throws NotConformal or
/// NotPositiveDefinite.
Mat recover_qform(const BilinearMap& gamma, double tol = kDefaultConformalTolerance);

enum class FactorMode {
  automatic,    // normal form when Id lies in span(slices), else hurwitz
  normal_form,  // adjoin Id to the slices; A0 = Id
  hurwitz,      // b0 = first q-normalized slice direction; A0 = Gamma(b0, .)
};

/// Gamma(alpha, x) = phi(embedding * alpha) * gauge * x, where phi sends
/// (c0, c1..ck) to c0 Id + sum ci E_i.
struct CliffordFactorization {
  Representation rep;
  Mat gauge;      // A0, orthogonal
  Mat embedding;  // (k+1) x r: coordinates of alpha in a q-orthonormal basis
  Mat qform;      // r x r Gram matrix of q on alpha-space
  bool normal_form = false;  // gauge == Id and coordinate 0 is the Id direction

  int k() const { return rep.r(); }
  Vec eval(const Vec& alpha, const Vec& x) const;
  Mat operator_at(const Vec& alpha) const;
};

CliffordFactorization factor(const BilinearMap& gamma,
                             double tol = kDefaultConformalTolerance,
                             FactorMode mode = FactorMode::automatic);

/// max over samples of |Gamma(alpha,x) - phi(.)A0 x| / (|alpha||x|), on the
/// slice basis plus `random_samples` seeded draws.
double reconstruction_residual(const BilinearMap& gamma, const CliffordFactorization& f,
                               int random_samples = 1000, std::uint64_t seed = 0);

}  // namespace clifflines
