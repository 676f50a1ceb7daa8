#include "doctest.h"

#include "clifflines/error.hpp"
#include "clifflines/hurwitz_radon.hpp"
#include "clifflines/quaternion.hpp"
#include "clifflines/random.hpp"

#include <Eigen/Eigenvalues>

using namespace clifflines;

namespace {

const Mat Li = left_mul_matrix(Quaternion::i());
const Mat Lj = left_mul_matrix(Quaternion::j());
const Mat Lk = left_mul_matrix(Quaternion::k());
const Mat Id4 = Mat::Identity(4, 4);

double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("detect_complex_multiplication") {
  SUBCASE("real multiplication") {
    const auto r = detect_complex_multiplication(3.0 * Mat::Identity(3, 3));
    CHECK(r.is_cm);
    CHECK(r.p == doctest::Approx(3.0));
    CHECK(r.q == doctest::Approx(9.0));
    CHECK_FALSE(r.structure.has_value());
  }
  SUBCASE("2 + 3i") {
    Mat a(2, 2);
    a << 2, -3, 3, 2;
    const auto r = detect_complex_multiplication(a);
    CHECK(r.is_cm);
    CHECK(r.p == doctest::Approx(2.0));
    CHECK(r.q == doctest::Approx(13.0));
    REQUIRE(r.structure.has_value());
    Mat quarter(2, 2);
    quarter << 0, -1, 1, 0;
    CHECK(max_diff(*r.structure, quarter) < 1e-15);
  }
  SUBCASE("non-conformal") {
    Mat a = Mat::Zero(2, 2);
    a.diagonal() << 1, 2;
    const auto r = detect_complex_multiplication(a);
    CHECK_FALSE(r.is_cm);
    CHECK(r.conformal_residual > 1.0);
  }
  SUBCASE("structures are compatible complex structures") {
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
      const Vec alpha = rng.normal_vec(4);
      const Mat a = alpha[0] * Id4 + alpha[1] * Li + alpha[2] * Lj + alpha[3] * Lk;
      const auto r = detect_complex_multiplication(a);
      REQUIRE(r.is_cm);
      CHECK(r.p == doctest::Approx(alpha[0]).epsilon(1e-12));
      CHECK(r.q == doctest::Approx(alpha.squaredNorm()).epsilon(1e-12));
      REQUIRE(r.structure);
      const Mat& s = *r.structure;
      CHECK(max_diff(s.transpose(), -s) < 1e-10);
      CHECK(max_diff(s.transpose() * s, Id4) < 1e-10);
      CHECK(max_diff(s * s, -Id4) < 1e-10);
      CHECK(max_diff(a, r.p * Id4 + std::sqrt(r.q - r.p * r.p) * s) < 1e-10);
    }
  }
  CHECK_THROWS_AS(detect_complex_multiplication(Mat::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("recover_qform") {
  CHECK(max_diff(recover_qform(BilinearMap::from_slices({Li, Lj, Lk})), Mat::Identity(3, 3)) < 1e-15);

  Mat want(2, 2);
  want << 4, 2, 2, 2;
  CHECK(max_diff(recover_qform(BilinearMap::from_slices({2.0 * Li, Mat(Li + Lj)})), want) < 1e-14);

  Mat diag = Mat::Zero(4, 4);
  diag.diagonal() << 1, 2, 3, 4;
  try {
    recover_qform(BilinearMap::from_slices({Id4, diag}));
    FAIL("expected NotConformal");
  } catch (const NotConformal& e) {
    CHECK(e.residual > 0.5);
  }

  CHECK_THROWS_AS(recover_qform(BilinearMap::from_slices({Li, Mat::Zero(4, 4)})), NotPositiveDefinite);
  CHECK_THROWS_AS(recover_qform(BilinearMap::from_slices({Li, Li})), NotPositiveDefinite);
  CHECK_THROWS_AS(BilinearMap::from_slices({Li, Mat::Zero(2, 2)}), DimensionMismatch);
}

TEST_CASE("factor: quaternion left multiplication is already in normal form") {
  const auto g = BilinearMap::from_slices({Id4, Li, Lj, Lk});
  const auto f = factor(g);
  CHECK(f.normal_form);
  CHECK(f.k() == 3);
  CHECK(max_diff(f.gauge, Id4) < 1e-15);
  CHECK(max_diff(f.rep.generator(0), Li) < 1e-15);
  CHECK(max_diff(f.rep.generator(1), Lj) < 1e-15);
  CHECK(max_diff(f.rep.generator(2), Lk) < 1e-15);
  CHECK(max_diff(f.qform, Mat::Identity(4, 4)) < 1e-15);
  CHECK(reconstruction_residual(g, f) < 1e-14);
}

TEST_CASE("factor: (L_i, L_j) needs a gauge") {
  const auto g = BilinearMap::from_slices({Li, Lj});
  const auto f = factor(g);
  CHECK_FALSE(f.normal_form);
  CHECK(f.k() == 1);
  CHECK(max_diff(f.gauge, Li) < 1e-15);
  // E1 = L_j L_i^-1 = L_{j(-i)} = L_k
  CHECK(max_diff(f.rep.generator(0), Lk) < 1e-15);
  CHECK(max_diff(f.rep.generator(0) * f.rep.generator(0), -Id4) < 1e-15);
  CHECK(reconstruction_residual(g, f) < 1e-14);

  // Adjoining Id instead gives a Cliff(2) normal form.
  const auto nf = factor(g, 1e-9, FactorMode::normal_form);
  CHECK(nf.normal_form);
  CHECK(nf.k() == 2);
  CHECK(reconstruction_residual(g, nf) < 1e-14);
}

TEST_CASE("factor: conjugated slices with a random gauge") {
  Rng rng(62);
  for (int t = 0; t < 20; ++t) {
    const Mat rot = rng.orthogonal(4);
    const Mat a0 = rng.orthogonal(4);
    const auto g = BilinearMap::from_slices({Mat(rot * Li * rot.transpose() * a0), Mat(rot * Lj * rot.transpose() * a0),
                                             Mat(rot * Lk * rot.transpose() * a0)});
    const auto f = factor(g);
    CHECK(reconstruction_residual(g, f) < 1e-9);
    CHECK(max_diff(f.gauge.transpose() * f.gauge, Id4) < 1e-10);
  }
}

TEST_CASE("round trip through builtin representations") {
  Rng rng(63);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto rep = builtin(name);
    const int k = rep.r();
    const int n = rep.n();
    for (int t = 0; t < 5; ++t) {
      const Mat a0 = rng.orthogonal(n);
      const Mat basis = rng.orthogonal(k + 1);
      MatList slices;
      for (int i = 0; i <= k; ++i) slices.push_back(rep.operator_of(basis.col(i)) * a0);
      const auto g = BilinearMap::from_slices(slices);
      const auto f = factor(g);
      CHECK(reconstruction_residual(g, f) < 1e-9);
      // the slices are q-orthonormal by construction
      CHECK(max_diff(f.qform, Mat::Identity(k + 1, k + 1)) < 1e-10);
      CHECK(check_relations(f.rep.generators()).max_residual < 1e-10);

      // norm identity |Gamma(alpha, x)|^2 = q(alpha) |x|^2
      for (int s = 0; s < 50; ++s) {
        const Vec alpha = rng.normal_vec(k + 1);
        const Vec x = rng.normal_vec(n);
        const double lhs = g(alpha, x).squaredNorm();
        const double rhs = alpha.dot(f.qform * alpha) * x.squaredNorm();
        CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
      }
    }
  }
}

TEST_CASE("every operator in the span is a complex multiplication when Id is in the span") {
  Rng rng(64);
  for (const auto& name : builtin_names()) {
    const auto rep = builtin(name);
    MatList slices = {Mat::Identity(rep.n(), rep.n())};
    for (const Mat& e : rep.generators()) slices.push_back(e);
    const auto g = BilinearMap::from_slices(slices);
    REQUIRE_NOTHROW(recover_qform(g));
    for (int t = 0; t < 20; ++t) CHECK(detect_complex_multiplication(g.operator_at(rng.normal_vec(g.r))).is_cm);
  }
}

TEST_CASE("normal form rejects slices with a non-scalar symmetric part") {
  // conformal but not a complex multiplication: a reflection
  Mat refl = Id4;
  refl(0, 0) = -1;
  const auto g = BilinearMap::from_slices({refl});
  CHECK_NOTHROW(factor(g));
  CHECK_THROWS_AS(factor(g, 1e-9, FactorMode::normal_form), NotConformal);
  // a single slice factors through Cliff(0)
  const auto f = factor(g);
  CHECK(f.k() == 0);
  CHECK(reconstruction_residual(g, f) < 1e-15);
}
