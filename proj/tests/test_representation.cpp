#include "doctest.h"

#include "clifflines/error.hpp"
#include "clifflines/quaternion.hpp"
#include "clifflines/random.hpp"
#include "clifflines/representation.hpp"

#include <Eigen/Eigenvalues>

using namespace clifflines;

namespace {

const Mat4 Li = left_mul_matrix(Quaternion::i());
const Mat4 Lj = left_mul_matrix(Quaternion::j());
const Mat4 Lk = left_mul_matrix(Quaternion::k());

}  // namespace

TEST_CASE("from_generators accepts valid generator sets") {
  Mat j(2, 2);
  j << 0, -1, 1, 0;
  const auto c1 = Representation::from_generators({j});
  CHECK(c1.r() == 1);
  CHECK(c1.n() == 2);
  CHECK(c1.metric().isIdentity(1e-15));

  const auto c2 = Representation::from_generators({Li, Lj});
  CHECK(c2.r() == 2);
  CHECK(c2.n() == 4);
}

TEST_CASE("from_generators rejects broken relations, naming the pair") {
  const Mat4 rj = right_mul_matrix(Quaternion::j());
  try {
    Representation::from_generators({Li, rj});
    FAIL("expected RelationViolation");
  } catch (const RelationViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    // L_i R_j + R_j L_i = 2 L_i R_j, whose entries are +-2
    CHECK(e.residual == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(Representation::from_generators({Mat::Identity(2, 2)}), RelationViolation);
  CHECK_THROWS_AS(Representation::from_generators({Li, Mat::Zero(2, 2)}), DimensionMismatch);
  CHECK_THROWS_AS(Representation::from_generators({Mat::Zero(2, 3)}), DimensionMismatch);
  CHECK_THROWS_AS(Representation::from_generators({}), InvalidArgument);
}

TEST_CASE("dirac_metric") {
  SUBCASE("orthogonal generators give the identity") {
    const MatList gens = {Li, Lj, Lk};
    CHECK((dirac_metric(gens) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("conjugated generators become orthogonal for the averaged metric") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
      const Mat s = rng.normal_mat(4, 4) + 3.0 * Mat::Identity(4, 4);
      const Mat sinv = s.inverse();
      const MatList gens = {sinv * Li * s, sinv * Lj * s, sinv * Lk * s};
      const Mat m = dirac_metric(gens);
      CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(Eigen::SelfAdjointEigenSolver<Mat>(m).eigenvalues().minCoeff() > 0);
      const double scale = m.cwiseAbs().maxCoeff();
      for (const Mat& e : gens) CHECK((e.transpose() * m * e - m).cwiseAbs().maxCoeff() < 1e-10 * scale);

      const auto rep = Representation::from_generators(gens, 1e-9);
      for (int k = 0; k < 50; ++k) {
        const Vec alpha = rng.normal_vec(4);
        const Vec x = rng.normal_vec(4);
        CHECK(rep.norm(rep.apply(alpha, x)) == doctest::Approx(alpha.norm() * rep.norm(x)).epsilon(1e-9));
      }

      const auto ortho = rep.orthonormalized();
      CHECK(ortho.metric_is_identity());
      for (const Mat& e : ortho.generators()) CHECK((e.transpose() * e - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9);
      // the frame intertwines the two versions
      for (int i = 0; i < 3; ++i)
        CHECK((rep.generator(i) * ortho.frame() - ortho.frame() * ortho.generator(i)).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  SUBCASE("Example 2 generators give the identity") {
    const auto rep = builtin("cliff7_r8_left");
    CHECK((rep.metric() - Mat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("with_metric validates orthogonality") {
  const Mat m = 2.0 * Mat::Identity(4, 4);
  CHECK_NOTHROW(Representation::with_metric({Li}, m));
  Mat bad = Mat::Identity(4, 4);
  bad(0, 0) = 3.0;
  CHECK_THROWS_AS(Representation::with_metric({Li}, bad), InvalidArgument);
  CHECK_THROWS_AS(Representation::with_metric({Li}, -Mat::Identity(4, 4)), NotPositiveDefinite);
}

TEST_CASE("builtins") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto rep = builtin(name);
    const auto report = check_relations(rep.generators());
    CHECK(report.max_residual < 1e-10);
    CHECK(rep.metric_is_identity(1e-12));
  }
  CHECK_THROWS_AS(builtin("cliff4_r8"), UnknownName);

  const auto plus = builtin("cliff3_r4_plus");
  CHECK(plus.generator(0) == Mat(Li));
  CHECK(plus.generator(1) == Mat(Lj));
  CHECK(plus.generator(2) == Mat(Lk));

  // (a, b) = (i, 0) acts as block-diag(L_i, L_conj(i)) = block-diag(L_i, -L_i)
  Mat want = Mat::Zero(8, 8);
  want.topLeftCorner(4, 4) = Li;
  want.bottomRightCorner(4, 4) = -Li;
  CHECK(builtin("cliff7_r8_left").generator(0) == want);
  CHECK(builtin("cliff7_r8_left").r() == 7);
  CHECK(builtin("cliff7_r8_right").r() == 7);
  CHECK(builtin("cliff7_r8_right").generator(0).topLeftCorner(4, 4) == Mat(right_mul_matrix(Quaternion::i())));
}

TEST_CASE("the two Cliff(3) summands are inequivalent") {
  auto triple_trace = [](const Representation& rep) {
    return (rep.generator(0) * rep.generator(1) * rep.generator(2)).trace();
  };
  CHECK(triple_trace(builtin("cliff3_r4_plus")) == doctest::Approx(-4.0));
  CHECK(triple_trace(builtin("cliff3_r4_minus")) == doctest::Approx(4.0));
}

TEST_CASE("apply") {
  const auto c1 = builtin("cliff1_r2");
  CHECK(c1.apply(Vec::Unit(2, 0), Vec::Unit(2, 1)) == Vec::Unit(2, 1));
  CHECK((c1.apply(Vec::Unit(2, 1), Vec::Unit(2, 0)) - Vec::Unit(2, 1)).norm() == 0.0);
  CHECK_THROWS_AS(c1.apply(Vec::Zero(3), Vec::Zero(2)), DimensionMismatch);
  CHECK_THROWS_AS(c1.apply(Vec::Zero(2), Vec::Zero(3)), DimensionMismatch);

  Rng rng(32);
  for (const auto& name : builtin_names()) {
    const auto rep = builtin(name);
    for (int t = 0; t < 1000; ++t) {
      const Vec alpha = rng.normal_vec(rep.r() + 1);
      const Vec x = rng.normal_vec(rep.n());
      const double want = alpha.norm() * x.norm();
      CHECK(std::abs(rep.apply(alpha, x).norm() - want) <= 1e-9 * want);
    }
  }
}
