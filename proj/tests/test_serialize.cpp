#include "doctest.h"

#include "clifflines/error.hpp"
#include "clifflines/local_map.hpp"
#include "clifflines/serialize.hpp"

using namespace clifflines;

TEST_CASE("matrices are row-major nested arrays") {
  Mat m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  const json j = matrix_to_json(m);
  CHECK(j == json::parse("[[1,2,3],[4,5,6]]"));
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), InvalidArgument);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), InvalidArgument);
}

TEST_CASE("quaternions and Clifford elements round-trip") {
  const Quaternion q{1, -2, 3.5, 0};
  CHECK(quaternion_from_json(to_json(q)) == q);
  CHECK_THROWS_AS(quaternion_from_json(json::parse("[1,2,3]")), InvalidArgument);

  CliffordElement e = CliffordElement::scalar(3, 2.0);
  e += CliffordElement::blade(3, 0b101, -1.5);
  const json j = to_json(e);
  CHECK(j.at("coeffs").size() == 2);
  CHECK(j.at("coeffs").at("e1e3").get<double>() == -1.5);
  CHECK(clifford_from_json(j) == e);
}

TEST_CASE("representations round-trip with their metric") {
  for (const auto& name : builtin_names()) {
    const Representation rep = builtin(name);
    const Representation back = representation_from_json(to_json(rep));
    CHECK(back.r() == rep.r());
    CHECK(back.n() == rep.n());
    for (int i = 0; i < rep.r(); ++i) CHECK(back.generator(i) == rep.generator(i));
    CHECK(back.metric() == rep.metric());
  }
}

TEST_CASE("representation JSON with broken relations is rejected") {
  const json j = {{"generators", {{{1.0, 0.0}, {0.0, 1.0}}}}};
  CHECK_THROWS_AS(representation_from_json(j), RelationViolation);
}

TEST_CASE("bilinear maps round-trip") {
  const BilinearMap g = BilinearMap::from_slices(builtin("cliff2_r4").generators());
  const BilinearMap back = bilinear_from_json(to_json(g));
  REQUIRE(back.r == g.r);
  for (int i = 0; i < g.r; ++i) CHECK(back.slices[i] == g.slices[i]);
}

TEST_CASE("errors render as structured records") {
  const json j = error_to_json(UnknownName("nope"));
  CHECK(j.at("error") == "UnknownName");
  CHECK(j.at("message").get<std::string>().find("nope") != std::string::npos);
}

TEST_CASE("polynomial maps from JSON evaluate their monomials") {
  // Phi(a, x1, x2) = (x1 + 3 a^2 x2, x2)
  const json spec = json::parse(R"({"kind":"polynomial","r":1,"n":2,"terms":[
      {"exponents":[0,1,0],"coeffs":[1,0]},
      {"exponents":[2,0,1],"coeffs":[3,0]},
      {"exponents":[0,0,1],"coeffs":[0,1]}]})");
  const LocalProjection phi = local_projection_from_json(spec);
  CHECK(phi.r == 1);
  CHECK(phi.n == 2);
  Vec a(1), x(2);
  a << 2.0;
  x << 1.0, -1.0;
  const Vec v = phi(a, x);
  CHECK(v[0] == doctest::Approx(1.0 - 12.0));
  CHECK(v[1] == doctest::Approx(-1.0));

  const json bad = json::parse(R"({"kind":"polynomial","r":1,"n":2,"terms":[
      {"exponents":[0,1],"coeffs":[1,0]}]})");
  CHECK_THROWS_AS(local_projection_from_json(bad), DimensionMismatch);
  CHECK_THROWS_AS(local_projection_from_json(json{{"kind", "mystery"}}), InvalidArgument);
}

TEST_CASE("hopf maps from JSON match the local Hopf form") {
  const LocalProjection phi = local_projection_from_json(json{{"kind", "hopf"}, {"rep", "cliff1_r2"}});
  const HopfMap f(builtin("cliff1_r2"), HopfForm::local);
  Vec a(1), x(2);
  a << 0.3;
  x << 0.5, -0.25;
  CHECK((phi(a, x) - f.eval(a, x)).norm() < 1e-15);
}

TEST_CASE("process maps speak newline-delimited JSON") {
  const json spec = {{"kind", "process"}, {"r", 1}, {"n", 2}, {"command", {CLIFFLINES_ROTATION_CHILD}}};
  const LocalProjection phi = local_projection_from_json(spec);
  CHECK_FALSE(phi.thread_safe);
  const HopfMap f(builtin("cliff1_r2"), HopfForm::local);
  for (double t : {-0.5, 0.0, 0.2, 1.0}) {
    Vec a(1), x(2);
    a << t;
    x << 1.0 - t, 2.0 * t;
    CHECK((phi(a, x) - f.eval(a, x)).norm() < 1e-12);
  }
}

TEST_CASE("process maps report malformed responses") {
  const json spec = {{"kind", "process"}, {"r", 1}, {"n", 2}, {"command", {CLIFFLINES_ROTATION_CHILD, "garbage"}}};
  const LocalProjection phi = local_projection_from_json(spec);
  CHECK_THROWS_AS(phi(Vec::Zero(1), Vec::Ones(2)), EvaluationFailure);
}

TEST_CASE("process maps report a missing executable") {
  const json spec = {{"kind", "process"}, {"r", 1}, {"n", 2}, {"command", {"/nonexistent/map-binary"}}};
  CHECK_THROWS_AS(local_projection_from_json(spec)(Vec::Zero(1), Vec::Ones(2)), EvaluationFailure);
}
