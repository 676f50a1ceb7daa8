#pragma once

#include "clifflines/circle.hpp"
#include "clifflines/clifford.hpp"
#include "clifflines/hurwitz_radon.hpp"
#include "clifflines/jet.hpp"
#include "clifflines/quaternion.hpp"
#include "clifflines/representation.hpp"

#include <nlohmann/json.hpp>

namespace clifflines {

using nlohmann::json;

// Matrices are row-major nested arrays, vectors flat arrays.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);
json vector_to_json(const Vec& v);
Vec vector_from_json(const json& j);

// Quaternion <-> [w, x, y, z]
json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

// {"r": r, "coeffs": {"1": .., "e1e3": ..}}; zero coefficients are omitted.
json to_json(const CliffordElement& e);
CliffordElement clifford_from_json(const json& j);

json to_json(const AlgebraDescriptor& d);

// {"r", "n", "generators", "metric"}. Without "metric" the Dirac-averaged
// metric is attached.
json to_json(const Representation& rep);
Representation representation_from_json(const json& j);

// {"r", "n", "slices"}
json to_json(const BilinearMap& g);
BilinearMap bilinear_from_json(const json& j);

// {"kind", "center", "radius", "plane", "residual", ...}
json to_json(const CircleClassification& c);

json to_json(const ComplexMultiplicationReport& r);

// Representation JSON plus "gauge", "embedding", "qform", "normal_form".
json to_json(const CliffordFactorization& f);

json to_json(const DivisibilityReport& r);
json to_json(const JetData& jet);

// Structured error record {"error": code, "message": what}.
json error_to_json(const std::exception& e);

}  // namespace clifflines
