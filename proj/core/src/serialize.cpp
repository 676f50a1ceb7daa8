#include "clifflines/serialize.hpp"

#include "clifflines/error.hpp"

namespace clifflines {

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw InvalidArgument("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidArgument("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row[c].get<double>();
  }
  return m;
}

json vector_to_json(const Vec& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

Vec vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("vector must be an array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidArgument("quaternion must be [w, x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json to_json(const CliffordElement& e) {
  json coeffs = json::object();
  for (BladeMask m = 0; m < e.size(); ++m)
    if (e[m] != 0.0) coeffs[blade_name(m)] = e[m];
  return {{"r", e.r()}, {"coeffs", coeffs}};
}

CliffordElement clifford_from_json(const json& j) {
  CliffordElement e(j.at("r").get<int>());
  for (const auto& [name, value] : j.at("coeffs").items()) {
    const BladeMask mask = parse_blade_name(name);
    if (mask >= e.size()) throw InvalidArgument("blade " + name + " exceeds r");
    e[mask] = value.get<double>();
  }
  return e;
}

json to_json(const AlgebraDescriptor& d) {
  return {{"r", d.r},
          {"base", field_symbol(d.base)},
          {"matrix_size", d.matrix_size},
          {"summands", d.summands},
          {"real_dimension", d.real_dimension()},
          {"algebra", describe(d)},
          {"min_rep_dim", d.matrix_size * field_dimension(d.base)}};
}

json to_json(const Representation& rep) {
  json gens = json::array();
  for (const Mat& g : rep.generators()) gens.push_back(matrix_to_json(g));
  return {{"r", rep.r()}, {"n", rep.n()}, {"generators", gens}, {"metric", matrix_to_json(rep.metric())}};
}

Representation representation_from_json(const json& j) {
  MatList gens;
  for (const json& g : j.at("generators")) gens.push_back(matrix_from_json(g));
  if (j.contains("r") && j.at("r").get<int>() != static_cast<int>(gens.size()))
    throw DimensionMismatch("\"r\" does not match the number of generators");
  if (gens.empty()) return Representation::trivial(j.at("n").get<int>());
  if (j.contains("n") && j.at("n").get<int>() != gens[0].rows())
    throw DimensionMismatch("\"n\" does not match the generator size");
  if (j.contains("metric") && !j.at("metric").is_null())
    return Representation::with_metric(std::move(gens), matrix_from_json(j.at("metric")));
  return Representation::from_generators(std::move(gens));
}

json to_json(const BilinearMap& g) {
  json slices = json::array();
  for (const Mat& s : g.slices) slices.push_back(matrix_to_json(s));
  return {{"r", g.r}, {"n", g.n}, {"slices", slices}};
}

BilinearMap bilinear_from_json(const json& j) {
  MatList slices;
  for (const json& s : j.at("slices")) slices.push_back(matrix_from_json(s));
  BilinearMap g = BilinearMap::from_slices(std::move(slices));
  if (j.contains("r") && j.at("r").get<int>() != g.r)
    throw DimensionMismatch("\"r\" does not match the number of slices");
  if (j.contains("n") && j.at("n").get<int>() != g.n)
    throw DimensionMismatch("\"n\" does not match the slice size");
  return g;
}

json to_json(const CircleClassification& c) {
  json out = {{"kind", to_string(c.kind)}, {"anchor", vector_to_json(c.anchor)}};
  if (c.kind == CircleKind::circle) {
    out["center"] = vector_to_json(c.center);
    out["radius"] = c.radius;
    out["plane"] = json::array({vector_to_json(c.plane.col(0)), vector_to_json(c.plane.col(1))});
  } else if (c.kind == CircleKind::line) {
    out["direction"] = vector_to_json(c.plane.col(0));
  }
  out["residual"] = c.residual;
  out["scale"] = c.scale;
  return out;
}

json to_json(const ComplexMultiplicationReport& r) {
  json out = {{"is_cm", r.is_cm},
              {"p", r.p},
              {"q", r.q},
              {"symmetric_residual", r.symmetric_residual},
              {"conformal_residual", r.conformal_residual},
              {"cauchy_schwarz_ok", r.cauchy_schwarz_ok}};
  out["structure"] = r.structure ? matrix_to_json(*r.structure) : json(nullptr);
  return out;
}

json to_json(const CliffordFactorization& f) {
  json out = to_json(f.rep);
  out["gauge"] = matrix_to_json(f.gauge);
  out["embedding"] = matrix_to_json(f.embedding);
  out["qform"] = matrix_to_json(f.qform);
  out["normal_form"] = f.normal_form;
  return out;
}

json to_json(const DivisibilityReport& r) {
  return {{"passed", r.passed()},
          {"delta_ok", r.delta_ok},
          {"delta_residual", r.delta_residual},
          {"delta_bound", r.delta_bound},
          {"gamma_ok", r.gamma_ok},
          {"symmetric_residual", r.symmetric_residual},
          {"conformal_residual", r.conformal_residual},
          {"gamma_bound", r.gamma_bound}};
}

json to_json(const JetData& jet) {
  json delta = json::array();
  for (const Mat& d : jet.delta) delta.push_back(matrix_to_json(d));
  return {{"gamma", to_json(jet.gamma)},
          {"delta", delta},
          {"step", jet.step},
          {"richardson", jet.richardson}};
}

json error_to_json(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e))
    return {{"error", err->code()}, {"message", err->what()}};
  return {{"error", "Exception"}, {"message", e.what()}};
}

}  // namespace clifflines
