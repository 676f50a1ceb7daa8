#pragma once

#include "clifflines/hopf.hpp"
#include "clifflines/jet.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace clifflines {

/// Polynomial map R^{r+n} -> R^n as a sum of monomials y^e * c.
struct PolynomialMap {
  struct Term {
    std::vector<int> exponents;  // length r + n
    Vec coeffs;                  // length n
  };
  int r = 0;
  int n = 0;
  std::vector<Term> terms;

  Vec operator()(const Vec& y) const;
};

LocalProjection as_local_projection(PolynomialMap poly);

/// Phi(y) = F(nu(y) y) with nu(y) = 1 + nu_coeff * |y|^2 and F the local
/// Hopf form of `rep`. nu_coeff = 0 gives F itself.
LocalProjection hopf_local_projection(const Representation& rep, double nu_coeff = 0.0);

/// Child process speaking newline-delimited JSON: request {"point":[...]},
/// response {"value":[...]}. One request in flight at a time; the resulting
/// LocalProjection is flagged serial.
class ProcessMap {
 public:
  ProcessMap(std::vector<std::string> argv, int r, int n);
  ~ProcessMap();
  ProcessMap(const ProcessMap&) = delete;
  ProcessMap& operator=(const ProcessMap&) = delete;

  Vec operator()(const Vec& y);

 private:
  int r_;
  int n_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

LocalProjection as_local_projection(std::shared_ptr<ProcessMap> process, int r, int n);

/// Builds a black-box map from its JSON description:
///   {"kind": "polynomial", "r": .., "n": .., "terms": [{"exponents": [..], "coeffs": [..]}]}
///   {"kind": "hopf", "rep": <builtin name or representation JSON>, "nu": c}
///   {"kind": "process", "r": .., "n": .., "command": ["prog", "arg", ..]}
LocalProjection local_projection_from_json(const nlohmann::json& spec);

}  // namespace clifflines
