#include "clifflines/local_map.hpp"

#include "clifflines/error.hpp"
#include "clifflines/serialize.hpp"

#include <cerrno>
#include <cmath>
#include <csignal>
#include <cstring>
#include <mutex>

#include <sys/wait.h>
#include <unistd.h>

namespace clifflines {

Vec PolynomialMap::operator()(const Vec& y) const {
  if (y.size() != r + n) throw DimensionMismatch("polynomial map evaluated at a point of the wrong dimension");
  Vec out = Vec::Zero(n);
  for (const Term& t : terms) {
    double mono = 1.0;
    for (std::size_t k = 0; k < t.exponents.size(); ++k)
      if (t.exponents[k] != 0) mono *= std::pow(y[static_cast<Eigen::Index>(k)], t.exponents[k]);
    out += mono * t.coeffs;
  }
  return out;
}

LocalProjection as_local_projection(PolynomialMap poly) {
  const int r = poly.r;
  const int n = poly.n;
  auto shared = std::make_shared<const PolynomialMap>(std::move(poly));
  return {r, n,
          [shared, r, n](const Vec& a, const Vec& x) {
            Vec y(r + n);
            y << a, x;
            return (*shared)(y);
          },
          true};
}

LocalProjection hopf_local_projection(const Representation& rep, double nu_coeff) {
  auto map = std::make_shared<const HopfMap>(
      rep.metric_is_identity() ? rep : rep.orthonormalized(), HopfForm::local);
  const int r = rep.r();
  return {r, rep.n(),
          [map, nu_coeff](const Vec& a, const Vec& x) {
            const double nu = 1.0 + nu_coeff * (a.squaredNorm() + x.squaredNorm());
            return map->eval(Vec(nu * a), Vec(nu * x));
          },
          true};
}

ProcessMap::ProcessMap(std::vector<std::string> argv, int r, int n) : r_(r), n_(n) {
  if (argv.empty()) throw InvalidArgument("process map needs a command");
  int in_pipe[2];
  int out_pipe[2];
  if (pipe(in_pipe) != 0) throw EvaluationFailure(std::string("pipe: ") + std::strerror(errno));
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw EvaluationFailure(std::string("pipe: ") + std::strerror(errno));
  }
  std::vector<char*> cargs;
  for (auto& a : argv) cargs.push_back(a.data());
  cargs.push_back(nullptr);

  pid_ = fork();
  if (pid_ < 0) throw EvaluationFailure(std::string("fork: ") + std::strerror(errno));
  if (pid_ == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execvp(cargs[0], cargs.data());
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  std::signal(SIGPIPE, SIG_IGN);
}

ProcessMap::~ProcessMap() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    waitpid(pid_, &status, 0);
  }
}

Vec ProcessMap::operator()(const Vec& y) {
  if (y.size() != r_ + n_) throw DimensionMismatch("process map evaluated at a point of the wrong dimension");
  const std::string request = json{{"point", vector_to_json(y)}}.dump() + "\n";
  std::size_t sent = 0;
  while (sent < request.size()) {
    const ssize_t w = write(to_child_, request.data() + sent, request.size() - sent);
    if (w < 0) {
      if (errno == EINTR) continue;
      throw EvaluationFailure(std::string("write to map process: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(w);
  }
  std::size_t eol;
  while ((eol = buffer_.find('\n')) == std::string::npos) {
    char chunk[4096];
    const ssize_t got = read(from_child_, chunk, sizeof chunk);
    if (got < 0 && errno == EINTR) continue;
    if (got <= 0) throw EvaluationFailure("map process closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(got));
  }
  const std::string line = buffer_.substr(0, eol);
  buffer_.erase(0, eol + 1);
  json response;
  try {
    response = json::parse(line);
  } catch (const json::exception& e) {
    throw EvaluationFailure(std::string("malformed response from map process: ") + e.what());
  }
  if (!response.contains("value")) throw EvaluationFailure("response lacks \"value\": " + line);
  Vec v = vector_from_json(response.at("value"));
  if (v.size() != n_) throw EvaluationFailure("map process returned a value of the wrong dimension");
  return v;
}

LocalProjection as_local_projection(std::shared_ptr<ProcessMap> process, int r, int n) {
  auto lock = std::make_shared<std::mutex>();
  return {r, n,
          [process, lock, r, n](const Vec& a, const Vec& x) {
            Vec y(r + n);
            y << a, x;
            std::lock_guard guard(*lock);
            return (*process)(y);
          },
          false};
}

LocalProjection local_projection_from_json(const json& spec) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "polynomial") {
    PolynomialMap poly;
    poly.r = spec.at("r").get<int>();
    poly.n = spec.at("n").get<int>();
    if (poly.r < 0 || poly.n < 1) throw InvalidArgument("polynomial map needs r >= 0 and n >= 1");
    for (const json& t : spec.at("terms")) {
      PolynomialMap::Term term;
      term.exponents = t.at("exponents").get<std::vector<int>>();
      term.coeffs = vector_from_json(t.at("coeffs"));
      if (static_cast<int>(term.exponents.size()) != poly.r + poly.n)
        throw DimensionMismatch("monomial exponent vector must have r + n entries");
      if (term.coeffs.size() != poly.n)
        throw DimensionMismatch("monomial coefficient vector must have n entries");
      for (int e : term.exponents)
        if (e < 0) throw InvalidArgument("monomial exponents must be nonnegative");
      poly.terms.push_back(std::move(term));
    }
    return as_local_projection(std::move(poly));
  }
  if (kind == "hopf") {
    const json& rep = spec.at("rep");
    const Representation r = rep.is_string() ? builtin(rep.get<std::string>())
                                             : representation_from_json(rep);
    return hopf_local_projection(r, spec.value("nu", 0.0));
  }
  if (kind == "process") {
    const int r = spec.at("r").get<int>();
    const int n = spec.at("n").get<int>();
    auto proc = std::make_shared<ProcessMap>(spec.at("command").get<std::vector<std::string>>(), r, n);
    return as_local_projection(std::move(proc), r, n);
  }
  throw InvalidArgument("unknown map kind '" + kind + "'");
}

}  // namespace clifflines
