#include "circleflow/split_law.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace circleflow {

namespace {

double parse_param(const std::string& spec, std::size_t colon) {
  if (colon == std::string::npos || colon + 1 >= spec.size()) {
    throw std::invalid_argument("split law '" + spec + "': missing parameter");
  }
  std::size_t used = 0;
  double v = std::stod(spec.substr(colon + 1), &used);
  if (colon + 1 + used != spec.size()) {
    throw std::invalid_argument("split law '" + spec + "': trailing characters");
  }
  return v;
}

}  // namespace

SplitLaw SplitLaw::parse(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  SplitLaw law;
  if (name == "dirac") {
    double v = parse_param(spec, colon);
    if (v != 0.5) {
      throw std::invalid_argument("split law '" + spec + "': mean must be 1/2 (only dirac:0.5 is admissible)");
    }
    law.kind = Kind::dirac_half;
    law.param = 0.5;
  } else if (name == "coalescing") {
    if (colon != std::string::npos) {
      throw std::invalid_argument("split law 'coalescing' takes no parameter");
    }
    law.kind = Kind::coalescing;
  } else if (name == "uniform") {
    if (colon != std::string::npos) {
      throw std::invalid_argument("split law 'uniform' takes no parameter");
    }
    law.kind = Kind::uniform;
  } else if (name == "beta") {
    double a = parse_param(spec, colon);
    if (!(a > 0.0)) {
      throw std::invalid_argument("split law '" + spec + "': shape must be positive");
    }
    law.kind = Kind::beta;
    law.param = a;  // Beta(a, a) is symmetric, mean 1/2
  } else if (name == "two-atom") {
    double u = parse_param(spec, colon);
    if (!(u >= 0.0 && u <= 1.0)) {
      throw std::invalid_argument("split law '" + spec + "': atom must lie in [0,1]");
    }
    law.kind = Kind::two_atom;
    law.param = u;  // (delta_u + delta_{1-u})/2, mean 1/2
  } else {
    throw std::invalid_argument("unknown split law '" + spec + "'");
  }
  return law;
}

std::string SplitLaw::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::dirac_half: return "dirac:0.5";
    case Kind::coalescing: return "coalescing";
    case Kind::uniform: return "uniform";
    case Kind::beta: os << "beta:" << param; return os.str();
    case Kind::two_atom: os << "two-atom:" << param; return os.str();
  }
  return {};
}

double SplitLaw::sample(std::mt19937_64& engine) const {
  switch (kind) {
    case Kind::dirac_half:
      return 0.5;
    case Kind::coalescing:
      return (engine() & 1ULL) ? 1.0 : 0.0;
    case Kind::uniform: {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      return u(engine);
    }
    case Kind::beta: {
      std::gamma_distribution<double> g(param, 1.0);
      const double x = g(engine);
      const double y = g(engine);
      return x + y > 0.0 ? x / (x + y) : 0.5;
    }
    case Kind::two_atom:
      return (engine() & 1ULL) ? param : 1.0 - param;
  }
  return 0.5;
}

}  // namespace circleflow
