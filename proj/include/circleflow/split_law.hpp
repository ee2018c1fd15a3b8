#pragma once

#include <random>
#include <string>

namespace circleflow {

// Probability law on [0,1] with mean 1/2, governing how mass splits at a
// vertex. Specs: "dirac:0.5", "coalescing", "uniform", "beta:<a>",
// "two-atom:<u>". Parsing rejects anything whose mean is not 1/2.
struct SplitLaw {
  enum class Kind { dirac_half, coalescing, uniform, beta, two_atom };

  Kind kind = Kind::dirac_half;
  double param = 0.5;  // beta shape, or the two-atom location

  static SplitLaw parse(const std::string& spec);
  std::string to_string() const;

  double sample(std::mt19937_64& engine) const;

  bool is_dirac_half() const { return kind == Kind::dirac_half; }
  bool is_coalescing() const { return kind == Kind::coalescing; }

  // True when the law puts positive mass on {0, 1}; such laws can collapse a
  // split and are rejected by the support-growth detector.
  bool has_endpoint_atoms() const {
    return kind == Kind::coalescing ||
           (kind == Kind::two_atom && (param == 0.0 || param == 1.0));
  }
};

}  // namespace circleflow
