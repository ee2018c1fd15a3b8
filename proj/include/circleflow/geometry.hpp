#pragma once

#include <functional>
#include <numbers>
#include <vector>

namespace circleflow {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angular tolerance below which two atoms are considered the same point.
// Atoms that coincide analytically are computed from identical path values and
// differ only by floating-point noise far below this.
inline constexpr double kMergeTol = 1e-9;

// Allowed drift of total mass away from 1.
inline constexpr double kMassTol = 1e-12;

// The oriented circle graph: vertices at angle 0 and angle l, the short edge
// spanning (0, l) and the long edge the rest. l must lie in (0, pi].
struct GraphParams {
  double l;
  explicit GraphParams(double edge_angle);
};

// Point on the unit circle, stored as an angle in [0, 2pi).
struct CirclePoint {
  double theta = 0.0;

  static CirclePoint from_angle(double raw);
};

// Shortest angular distance on the circle.
double circular_distance(const CirclePoint& a, const CirclePoint& b);

// Edge orientation: +1 on the closed arc [0, l], -1 on the open arc (l, 2pi).
int epsilon_of(const CirclePoint& z, const GraphParams& g);

struct Atom {
  CirclePoint point;
  double weight = 0.0;
};

// Finite weighted atom list on the circle in canonical form: atoms sorted by
// angle, no two atoms within kMergeTol of each other (circularly), weights
// nonnegative and summing to 1 within kMassTol.
class AtomicMeasure {
 public:
  static AtomicMeasure dirac(CirclePoint z);

  // Canonicalizes (merge + sort) and validates total mass. Atoms with zero
  // weight are dropped.
  static AtomicMeasure from_atoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  double mass() const;

  double integrate(const std::function<double(const CirclePoint&)>& f) const;

 private:
  AtomicMeasure() = default;
  std::vector<Atom> atoms_;
};

// Distance on probability measures evaluated with the trigonometric test
// family f_1 = 1, f_{2k} = cos(k theta), f_{2k+1} = sin(k theta), k = 1..k_test,
// weighted 2^{-n}:  d(mu,nu) = sqrt(sum_n 2^{-n} (mu f_n - nu f_n)^2).
double measure_distance(const AtomicMeasure& mu, const AtomicMeasure& nu,
                        int k_test = 16);

// sum_i w_i * kernel(x_i), canonicalized. Throws if any kernel output has
// total mass off by more than 1e-9.
AtomicMeasure pushforward(
    const AtomicMeasure& mu,
    const std::function<AtomicMeasure(const CirclePoint&)>& kernel);

// True when the two measures carry the same atoms up to `atol` in angle and
// weight. Used by tests and verification drivers.
bool measures_match(const AtomicMeasure& a, const AtomicMeasure& b,
                    double angle_tol, double weight_tol);

}  // namespace circleflow
