#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "circleflow/geometry.hpp"

namespace circleflow {

struct GridTime {
  std::size_t index = 0;
};

// Uniform-grid realization of the driving Brownian motion, W(0) = 0 and
// increments N(0, dt) from a seeded generator. Values are materialized
// lazily but are a pure function of (dt, horizon, seed): value(j) is
// identical whether or not earlier queries occurred.
class BrownianPath {
 public:
  BrownianPath(double dt, double horizon, std::uint64_t seed);

  double dt() const { return dt_; }
  double horizon() const { return horizon_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t last_index() const { return n_steps_; }
  double time_of(std::size_t j) const { return static_cast<double>(j) * dt_; }

  double value(std::size_t j) const;

 private:
  void ensure(std::size_t j) const;

  double dt_;
  double horizon_;
  std::uint64_t seed_;
  std::size_t n_steps_;
  mutable std::vector<double> values_;
  mutable std::mt19937_64 engine_;
  mutable std::normal_distribution<double> step_;
};

// A point on the time axis carrying the path value there. Plain grid samples
// have between_samples = false and value = path value. Crossing instants
// detected inside a step (j-1, j] carry between_samples = true and the exact
// level that was crossed; they order just before the raw sample at `index`.
struct Instant {
  std::size_t index = 0;
  double value = 0.0;
  bool between_samples = false;

  static Instant at_sample(const BrownianPath& path, std::size_t j) {
    return Instant{j, path.value(j), false};
  }
};

// Identity of the running arg-extremum of a window; the key under which
// splitting decorations are memoized. Raw samples at the same grid index are
// one key; crossing instants are distinguished by their exact value.
struct ExtremumKey {
  std::uint64_t pos = 0;  // 2*index for a between-samples instant, 2*index+1 for a raw sample
  double value = 0.0;

  static ExtremumKey of(const Instant& p) {
    return ExtremumKey{2 * static_cast<std::uint64_t>(p.index) + (p.between_samples ? 0 : 1),
                       p.value};
  }
  bool operator==(const ExtremumKey& o) const {
    return pos == o.pos && value == o.value;
  }
};

struct ExtremumKeyHash {
  std::size_t operator()(const ExtremumKey& k) const;
};

enum class Side { plus, minus };
enum class Vertex { one, e_il };

// Windowed quantities. A window starts at an anchor Instant; when the anchor
// is a crossing instant its value participates in the window as a virtual
// initial sample preceding the raw sample at the same index.
double windowed_min(const BrownianPath& path, const Instant& anchor, std::size_t t);
double windowed_max(const BrownianPath& path, const Instant& anchor, std::size_t t);

// W+ = W_t - min, W- = max - W_t over the window [anchor, t].
double reflected_plus(const BrownianPath& path, GridTime s, GridTime t);
double reflected_minus(const BrownianPath& path, GridTime s, GridTime t);

// Arg-extremum key over the window; plus side keys on the minimum, minus side
// on the maximum. Ties break to the earliest instant.
ExtremumKey extremum_key(const BrownianPath& path, const Instant& anchor,
                         std::size_t t, Side side);
ExtremumKey extremum_key(const BrownianPath& path, GridTime s, GridTime t, Side side);

struct RangeCrossing {
  Instant at;    // exact crossing value: min + l on the plus side, max - l on the minus side
  Side side;
};

// First instant at which the running range of the window reaches `l`
// (equivalently max(W+, W-) reaches l). On the plus side the crossing is a
// new maximum, so W- vanishes there, and symmetrically on the minus side.
std::optional<RangeCrossing> range_crossing(const BrownianPath& path,
                                            const Instant& anchor, double l,
                                            std::size_t max_index);

std::optional<RangeCrossing> rho(const BrownianPath& path, GridTime s, double l);

// First instant at which W - anchor.value crosses the level `a` (sign of `a`
// gives the direction). Returns the exact-crossing instant.
std::optional<Instant> level_crossing(const BrownianPath& path,
                                      const Instant& anchor, double a,
                                      std::size_t max_index);

std::optional<GridTime> level_hit(const BrownianPath& path, GridTime s, double a);

// First instant at which the reflected process of the given side reaches
// `level` within the window.
std::optional<Instant> reflected_crossing(const BrownianPath& path,
                                          const Instant& anchor, Side side,
                                          double level, std::size_t max_index);

struct VertexCrossing {
  Instant at;
  Vertex vertex;
};

// First instant at which the point z, transported along the window, reaches a
// vertex of the graph. Points already at a vertex exit immediately.
std::optional<VertexCrossing> vertex_exit(const BrownianPath& path,
                                          const Instant& anchor, CirclePoint z,
                                          const GraphParams& g,
                                          std::size_t max_index);

std::optional<std::pair<GridTime, Vertex>> tau(const BrownianPath& path,
                                               GridTime s, CirclePoint z,
                                               const GraphParams& g);

// Folds a real value into [0, pi] (two-sided reflection of a driftless path).
double fold_reflection(double w);

}  // namespace circleflow
