#include "circleflow/brownian_path.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace circleflow {

BrownianPath::BrownianPath(double dt, double horizon, std::uint64_t seed)
    : dt_(dt),
      horizon_(horizon),
      seed_(seed),
      engine_(seed),
      step_(0.0, std::sqrt(dt)) {
  if (!(dt > 0.0)) throw std::invalid_argument("BrownianPath: dt must be positive");
  if (!(horizon >= dt)) throw std::invalid_argument("BrownianPath: horizon must be at least dt");
  n_steps_ = static_cast<std::size_t>(std::llround(horizon / dt));
  values_.reserve(std::min<std::size_t>(n_steps_ + 1, 1 << 16));
  values_.push_back(0.0);
}

void BrownianPath::ensure(std::size_t j) const {
  while (values_.size() <= j) {
    values_.push_back(values_.back() + step_(engine_));
  }
}

double BrownianPath::value(std::size_t j) const {
  if (j > n_steps_) throw std::out_of_range("BrownianPath: index beyond horizon");
  ensure(j);
  return values_[j];
}

std::size_t ExtremumKeyHash::operator()(const ExtremumKey& k) const {
  std::uint64_t v = std::bit_cast<std::uint64_t>(k.value);
  std::uint64_t h = k.pos * 0x9e3779b97f4a7c15ULL;
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

namespace {

// Iterates the samples of a window: the anchor value first (a virtual sample
// when the anchor lies between grid points), then the raw path.
struct WindowCursor {
  const BrownianPath& path;
  Instant anchor;

  std::size_t first_raw_index() const {
    return anchor.between_samples ? anchor.index : anchor.index + 1;
  }
};

}  // namespace

double windowed_min(const BrownianPath& path, const Instant& anchor, std::size_t t) {
  double m = anchor.value;
  for (std::size_t j = WindowCursor{path, anchor}.first_raw_index(); j <= t; ++j) {
    m = std::min(m, path.value(j));
  }
  return m;
}

double windowed_max(const BrownianPath& path, const Instant& anchor, std::size_t t) {
  double m = anchor.value;
  for (std::size_t j = WindowCursor{path, anchor}.first_raw_index(); j <= t; ++j) {
    m = std::max(m, path.value(j));
  }
  return m;
}

double reflected_plus(const BrownianPath& path, GridTime s, GridTime t) {
  if (s.index > t.index) throw std::invalid_argument("reflected_plus: s > t");
  return path.value(t.index) -
         windowed_min(path, Instant::at_sample(path, s.index), t.index);
}

double reflected_minus(const BrownianPath& path, GridTime s, GridTime t) {
  if (s.index > t.index) throw std::invalid_argument("reflected_minus: s > t");
  return windowed_max(path, Instant::at_sample(path, s.index), t.index) -
         path.value(t.index);
}

ExtremumKey extremum_key(const BrownianPath& path, const Instant& anchor,
                         std::size_t t, Side side) {
  Instant best = anchor;
  for (std::size_t j = WindowCursor{path, anchor}.first_raw_index(); j <= t; ++j) {
    const double v = path.value(j);
    const bool better = (side == Side::plus) ? v < best.value : v > best.value;
    if (better) best = Instant{j, v, false};
  }
  return ExtremumKey::of(best);
}

ExtremumKey extremum_key(const BrownianPath& path, GridTime s, GridTime t, Side side) {
  if (s.index > t.index) throw std::invalid_argument("extremum_key: s > t");
  return extremum_key(path, Instant::at_sample(path, s.index), t.index, side);
}

std::optional<RangeCrossing> range_crossing(const BrownianPath& path,
                                            const Instant& anchor, double l,
                                            std::size_t max_index) {
  double lo = anchor.value;
  double hi = anchor.value;
  const std::size_t limit = std::min(max_index, path.last_index());
  for (std::size_t j = WindowCursor{path, anchor}.first_raw_index(); j <= limit; ++j) {
    const double v = path.value(j);
    if (v > hi) {
      hi = v;
      if (hi - lo >= l) {
        return RangeCrossing{Instant{j, lo + l, true}, Side::plus};
      }
    } else if (v < lo) {
      lo = v;
      if (hi - lo >= l) {
        return RangeCrossing{Instant{j, hi - l, true}, Side::minus};
      }
    }
  }
  return std::nullopt;
}

std::optional<RangeCrossing> rho(const BrownianPath& path, GridTime s, double l) {
  return range_crossing(path, Instant::at_sample(path, s.index), l,
                        path.last_index());
}

std::optional<Instant> level_crossing(const BrownianPath& path,
                                      const Instant& anchor, double a,
                                      std::size_t max_index) {
  if (a == 0.0) return anchor;
  const double level = anchor.value + a;
  const std::size_t limit = std::min(max_index, path.last_index());
  for (std::size_t j = WindowCursor{path, anchor}.first_raw_index(); j <= limit; ++j) {
    const double v = path.value(j);
    if ((a > 0.0 && v >= level) || (a < 0.0 && v <= level)) {
      return Instant{j, level, true};
    }
  }
  return std::nullopt;
}

std::optional<GridTime> level_hit(const BrownianPath& path, GridTime s, double a) {
  auto c = level_crossing(path, Instant::at_sample(path, s.index), a,
                          path.last_index());
  if (!c) return std::nullopt;
  return GridTime{c->index};
}

std::optional<Instant> reflected_crossing(const BrownianPath& path,
                                          const Instant& anchor, Side side,
                                          double level, std::size_t max_index) {
  double lo = anchor.value;
  double hi = anchor.value;
  const std::size_t limit = std::min(max_index, path.last_index());
  for (std::size_t j = WindowCursor{path, anchor}.first_raw_index(); j <= limit; ++j) {
    const double v = path.value(j);
    if (side == Side::plus) {
      if (v - lo >= level) return Instant{j, lo + level, true};
      lo = std::min(lo, v);
    } else {
      if (hi - v >= level) return Instant{j, hi - level, true};
      hi = std::max(hi, v);
    }
  }
  return std::nullopt;
}

std::optional<VertexCrossing> vertex_exit(const BrownianPath& path,
                                          const Instant& anchor, CirclePoint z,
                                          const GraphParams& g,
                                          std::size_t max_index) {
  if (z.theta == 0.0) return VertexCrossing{anchor, Vertex::one};
  if (z.theta == g.l) return VertexCrossing{anchor, Vertex::e_il};

  // Both edges transport z to a vertex at a fixed absolute level of W: an
  // up-crossing reaches e^{il}, a down-crossing reaches 1.
  double to_one, to_eil;
  if (z.theta < g.l) {
    to_one = anchor.value - z.theta;
    to_eil = anchor.value + (g.l - z.theta);
  } else {
    to_one = anchor.value + (z.theta - kTwoPi);
    to_eil = anchor.value + (z.theta - g.l);
  }
  const std::size_t limit = std::min(max_index, path.last_index());
  for (std::size_t j = WindowCursor{path, anchor}.first_raw_index(); j <= limit; ++j) {
    const double v = path.value(j);
    if (v >= to_eil) return VertexCrossing{Instant{j, to_eil, true}, Vertex::e_il};
    if (v <= to_one) return VertexCrossing{Instant{j, to_one, true}, Vertex::one};
  }
  return std::nullopt;
}

std::optional<std::pair<GridTime, Vertex>> tau(const BrownianPath& path,
                                               GridTime s, CirclePoint z,
                                               const GraphParams& g) {
  auto c = vertex_exit(path, Instant::at_sample(path, s.index), z, g,
                       path.last_index());
  if (!c) return std::nullopt;
  return std::make_pair(GridTime{c->at.index}, c->vertex);
}

double fold_reflection(double w) {
  double r = std::fmod(w, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r <= std::numbers::pi ? r : kTwoPi - r;
}

}  // namespace circleflow
