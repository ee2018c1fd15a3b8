#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "circleflow/brownian_path.hpp"
#include "circleflow/decorations.hpp"
#include "circleflow/fourier.hpp"
#include "circleflow/split_law.hpp"

namespace circleflow {

// One realization of the coupled randomness: a driver path plus the two
// decoration stores, from which the flow map and the kernel are evaluated on
// demand. Map and kernel queries on one realization share the same splitting
// variables, so the map is a pointwise selection of the kernel.
struct FlowRealization {
  GraphParams g;
  SplitLaw m_plus;
  SplitLaw m_minus;
  BrownianPath path;
  DecorationStore dplus;
  DecorationStore dminus;

  static FlowRealization create(const GraphParams& g, const SplitLaw& m_plus,
                                const SplitLaw& m_minus, double dt,
                                double horizon, std::uint64_t master_seed,
                                std::uint64_t replicate);
};

// One interval of the chain: the crossing instant at which the running range
// of the window reached l, which side fired, and the window extrema
// (including the anchor base and the crossing value).
struct ChainAnchor {
  Instant at;
  Side side;
  double window_min = 0.0;
  double window_max = 0.0;
};

struct RhoChain {
  Instant start;
  std::vector<ChainAnchor> anchors;  // strictly increasing crossing instants
};

RhoChain rho_chain(const BrownianPath& path, GridTime s, double l,
                   std::size_t max_index, std::size_t max_anchors = SIZE_MAX);

// The kernel K_{s,t}(z), evaluated by composing one-interval kernels across
// the chain started at s. A between-samples target evaluates the state at
// that exact crossing instant (the state "at the stopping time"); a raw
// target evaluates the state at the grid sample.
AtomicMeasure kernel(const FlowRealization& fr, const Instant& s,
                     const Instant& t, CirclePoint z);
AtomicMeasure kernel(const FlowRealization& fr, GridTime s, GridTime t,
                     CirclePoint z);

// The flow map phi_{s,t}(z): the same composition with the branch at each
// split chosen by the stored eps. `resample` > 0 redraws every eps as
// Bernoulli(U) independently, keeping (W, U) fixed.
CirclePoint flow_map(const FlowRealization& fr, const Instant& s,
                     const Instant& t, CirclePoint z,
                     std::uint64_t resample = 0);
CirclePoint flow_map(const FlowRealization& fr, GridTime s, GridTime t,
                     CirclePoint z, std::uint64_t resample = 0);

// Single-interval forms, valid only up to the first range crossing of the
// window; reject targets beyond it.
AtomicMeasure kernel_one_interval(const FlowRealization& fr, GridTime s,
                                  GridTime t, CirclePoint z);
CirclePoint map_one_interval(const FlowRealization& fr, GridTime s, GridTime t,
                             CirclePoint z);

// Visits K_{s,j}(z) at every raw sample index j in [s, t].
void kernel_trajectory(
    const FlowRealization& fr, GridTime s, GridTime t, CirclePoint z,
    const std::function<void(std::size_t, const AtomicMeasure&)>& visit);

// phi_{s,j}(z) for every raw sample index j in [s, t].
std::vector<CirclePoint> map_trajectory(const FlowRealization& fr, GridTime s,
                                        GridTime t, CirclePoint z,
                                        std::uint64_t resample = 0);

// Left-point Ito residual of the kernel against a trigonometric test
// function: K_{s,t}f(z) - f(z) - sum_j K_{s,j}(eps f')(z) dW_j
//                        - (1/2) sum_j K_{s,j}(f'')(z) dt.
double sde_residual(const FlowRealization& fr, GridTime s, GridTime t,
                    CirclePoint z, const FourierFunction& f);

// Coalescing relabeling of n trajectories on a common grid: once two
// trajectories meet (within kMergeTol) the higher label follows the lowest
// original label's motion from the meeting index on.
std::vector<std::vector<CirclePoint>> coalescing_wrapper(
    const std::vector<std::vector<CirclePoint>>& motions);

}  // namespace circleflow
