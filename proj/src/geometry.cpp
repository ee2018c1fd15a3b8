#include "circleflow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circleflow {

GraphParams::GraphParams(double edge_angle) : l(edge_angle) {
  if (!(l > 0.0) || !(l <= std::numbers::pi)) {
    throw std::invalid_argument("GraphParams: l must lie in (0, pi]");
  }
}

CirclePoint CirclePoint::from_angle(double raw) {
  double t = std::fmod(raw, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  if (t == 0.0) t = 0.0;  // normalizes -0.0
  return CirclePoint{t};
}

double circular_distance(const CirclePoint& a, const CirclePoint& b) {
  double d = std::fabs(a.theta - b.theta);
  return std::min(d, kTwoPi - d);
}

int epsilon_of(const CirclePoint& z, const GraphParams& g) {
  return (z.theta >= 0.0 && z.theta <= g.l) ? 1 : -1;
}

AtomicMeasure AtomicMeasure::dirac(CirclePoint z) {
  AtomicMeasure m;
  m.atoms_.push_back(Atom{z, 1.0});
  return m;
}

namespace {

// Merges a cluster of near-coincident atoms onto the angle of its heaviest
// member (earliest on ties), keeping vertex angles exact.
Atom merge_cluster(const std::vector<Atom>& cluster) {
  Atom out = cluster.front();
  for (const Atom& a : cluster) {
    if (a.weight > out.weight) out = a;
  }
  double w = 0.0;
  for (const Atom& a : cluster) w += a.weight;
  out.weight = w;
  return out;
}

}  // namespace

AtomicMeasure AtomicMeasure::from_atoms(std::vector<Atom> atoms) {
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (a.weight < 0.0) throw std::invalid_argument("AtomicMeasure: negative weight");
    total += a.weight;
  }
  if (std::fabs(total - 1.0) > kMassTol) {
    throw std::invalid_argument("AtomicMeasure: total mass differs from 1 beyond tolerance");
  }
  std::erase_if(atoms, [](const Atom& a) { return a.weight == 0.0; });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.point.theta < b.point.theta; });

  AtomicMeasure m;
  std::vector<Atom> cluster;
  for (const Atom& a : atoms) {
    if (!cluster.empty() &&
        a.point.theta - cluster.back().point.theta > kMergeTol) {
      m.atoms_.push_back(merge_cluster(cluster));
      cluster.clear();
    }
    cluster.push_back(a);
  }
  if (!cluster.empty()) m.atoms_.push_back(merge_cluster(cluster));

  // Wrap-around: first and last cluster may still be one analytic atom.
  if (m.atoms_.size() >= 2) {
    const Atom& first = m.atoms_.front();
    const Atom& last = m.atoms_.back();
    if (circular_distance(first.point, last.point) <= kMergeTol) {
      Atom merged = merge_cluster({first, last});
      m.atoms_.back() = merged;
      m.atoms_.erase(m.atoms_.begin());
      std::sort(m.atoms_.begin(), m.atoms_.end(), [](const Atom& a, const Atom& b) {
        return a.point.theta < b.point.theta;
      });
    }
  }
  return m;
}

double AtomicMeasure::mass() const {
  double w = 0.0;
  for (const Atom& a : atoms_) w += a.weight;
  return w;
}

double AtomicMeasure::integrate(
    const std::function<double(const CirclePoint&)>& f) const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.weight * f(a.point);
  return s;
}

double measure_distance(const AtomicMeasure& mu, const AtomicMeasure& nu,
                        int k_test) {
  // f_1 = 1 contributes zero for probability measures; start at k = 1.
  double sum = 0.0;
  for (int k = 1; k <= k_test; ++k) {
    double dc = 0.0;
    double ds = 0.0;
    for (const Atom& a : mu.atoms()) {
      dc += a.weight * std::cos(k * a.point.theta);
      ds += a.weight * std::sin(k * a.point.theta);
    }
    for (const Atom& a : nu.atoms()) {
      dc -= a.weight * std::cos(k * a.point.theta);
      ds -= a.weight * std::sin(k * a.point.theta);
    }
    sum += std::ldexp(dc * dc, -2 * k);      // 2^{-2k}
    sum += std::ldexp(ds * ds, -(2 * k + 1));
  }
  return std::sqrt(sum);
}

AtomicMeasure pushforward(
    const AtomicMeasure& mu,
    const std::function<AtomicMeasure(const CirclePoint&)>& kernel) {
  std::vector<Atom> out;
  for (const Atom& a : mu.atoms()) {
    AtomicMeasure k = kernel(a.point);
    if (std::fabs(k.mass() - 1.0) > 1e-9) {
      throw std::runtime_error("pushforward: kernel output mass off by more than 1e-9");
    }
    for (const Atom& b : k.atoms()) {
      out.push_back(Atom{b.point, a.weight * b.weight});
    }
  }
  return AtomicMeasure::from_atoms(std::move(out));
}

bool measures_match(const AtomicMeasure& a, const AtomicMeasure& b,
                    double angle_tol, double weight_tol) {
  if (a.support_size() != b.support_size()) return false;
  std::vector<bool> used(b.support_size(), false);
  for (const Atom& x : a.atoms()) {
    bool found = false;
    for (std::size_t j = 0; j < b.support_size(); ++j) {
      if (used[j]) continue;
      const Atom& y = b.atoms()[j];
      if (circular_distance(x.point, y.point) <= angle_tol &&
          std::fabs(x.weight - y.weight) <= weight_tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace circleflow
