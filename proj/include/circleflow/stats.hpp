#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace circleflow {

// Streaming mean/variance (Welford).
struct RunningStats {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    double d1 = x - mean;
    mean += d1 / static_cast<double>(n);
    m2 += d1 * (x - mean);
  }
  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double stddev() const;
  double standard_error() const;
};

double normal_cdf(double x);

// One-sample two-sided Kolmogorov-Smirnov statistic of `samples` against the
// cdf F. Sorts a copy of the samples.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y);

// Wilson score interval lower bound for a binomial proportion; positive iff
// at least one success was observed.
double wilson_lower_bound(std::size_t successes, std::size_t trials,
                          double z = 1.959963984540054);

}  // namespace circleflow
