#include "circleflow/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace circleflow {

namespace {
const std::complex<double> kI(0.0, 1.0);
}

FourierFunction::FourierFunction(int kmax) : kmax_(kmax) {
  if (kmax < 0) throw std::invalid_argument("FourierFunction: kmax must be nonnegative");
  c_.assign(2 * kmax + 1, {0.0, 0.0});
}

FourierFunction FourierFunction::constant(double v, int kmax) {
  FourierFunction f(kmax);
  f.set_coeff(0, v);
  return f;
}

FourierFunction FourierFunction::cosine(int k, int kmax) {
  FourierFunction f(kmax);
  if (k > kmax) throw std::invalid_argument("cosine: k beyond kmax");
  f.c_[kmax + k] += 0.5;
  f.c_[kmax - k] += 0.5;
  return f;
}

FourierFunction FourierFunction::sine(int k, int kmax) {
  FourierFunction f(kmax);
  if (k > kmax) throw std::invalid_argument("sine: k beyond kmax");
  f.c_[kmax + k] += -0.5 * kI;
  f.c_[kmax - k] += 0.5 * kI;
  return f;
}

void FourierFunction::set_coeff(int k, std::complex<double> v) {
  c_[k + kmax_] = v;
  if (k != 0) c_[-k + kmax_] = std::conj(v);
}

double FourierFunction::eval(double theta) const {
  // Real synthesis: c_0 + 2 Re sum_{k>0} c_k e^{ik theta}.
  double s = c_[kmax_].real();
  for (int k = 1; k <= kmax_; ++k) {
    s += 2.0 * std::real(c_[kmax_ + k] * std::exp(kI * (k * theta)));
  }
  return s;
}

double FourierFunction::eval_derivative(double theta) const {
  double s = 0.0;
  for (int k = 1; k <= kmax_; ++k) {
    s += 2.0 * std::real(kI * static_cast<double>(k) * c_[kmax_ + k] *
                         std::exp(kI * (k * theta)));
  }
  return s;
}

double FourierFunction::eval_second_derivative(double theta) const {
  double s = 0.0;
  for (int k = 1; k <= kmax_; ++k) {
    s += 2.0 * std::real(-static_cast<double>(k) * k * c_[kmax_ + k] *
                         std::exp(kI * (k * theta)));
  }
  return s;
}

FourierFunction FourierFunction::heat(double t) const {
  if (t < 0.0) throw std::invalid_argument("heat: negative time");
  FourierFunction out(kmax_);
  for (int k = -kmax_; k <= kmax_; ++k) {
    out.c_[k + kmax_] = c_[k + kmax_] * std::exp(-0.5 * k * k * t);
  }
  return out;
}

FourierFunction FourierFunction::derivative() const {
  FourierFunction out(kmax_);
  for (int k = -kmax_; k <= kmax_; ++k) {
    out.c_[k + kmax_] = kI * static_cast<double>(k) * c_[k + kmax_];
  }
  return out;
}

double FourierFunction::coeff_l1_norm() const {
  double s = 0.0;
  for (const auto& v : c_) s += std::abs(v);
  return s;
}

std::vector<std::complex<double>> epsilon_fourier(const GraphParams& g, int kmax) {
  std::vector<std::complex<double>> e(2 * kmax + 1);
  e[kmax] = (g.l - std::numbers::pi) / std::numbers::pi;
  for (int k = 1; k <= kmax; ++k) {
    const std::complex<double> v =
        (1.0 - std::exp(-kI * (k * g.l))) / (kI * (k * std::numbers::pi));
    e[kmax + k] = v;
    e[kmax - k] = std::conj(v);
  }
  return e;
}

FourierFunction multiply_epsilon(const FourierFunction& f, const GraphParams& g) {
  const int K = f.kmax();
  // Convolution needs eps coefficients up to 2K to fill every output mode.
  const auto e = epsilon_fourier(g, 2 * K);
  FourierFunction out(K);
  for (int k = 0; k <= K; ++k) {
    std::complex<double> s(0.0, 0.0);
    for (int m = -K; m <= K; ++m) {
      s += e[(k - m) + 2 * K] * f.coeff(m);
    }
    out.set_coeff(k, k == 0 ? std::complex<double>(s.real(), 0.0) : s);
  }
  return out;
}

FourierFunction drift_apply(const FourierFunction& f, const GraphParams& g) {
  return multiply_epsilon(f.derivative(), g);
}

}  // namespace circleflow
