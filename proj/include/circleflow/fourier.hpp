#pragma once

#include <complex>
#include <vector>

#include "circleflow/geometry.hpp"

namespace circleflow {

// Real-valued function on the circle held as Fourier coefficients c_k,
// k = -kmax..kmax, f(theta) = sum c_k e^{ik theta}, with c_{-k} = conj(c_k).
class FourierFunction {
 public:
  explicit FourierFunction(int kmax);

  static FourierFunction constant(double v, int kmax);
  static FourierFunction cosine(int k, int kmax);  // cos(k theta)
  static FourierFunction sine(int k, int kmax);    // sin(k theta)

  int kmax() const { return kmax_; }
  std::complex<double> coeff(int k) const { return c_[k + kmax_]; }
  void set_coeff(int k, std::complex<double> v);

  double eval(double theta) const;
  double eval_derivative(double theta) const;
  double eval_second_derivative(double theta) const;

  // Heat semigroup: c_k -> e^{-k^2 t / 2} c_k.
  FourierFunction heat(double t) const;
  // d/dtheta: c_k -> ik c_k.
  FourierFunction derivative() const;

  double coeff_l1_norm() const;

 private:
  int kmax_;
  std::vector<std::complex<double>> c_;
};

// Fourier coefficients of the orientation function: +1 on [0,l], -1 on
// (l, 2pi). hat{eps}_0 = (l - pi)/pi, hat{eps}_k = (1 - e^{-ikl})/(ik pi).
std::vector<std::complex<double>> epsilon_fourier(const GraphParams& g, int kmax);

// Pointwise product with the orientation function, as a truncated convolution.
FourierFunction multiply_epsilon(const FourierFunction& f, const GraphParams& g);

// The drift operator: f -> eps * f'.
FourierFunction drift_apply(const FourierFunction& f, const GraphParams& g);

}  // namespace circleflow
