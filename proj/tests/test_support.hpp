#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace fermitrap::test {

// phi_n from the physicists' Hermite polynomial and the explicit
// 1/sqrt(2^n n! sqrt(pi)) normalization. Fine for n <= ~40.
inline double hermite_explicit(int n, double x) {
  double h_prev = 1.0;
  double h = 2.0 * x;
  if (n == 0) h = 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = next;
  }
  const double log_norm =
      -0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0) + 0.5 * std::log(std::numbers::pi));
  return h * std::exp(log_norm - 0.5 * x * x);
}

// Trapezoid rule; spectrally accurate for the Gaussian-decaying integrands
// used here.
template <typename F>
double trapezoid(F&& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double acc = 0.5 * (f(a) + f(b));
  for (int i = 1; i < intervals; ++i) acc += f(a + i * h);
  return acc * h;
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = i + 1 == n ? b : a + (b - a) * i / (n - 1);
  return out;
}

inline Eigen::Matrix4d singlet() {
  Eigen::Vector4d s(0.0, 1.0, -1.0, 0.0);
  s /= std::sqrt(2.0);
  return s * s.transpose();
}

}  // namespace fermitrap::test
