#include "v2x/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace v2x {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Power series about the origin, accurate for x <= 1:
//   E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!)
double e1_series(double x) {
  double sum = -kEulerGamma - std::log(x);
  double term = x;  // k = 1 term
  sum += term;
  for (int k = 2; k < 64; ++k) {
    term *= -x * static_cast<double>(k - 1) / (static_cast<double>(k) * k);
    double next = sum + term;
    if (next == sum) break;
    sum = next;
  }
  return sum;
}

// Continued fraction for x > 1, evaluated with the modified Lentz scheme.
// Returns e^x * E1(x):
//   e^x E1(x) = 1 / (x + 1 - 1^2 / (x + 3 - 2^2 / (x + 5 - ...)))
double scaled_e1_cf(double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 200; ++i) {
    double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = a * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + a / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

void check_domain(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("exponential integral requires finite x > 0");
}

}  // namespace

double exp_integral_e1(double x) {
  check_domain(x);
  if (x <= 1.0) return e1_series(x);
  // e^-x underflows to 0 past ~745.13; the product is then 0 by convention.
  return std::exp(-x) * scaled_e1_cf(x);
}

double scaled_e1(double x) {
  check_domain(x);
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return scaled_e1_cf(x);
}

}  // namespace v2x
