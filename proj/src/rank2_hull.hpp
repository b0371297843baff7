#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qtangle::detail {

// Convex roof of rho = w1 |e1><e1| + w2 |e2><e2| for f(psi) = 4 |Q(psi)| with Q homogeneous of degree four.
// coeffs: Q(sqrt(w1) e1 + z sqrt(w2) e2) = sum_k coeffs[k] z^k.
struct HullResult {
  bool certified = false;
  double value = 0.0;                     // convex roof estimate
  std::vector<double> weights;            // q_i, summing to 1
  std::vector<Eigen::Vector2cd> spinors;  // unit x_i in the whitened basis
  double dual_gap = 0.0;                  // most negative slack found by the dual check
};

HullResult rank2_hull(const std::array<std::complex<double>, 5>& coeffs, double w1, double w2);

}  // namespace qtangle::detail
