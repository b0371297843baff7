#pragma once

#include <array>

#include "qtangle/qstate.hpp"

namespace qtangle {

struct SpinFlipSpectrum {
  std::array<double, 4> lambdas{};  // eigenvalues of rho * rho_tilde, descending
  double c_value = 0.0;             // sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)
};

struct PolyCoeffs {
  double n4 = 0, n8 = 0, n12 = 0, n16 = 0;
  double f16 = 0;
  double chi_plus = 0, chi_minus = 0;
  double c_value = 0;

  // chi on the branch selected by sign(C); C == 0 takes the plus branch.
  double chi() const { return c_value >= 0 ? chi_plus : chi_minus; }
};

inline constexpr double kClampTol = 1e-10;

// (sy x sy) rho^* (sy x sy)
DensityMatrix spin_flip(const DensityMatrix& rho);

SpinFlipSpectrum spectrum(const DensityMatrix& rho);

PolyCoeffs poly_coeffs(const DensityMatrix& rho);
PolyCoeffs poly_coeffs(const DensityMatrix& rho, const SpinFlipSpectrum& spec);

double two_tangle(const DensityMatrix& rho);

// |n4 - |C|^2 - sqrt(4 n8 + 8 sqrt(n16) +- 8 sqrt(f16))|
double verify_n4_identity(const DensityMatrix& rho);

// Clamp roundoff negatives to 0; more negative than -kClampTol is a NumericalFailure.
double clamp_nonneg(double v, const char* what);

}  // namespace qtangle
