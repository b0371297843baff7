#include "qtangle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtangle/errors.hpp"

namespace qtangle {

namespace {

using Mat4 = Eigen::Matrix4cd;

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorKind::BadDim, "expected a 4x4 density matrix");
}

Mat4 sigma_yy() {
  // sy x sy is real: anti-diagonal (-1, 1, 1, -1)
  Mat4 s = Mat4::Zero();
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

// W with rho = W W^dagger; columns are eigenvectors scaled by sqrt of the eigenvalues.
Mat4 factor(const Mat4& m) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(m);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::NumericalFailure, "Hermitian eigensolve failed");
  Eigen::Vector4d w = es.eigenvalues();
  for (int i = 0; i < 4; ++i) w[i] = std::sqrt(clamp_nonneg(w[i], "density matrix eigenvalue"));
  return es.eigenvectors() * w.asDiagonal();
}

}  // namespace

double clamp_nonneg(double v, const char* what) {
  if (v >= 0.0) return v;
  if (v >= -kClampTol) return 0.0;
  throw Error(ErrorKind::NumericalFailure, std::string(what) + " is negative beyond clamp: " + std::to_string(v));
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
  require_two_qubit(rho);
  const Mat4 s = sigma_yy();
  const Mat4 m = rho.matrix();
  return DensityMatrix(s * m.conjugate() * s);
}

SpinFlipSpectrum spectrum(const DensityMatrix& rho) {
  require_two_qubit(rho);
  // sqrt(lambda_i) are the singular values of W^T (sy x sy) W.
  const Mat4 w = factor(rho.matrix());
  const Mat4 t = w.transpose() * sigma_yy() * w;
  const Eigen::JacobiSVD<Mat4> svd(t);
  const Eigen::Vector4d sv = svd.singularValues();
  SpinFlipSpectrum out;
  for (int i = 0; i < 4; ++i) out.lambdas[static_cast<std::size_t>(i)] = sv[i] * sv[i];
  out.c_value = sv[0] - sv[1] - sv[2] - sv[3];
  return out;
}

PolyCoeffs poly_coeffs(const DensityMatrix& rho) { return poly_coeffs(rho, spectrum(rho)); }

PolyCoeffs poly_coeffs(const DensityMatrix& rho, const SpinFlipSpectrum& spec) {
  require_two_qubit(rho);
  const Mat4 m = rho.matrix() * spin_flip(rho).matrix();
  const Mat4 m2 = m * m;
  const double t1 = m.trace().real();
  const double t2 = m2.trace().real();
  const double t3 = (m2 * m).trace().real();
  PolyCoeffs p;
  p.c_value = spec.c_value;
  p.n4 = clamp_nonneg(t1, "n4");
  p.n8 = 0.5 * (t1 * t1 - t2);
  p.n12 = (t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0;
  p.n16 = clamp_nonneg(m.determinant().real(), "n16");
  const double c2 = spec.c_value * spec.c_value;
  p.f16 = clamp_nonneg(c2 * (p.n12 + std::sqrt(p.n16) * (p.n4 - c2)), "f16");
  const double s16 = std::sqrt(p.n16);
  const double sf = std::sqrt(p.f16);
  p.chi_plus = 8.0 * s16 + 8.0 * sf;
  p.chi_minus = 8.0 * s16 - 8.0 * sf + 2.0 * p.n4 * c2 - c2 * c2;
  return p;
}

double two_tangle(const DensityMatrix& rho) { return std::max(0.0, spectrum(rho).c_value); }

double verify_n4_identity(const DensityMatrix& rho) {
  const PolyCoeffs p = poly_coeffs(rho);
  const double c2 = p.c_value * p.c_value;
  const double sgn = p.c_value >= 0 ? 1.0 : -1.0;
  const double arg = 4.0 * p.n8 + 8.0 * std::sqrt(p.n16) + sgn * 8.0 * std::sqrt(p.f16);
  return std::abs(p.n4 - c2 - std::sqrt(std::max(0.0, arg)));
}

}  // namespace qtangle
