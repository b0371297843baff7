#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "near.hpp"
#include "oracles.hpp"
#include "qtangle/errors.hpp"
#include "qtangle/spectral.hpp"

using namespace qtangle;

namespace {

DensityMatrix werner(double p) {
  CMatrix m = CMatrix::Identity(4, 4) * ((1 - p) / 4);
  m(0, 0) += p / 2;
  m(3, 3) += p / 2;
  m(0, 3) += p / 2;
  m(3, 0) += p / 2;
  return DensityMatrix(m);
}

}  // namespace

TEST_CASE("spin flip equals (sy x sy) rho* (sy x sy)") {
  std::mt19937_64 rng(21);
  const oracle::CVec v = oracle::random_state(4, rng);
  const oracle::CMat rho = oracle::reduced(v, 4, {2, 3});
  const oracle::CMat yy = oracle::kron(oracle::sigma_y(), oracle::sigma_y());
  CHECK((spin_flip(DensityMatrix(rho)).matrix() - yy * rho.conjugate() * yy).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("spectrum and coefficients agree with a general eigensolver") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    const oracle::CVec v = oracle::random_state(4, rng);
    const oracle::CMat rho = oracle::reduced(v, 4, {1, 3});
    const auto l = oracle::rr_tilde_eigs(rho);
    const SpinFlipSpectrum s = spectrum(DensityMatrix(rho));
    for (std::size_t i = 0; i < 4; ++i) CHECK_NEAR(s.lambdas[i], l[i], 1e-12);
    CHECK_NEAR(s.c_value, oracle::concurrence_from_state(v, 4, 1, 3), 1e-12);
    const oracle::Sym sym = oracle::symmetric(rho);
    const PolyCoeffs p = poly_coeffs(DensityMatrix(rho));
    CHECK_NEAR(p.n4, sym.e1, 1e-12);
    CHECK_NEAR(p.n8, sym.e2, 1e-12);
    CHECK_NEAR(p.n12, sym.e3, 1e-12);
    CHECK_NEAR(p.n16, sym.e4, 1e-12);
    CHECK(verify_n4_identity(DensityMatrix(rho)) < 1e-10);
  }
}

TEST_CASE("rank-two marginals keep the concurrence at machine precision") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const oracle::CVec v = oracle::random_state(3, rng);
    const double c = spectrum(DensityMatrix(oracle::reduced(v, 3, {1, 2}))).c_value;
    CHECK_NEAR(c, oracle::concurrence_from_state(v, 3, 1, 2), 1e-13);
  }
}

TEST_CASE("Werner states follow C = max(0, (3p - 1)/2)") {
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    CHECK_NEAR(two_tangle(werner(p)), std::max(0.0, (3 * p - 1) / 2), 1e-12);
  }
  const PolyCoeffs bell = poly_coeffs(werner(1.0));
  CHECK_NEAR(bell.n4, 1.0, 1e-14);
  CHECK_NEAR(bell.n8, 0.0, 1e-14);
  CHECK_NEAR(bell.c_value, 1.0, 1e-12);
}

TEST_CASE("product states have zero two-tangle") {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1;
  CHECK_NEAR(two_tangle(DensityMatrix(m)), 0.0, 1e-15);
  CHECK_NEAR(two_tangle(DensityMatrix(CMatrix::Identity(4, 4) / 4.0)), 0.0, 1e-15);
}

TEST_CASE("chi branches and f16") {
  std::mt19937_64 rng(24);
  const oracle::CVec v = oracle::random_state(4, rng);
  const oracle::CMat rho = oracle::reduced(v, 4, {1, 2});
  const PolyCoeffs p = poly_coeffs(DensityMatrix(rho));
  const oracle::Sym s = oracle::symmetric(rho);
  const double c2 = s.c * s.c;
  CHECK_NEAR(p.f16, c2 * (s.e3 + std::sqrt(s.e4) * (s.e1 - c2)), 1e-12);
  CHECK_NEAR(p.chi_plus, 8 * std::sqrt(s.e4) + 8 * std::sqrt(p.f16), 1e-10);
  CHECK_NEAR(p.chi_minus, 8 * std::sqrt(s.e4) - 8 * std::sqrt(p.f16) + 2 * s.e1 * c2 - c2 * c2, 1e-10);
  CHECK(p.chi() == (p.c_value >= 0 ? p.chi_plus : p.chi_minus));
}

TEST_CASE("clamp and dimension errors") {
  CHECK(clamp_nonneg(-1e-11, "x") == 0.0);
  CHECK_THROWS_AS(clamp_nonneg(-1e-6, "x"), Error);
  CHECK_THROWS_AS(spectrum(DensityMatrix(CMatrix::Identity(8, 8) / 8.0)), Error);
}
