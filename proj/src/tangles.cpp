#include "qtangle/tangles.hpp"

#include <algorithm>
#include <cmath>

#include "qtangle/errors.hpp"

namespace qtangle {

PureState refocus(const PureState& state, int focus) {
  if (focus < 1 || focus > state.n_qubits()) throw Error(ErrorKind::BadIndex, "focus qubit out of range");
  return focus == 1 ? state : swap_qubits(state, 1, focus);
}

double one_tangle(const PureState& state, int focus) {
  if (focus < 1 || focus > state.n_qubits()) throw Error(ErrorKind::BadIndex, "focus qubit out of range");
  const CMatrix r = partial_trace(state, {focus}).matrix();
  // 4 det = tr^2 - (r00 - r11)^2 - 4 |r01|^2, exact for balanced marginals
  const double t = r(0, 0).real() + r(1, 1).real(), d = r(0, 0).real() - r(1, 1).real();
  return std::clamp(1.0 - (d * d + 4.0 * std::norm(r(0, 1))) / (t * t), 0.0, 1.0);
}

FourTangles four_tangles(const FourQubitInvariants& inv) {
  FourTangles ft;
  ft.tau0 = 2.0 * std::abs(inv.i42);
  ft.tau0_sq = 4.0 * std::norm(inv.i42);
  ft.tau1 = std::sqrt(16.0 * std::abs(12.0 * inv.i48));
  for (std::size_t k = 0; k < 3; ++k) {
    ft.tau2[k] = std::sqrt(32.0 * std::max(0.0, inv.m48[k]));
    ft.tau3[k] = std::abs(4.0 * inv.i42 * inv.i42 - (4.0 / 3.0) * inv.p[k]);
  }
  return ft;
}

FourTangles four_tangles(const PureState& state) { return four_tangles(four_invariants(state)); }

double three_tangle_upper(const FourQubitInvariants& inv, int t, const FourTangles& ft) {
  const double v = 16.0 * inv.n48[static_cast<std::size_t>(t)] - ft.tau1 * ft.tau1 / 6.0;
  return std::sqrt(std::max(0.0, v));
}

double three_tangle_upper(const PureState& state, const QubitSubset& triple) {
  if (state.n_qubits() != 4) throw Error(ErrorKind::BadDim, "expected a 4-qubit state");
  check_subset(triple, 4);
  if (triple.size() != 3 || std::find(triple.begin(), triple.end(), 1) == triple.end()) {
    throw Error(ErrorKind::BadSubset, "triple must contain the focus qubit 1");
  }
  QubitSubset t = triple;
  std::sort(t.begin(), t.end());
  const FourQubitInvariants inv = four_invariants(state);
  return three_tangle_upper(inv, triple_index(t[1], t[2]), four_tangles(inv));
}

DeltaQuantities delta_quantities(const std::array<PolyCoeffs, 3>& coeffs,
                                 const std::array<ThreeTangleEntry, 3>& three, const FourTangles& ft) {
  DeltaQuantities d;
  for (int j = 2; j <= 4; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 2);
    double s = 0.0;
    for (int t : triples_of_pair(j)) {
      const double e = three[static_cast<std::size_t>(t)].estimate;
      s += e * e;
    }
    d.delta[k] = 4.0 * coeffs[k].n8 - 0.25 * s;
    d.Delta[k] = d.delta[k] + coeffs[k].chi();
    d.delta_lower[k] = ft.tau1 * ft.tau1 / 12.0 + ft.tau2[k] * ft.tau2[k] / 8.0 + 3.0 * ft.tau3[k] * ft.tau3[k] / 32.0;
  }
  return d;
}

DeltaQuantities delta_quantities(const PureState& state, const RoofOptions& opts) {
  return analyze_tangles(state, 1, opts).deltas;
}

TangleReport analyze_tangles(const PureState& input, int focus, const RoofOptions& opts) {
  if (input.n_qubits() != 4) throw Error(ErrorKind::BadDim, "tangle reports are defined for 4 qubits");
  const PureState state = refocus(input, focus);
  TangleReport rep;
  rep.focus_qubit = focus;
  rep.renormalized = input.renormalized();
  for (int m = 1; m <= 4; ++m) rep.label[static_cast<std::size_t>(m - 1)] = m;
  std::swap(rep.label[0], rep.label[static_cast<std::size_t>(focus - 1)]);

  rep.one_tangle = one_tangle(state, 1);
  for (int j = 2; j <= 4; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 2);
    const DensityMatrix rho = partial_trace(state, {1, j});
    const SpinFlipSpectrum spec = spectrum(rho);
    rep.coeffs[k] = poly_coeffs(rho, spec);
    rep.two_tangles[k] = std::max(0.0, spec.c_value);
  }
  rep.invariants = four_invariants(state);
  rep.four = four_tangles(rep.invariants);
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& tr = kTriples[t];
    auto& e = rep.three_tangles[t];
    e.j = tr[1];
    e.k = tr[2];
    const RoofResult rr = three_tangle_mixed(partial_trace(state, {tr[0], tr[1], tr[2]}), opts);
    e.estimate = rr.estimate;
    e.method = rr.method;
    e.improved = rr.improved;
    e.upper_bound = three_tangle_upper(rep.invariants, static_cast<int>(t), rep.four);
  }
  rep.deltas = delta_quantities(rep.coeffs, rep.three_tangles, rep.four);
  return rep;
}

}  // namespace qtangle
