#pragma once

#include <array>

#include "qtangle/invariants.hpp"
#include "qtangle/qstate.hpp"
#include "qtangle/roof.hpp"
#include "qtangle/spectral.hpp"

namespace qtangle {

double one_tangle(const PureState& state, int focus = 1);

struct FourTangles {
  double tau0 = 0, tau0_sq = 0, tau1 = 0;
  std::array<double, 3> tau2{}, tau3{};  // by j - 2
};

FourTangles four_tangles(const FourQubitInvariants& inv);
FourTangles four_tangles(const PureState& state);

// sqrt(16 N48 - tau1^2 / 6), clamped at 0.
double three_tangle_upper(const FourQubitInvariants& inv, int triple_index, const FourTangles& ft);
double three_tangle_upper(const PureState& state, const QubitSubset& triple);

struct ThreeTangleEntry {
  int j = 0, k = 0;  // labels after refocusing
  double estimate = 0;
  double upper_bound = 0;
  RoofMethod method = RoofMethod::Optimizer;
  bool improved = true;
  bool exact() const { return method != RoofMethod::Optimizer; }
};

struct DeltaQuantities {
  std::array<double, 3> delta{};        // 4 n8 - (1/4) sum_k tau_1jk^2
  std::array<double, 3> Delta{};        // delta + chi
  std::array<double, 3> delta_lower{};  // tau1^2/12 + tau2^2/8 + 3 tau3^2/32
};

struct TangleReport {
  int focus_qubit = 1;
  std::array<int, 4> label{};  // label[m-1]: original label of refocused qubit m
  double one_tangle = 0;
  std::array<double, 3> two_tangles{};  // tau_1|j = max(0, C), by j - 2
  std::array<PolyCoeffs, 3> coeffs{};
  std::array<ThreeTangleEntry, 3> three_tangles{};  // by kTriples
  FourTangles four;
  DeltaQuantities deltas;
  FourQubitInvariants invariants;
  bool renormalized = false;
};

// Swap the focus into position 1; all other qubits keep their positions.
PureState refocus(const PureState& state, int focus);

DeltaQuantities delta_quantities(const std::array<PolyCoeffs, 3>& coeffs,
                                 const std::array<ThreeTangleEntry, 3>& three, const FourTangles& ft);
DeltaQuantities delta_quantities(const PureState& state, const RoofOptions& opts = {});

TangleReport analyze_tangles(const PureState& state, int focus = 1, const RoofOptions& opts = {});

}  // namespace qtangle
