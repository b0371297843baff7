#pragma once

#include <cstdint>
#include <vector>

#include "qtangle/qstate.hpp"

namespace qtangle {

struct RoofOptions {
  int restarts = 32;
  int iterations = 400;
  std::uint64_t seed = 20240611;
  int threads = 1;
  std::vector<int> sizes{2, 3, 4};
  // Exact zero test for rank-2 marginals before running the optimizer.
  bool zero_certificate = true;
  // Convex-envelope solver for rank-2 marginals; off leaves only the optimizer.
  bool rank2_hull = true;
};

enum class RoofMethod { Pure, ZeroCertificate, Rank2Hull, Optimizer };

const char* to_string(RoofMethod m);

struct Decomposition {
  std::vector<double> weights;
  std::vector<CVector> states;  // normalized 8-component vectors
};

struct RoofResult {
  double estimate = 0.0;
  RoofMethod method = RoofMethod::Optimizer;
  Decomposition decomposition;
  double eigen_value = 0.0;       // average tangle of the eigen-ensemble
  bool improved = true;           // false: no restart beat the eigen-ensemble (warning only)
  double reconstruction_error = 0.0;
  int best_size = 0;

  bool exact() const { return method != RoofMethod::Optimizer; }
};

// 4 |I34| of a normalized three-qubit state.
double three_tangle_pure(const PureState& state);

// Convex-roof upper estimate of the three-tangle of an 8x8 density matrix.
RoofResult three_tangle_mixed(const DensityMatrix& rho, const RoofOptions& opts = {});

}  // namespace qtangle
