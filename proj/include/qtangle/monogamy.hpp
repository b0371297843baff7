#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtangle/tangles.hpp"

namespace qtangle {

enum class ConstraintKind { Equality, Inequality };

struct ConstraintRecord {
  std::string name;
  double lhs = 0, rhs = 0, residual = 0;
  ConstraintKind kind = ConstraintKind::Equality;
  double tol = 1e-6;
  bool pass = true;
  bool diagnostic = false;        // reported, never counted as a failure
  bool optimizer_values = false;  // involves non-exact three-tangle estimates
  std::vector<std::pair<std::string, double>> extras;
};

struct ConstraintReport {
  int focus_qubit = 1;
  std::vector<ConstraintRecord> records;

  bool equalities_pass() const;
  const ConstraintRecord* find(const std::string& name) const;
};

inline constexpr double kAnalyticTol = 1e-6;
inline constexpr double kOptimizerTol = 1e-3;

// Report must come from analyze_tangles(state, focus); otherwise StaleReport.
ConstraintReport evaluate_constraints(const PureState& state, const TangleReport& report);

// CKW equality for a three-qubit pure state with the given focus.
ConstraintReport evaluate_constraints_3q(const PureState& state, int focus = 1);

struct LFamilyRow {
  double a = 0, one_tangle = 0, s1 = 0, s = 0, r = 0;
};

std::vector<LFamilyRow> sweep_L_family(const std::vector<double>& a_grid, const RoofOptions& opts = {}, int threads = 1);

}  // namespace qtangle
