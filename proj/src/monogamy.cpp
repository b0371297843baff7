#include "qtangle/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtangle/errors.hpp"
#include "qtangle/parallel.hpp"
#include "qtangle/zoo.hpp"

namespace qtangle {

namespace {

ConstraintRecord equality(std::string name, double lhs, double rhs, bool optimizer) {
  ConstraintRecord c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = lhs - rhs;
  c.kind = ConstraintKind::Equality;
  c.optimizer_values = optimizer;
  c.tol = optimizer ? kOptimizerTol : kAnalyticTol;
  c.pass = std::abs(c.residual) <= c.tol;
  return c;
}

ConstraintRecord inequality(std::string name, double lhs, double rhs, bool optimizer, bool diagnostic) {
  ConstraintRecord c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = lhs - rhs;
  c.kind = ConstraintKind::Inequality;
  c.optimizer_values = optimizer;
  c.diagnostic = diagnostic;
  c.tol = optimizer ? kOptimizerTol : kAnalyticTol;
  c.pass = c.residual >= -c.tol;
  return c;
}

std::string pair_name(const char* base, const TangleReport& rep, int j) {
  return std::string(base) + "(" + std::to_string(rep.label[static_cast<std::size_t>(j - 1)]) + ")";
}

}  // namespace

bool ConstraintReport::equalities_pass() const {
  return std::all_of(records.begin(), records.end(), [](const ConstraintRecord& c) {
    return c.kind != ConstraintKind::Equality || c.diagnostic || c.pass;
  });
}

const ConstraintRecord* ConstraintReport::find(const std::string& name) const {
  for (const auto& c : records) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ConstraintReport evaluate_constraints(const PureState& input, const TangleReport& rep) {
  if (input.n_qubits() != 4) throw Error(ErrorKind::BadDim, "constraints are defined for 4-qubit states");
  const PureState state = refocus(input, rep.focus_qubit);
  if (std::abs(one_tangle(state, 1) - rep.one_tangle) > 1e-12 ||
      std::abs(poly_coeffs(partial_trace(state, {1, 2})).n4 - rep.coeffs[0].n4) > 1e-12) {
    throw Error(ErrorKind::StaleReport, "tangle report does not belong to this state and focus");
  }
  ConstraintReport out;
  out.focus_qubit = rep.focus_qubit;
  auto& R = out.records;

  const auto& t3 = rep.three_tangles;
  auto t3sq = [&](int t) { return t3[static_cast<std::size_t>(t)].estimate * t3[static_cast<std::size_t>(t)].estimate; };
  auto opt_pair = [&](int j) {
    bool o = false;
    for (int t : triples_of_pair(j)) o = o || !t3[static_cast<std::size_t>(t)].exact();
    return o;
  };
  const bool opt_any = std::any_of(t3.begin(), t3.end(), [](const ThreeTangleEntry& e) { return !e.exact(); });

  const double tau = rep.one_tangle;
  const double tau0sq = rep.four.tau0_sq;
  double sum_n4 = 0, sum_2sq = 0, sum_n8 = 0, sum_3sq = 0, sum_3 = 0, sum_3_32 = 0;
  for (int j = 2; j <= 4; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 2);
    sum_n4 += rep.coeffs[k].n4;
    sum_2sq += rep.two_tangles[k] * rep.two_tangles[k];
    sum_n8 += rep.coeffs[k].n8;
  }
  for (int t = 0; t < 3; ++t) {
    const double e = t3[static_cast<std::size_t>(t)].estimate;
    sum_3sq += e * e;
    sum_3 += e;
    sum_3_32 += std::pow(e, 1.5);
  }

  // delta from the invariant decomposition of n8, so n8 from the trace is tested against it
  std::array<double, 3> delta_inv{}, Delta_inv{}, quarter3{};
  for (int j = 2; j <= 4; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 2);
    for (int t : triples_of_pair(j)) quarter3[k] += 0.25 * t3sq(t);
    delta_inv[k] = 4.0 * n8_decomposition(rep.invariants, j) - quarter3[k];
    Delta_inv[k] = delta_inv[k] + rep.coeffs[k].chi();
  }

  R.push_back(equality("EQ_1TANN4", tau, sum_n4 - 0.5 * tau0sq, false));

  for (int j = 2; j <= 4; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 2);
    auto c = equality(pair_name("EQ_N81JC", rep, j), 4.0 * rep.coeffs[k].n8, quarter3[k] + delta_inv[k], opt_pair(j));
    c.extras = {{"delta", delta_inv[k]}};
    R.push_back(c);
  }

  {
    double sd = 0;
    for (double d : delta_inv) sd += d;
    R.push_back(equality("EQ_SUM4N8C", 4.0 * sum_n8 - 0.5 * sum_3sq, sd, opt_any));
  }

  double sum_lhs41 = 0, sum_Delta = 0;
  for (int j = 2; j <= 4; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 2);
    const PolyCoeffs& pc = rep.coeffs[k];
    const double base = pc.c_value <= 0 ? pc.n4 : pc.n4 - rep.two_tangles[k] * rep.two_tangles[k];
    const double lhs = base * base - quarter3[k];
    auto c = equality(pair_name("EQ_N41JC", rep, j), lhs, Delta_inv[k], opt_pair(j));
    c.extras = {{"Delta", Delta_inv[k]}, {"chi", pc.chi()}, {"c_value", pc.c_value}};
    R.push_back(c);
    sum_lhs41 += (pc.n4 - rep.two_tangles[k] * rep.two_tangles[k]) * (pc.n4 - rep.two_tangles[k] * rep.two_tangles[k]);
    sum_Delta += Delta_inv[k];
  }
  R.push_back(equality("EQ_SUMN4C", sum_lhs41 - 0.5 * sum_3sq, sum_Delta, opt_any));

  double rhs_c1 = 0;
  for (std::size_t k = 0; k < 3; ++k) rhs_c1 += std::sqrt(std::max(0.0, quarter3[k] + Delta_inv[k]));
  R.push_back(equality("EQ_1TANC1", tau + 0.5 * tau0sq - sum_2sq, rhs_c1, opt_any));

  {
    // sum over j of (sum_{k>j} tau_1jk^2)^(1/2)
    double half_roots = 0;
    for (int j = 2; j <= 4; ++j) {
      double s = 0;
      for (int kk = j + 1; kk <= 4; ++kk) s += t3sq(triple_index(j, kk));
      half_roots += 0.5 * std::sqrt(s);
    }
    const double lhs = tau - sum_2sq - half_roots;
    const double via_delta = rhs_c1 - 0.5 * tau0sq - half_roots;
    auto c = equality("EQ_1TANC2", lhs, via_delta, opt_any);
    c.extras = {{"implied_sum_sqrtDelta_1_minus_f", lhs + 0.5 * tau0sq}};
    R.push_back(c);
  }

  R.push_back(equality("S1", sum_n4 - sum_2sq - 0.5 * tau0sq, tau - sum_2sq, false));
  R.push_back(inequality("MONO1", tau, sum_2sq + sum_3, opt_any, true));
  R.push_back(inequality("MONO2", tau, sum_2sq + sum_3_32, opt_any, true));
  for (int j = 2; j <= 4; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 2);
    R.push_back(inequality(pair_name("DELTA_BOUND", rep, j), rep.deltas.delta[k], rep.deltas.delta_lower[k], opt_pair(j), false));
  }
  return out;
}

ConstraintReport evaluate_constraints_3q(const PureState& input, int focus) {
  if (input.n_qubits() != 3) throw Error(ErrorKind::BadDim, "CKW report needs a 3-qubit state");
  const PureState state = focus == 1 ? input : swap_qubits(input, 1, focus);
  ConstraintReport out;
  out.focus_qubit = focus;
  const double t2 = two_tangle(partial_trace(state, {1, 2}));
  const double t3 = two_tangle(partial_trace(state, {1, 3}));
  out.records.push_back(equality("CKW", one_tangle(state, 1), t2 * t2 + t3 * t3 + three_tangle_pure(state), false));
  return out;
}

std::vector<LFamilyRow> sweep_L_family(const std::vector<double>& grid, const RoofOptions& opts, int threads) {
  std::vector<LFamilyRow> rows(grid.size());
  auto run = [&](std::size_t i) {
    const double a = grid[i];
    const PureState psi = make(ZooName::L_AIA, {{"a", a}}).state;
    const TangleReport rep = analyze_tangles(psi, 1, opts);
    LFamilyRow row;
    row.a = a;
    row.one_tangle = rep.one_tangle;
    double s2 = 0, s3 = 0, sd = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      s2 += rep.two_tangles[k] * rep.two_tangles[k];
      s3 += rep.three_tangles[k].estimate * rep.three_tangles[k].estimate;
      sd += rep.deltas.delta[k];
    }
    row.s1 = rep.one_tangle - s2;
    row.s = row.s1 - std::sqrt(0.5 * s3);
    row.r = std::sqrt(std::max(0.0, sd));
    rows[i] = row;
  };
  parallel_for(grid.size(), threads, run);
  return rows;
}

}  // namespace qtangle
