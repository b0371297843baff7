#pragma once

#include <vector>

#include "qtangle/qstate.hpp"

namespace qtangle {

struct TransferStep {
  int M = 0;
  double tau_12_sq = 0;
  double tau_1rest = 0;
  double residual = 0;          // tau_1rest - tau_12_sq
  double max_tau_1j_sq = 0;     // largest two-tangle squared over j >= 3
  double n4_identity = 0;       // one-tangle - sum_j (n4(rho_1j) - X_1j)
};

struct TransferRun {
  double x = 0;
  int n_env = 0;
  std::vector<TransferStep> steps;  // after CNOT number 1..M
};

// 4 (x - 1) / x^2
double transfer_q(double x);
// q^(M+1)
double transfer_closed_form(double x, int M);

// (|00> + sqrt(x-1)|11>)/sqrt(x) followed by n_env copies of (|0> + sqrt(x-1)|1>)/sqrt(x).
PureState build_initial(double x, int n_env);

// CNOTs with control 1 and targets 3, 4, ..., 2 + M.
TransferRun apply_cnot_chain(double x, int n_env, int M, bool check_identity = true);

std::vector<TransferRun> transfer_sweep(const std::vector<double>& x_grid, int n_env, int M, int threads = 1,
                                        bool check_identity = false);

}  // namespace qtangle
