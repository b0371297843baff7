#include "qtangle/transfer.hpp"

#include <algorithm>
#include <cmath>

#include "qtangle/errors.hpp"
#include "qtangle/fonts.hpp"
#include "qtangle/parallel.hpp"
#include "qtangle/spectral.hpp"
#include "qtangle/tangles.hpp"

namespace qtangle {

double transfer_q(double x) { return 4.0 * (x - 1.0) / (x * x); }

double transfer_closed_form(double x, int M) { return std::pow(transfer_q(x), M + 1); }

PureState build_initial(double x, int n_env) {
  if (!(x > 1.0) || !std::isfinite(x)) throw Error(ErrorKind::BadParam, "transfer model needs x > 1");
  if (n_env < 1 || n_env + 2 > kMaxQubits) throw Error(ErrorKind::BadParam, "n_env must be in 1..10");
  const double s = std::sqrt(x - 1.0);
  CVector pair = CVector::Zero(4);
  pair[0] = 1.0;
  pair[3] = s;
  PureState state(2, pair);
  CVector env(2);
  env[0] = 1.0;
  env[1] = s;
  CVector full = state.amplitudes();
  for (int e = 0; e < n_env; ++e) {
    CVector next(full.size() * 2);
    for (Eigen::Index k = 0; k < full.size(); ++k) {
      next[2 * k] = full[k] * env[0];
      next[2 * k + 1] = full[k] * env[1];
    }
    full = next / std::sqrt(x);
  }
  return PureState(2 + n_env, full);
}

TransferRun apply_cnot_chain(double x, int n_env, int M, bool check_identity) {
  if (M < 0 || M > n_env) throw Error(ErrorKind::BadParam, "need 0 <= M <= n_env");
  PureState state = build_initial(x, n_env);
  const int n = state.n_qubits();
  TransferRun run;
  run.x = x;
  run.n_env = n_env;
  for (int m = 1; m <= M; ++m) {
    state = apply_cnot(state, 1, 2 + m);
    TransferStep st;
    st.M = m;
    const double c = two_tangle(partial_trace(state, {1, 2}));
    st.tau_12_sq = c * c;
    st.tau_1rest = one_tangle(state, 1);
    st.residual = st.tau_1rest - st.tau_12_sq;
    for (int j = 3; j <= n; ++j) {
      const double cj = two_tangle(partial_trace(state, {1, j}));
      st.max_tau_1j_sq = std::max(st.max_tau_1j_sq, cj * cj);
    }
    if (check_identity) {
      double s = 0;
      for (int j = 2; j <= n; ++j) s += poly_coeffs(partial_trace(state, {1, j})).n4 - coherence_X(state, j);
      st.n4_identity = st.tau_1rest - s;
    }
    run.steps.push_back(st);
  }
  return run;
}

std::vector<TransferRun> transfer_sweep(const std::vector<double>& grid, int n_env, int M, int threads, bool check_identity) {
  std::vector<TransferRun> runs(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) { runs[i] = apply_cnot_chain(grid[i], n_env, M, check_identity); });
  return runs;
}

}  // namespace qtangle
