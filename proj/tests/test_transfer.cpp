#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "near.hpp"
#include "oracles.hpp"
#include "qtangle/errors.hpp"
#include "qtangle/transfer.hpp"

using namespace qtangle;

TEST_CASE("closed form") {
  CHECK_NEAR(transfer_q(2.0), 1.0, 1e-15);
  CHECK_NEAR(transfer_q(4.0), 0.75, 1e-15);
  CHECK_NEAR(transfer_closed_form(4.0, 2), 0.421875, 1e-15);
  // q = 1/2 at x = 4 +- 2 sqrt 2, so q^2 = 1/4 for M = 1
  CHECK_NEAR(transfer_closed_form(4 + 2 * std::sqrt(2.0), 1), 0.25, 1e-14);
  CHECK_NEAR(transfer_closed_form(4 - 2 * std::sqrt(2.0), 1), 0.25, 1e-14);
}

TEST_CASE("initial state") {
  const double x = 3.0, s = std::sqrt(x - 1);
  const PureState p = build_initial(x, 2);
  REQUIRE(p.n_qubits() == 4);
  const auto want = oracle::kron(oracle::kron(oracle::ket(2, {{"00", 1}, {"11", s}}), oracle::ket(1, {{"0", 1}, {"1", s}})),
                                 oracle::ket(1, {{"0", 1}, {"1", s}}));
  CHECK((p.amplitudes() - want).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("parameter errors") {
  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalMismatch;
  };
  CHECK(kind([] { build_initial(1.0, 2); }) == ErrorKind::BadParam);
  CHECK(kind([] { build_initial(0.5, 2); }) == ErrorKind::BadParam);
  CHECK(kind([] { build_initial(std::nan(""), 2); }) == ErrorKind::BadParam);
  CHECK(kind([] { build_initial(2.0, 0); }) == ErrorKind::BadParam);
  CHECK(kind([] { build_initial(2.0, 11); }) == ErrorKind::BadParam);
  CHECK(kind([] { apply_cnot_chain(2.0, 2, 3); }) == ErrorKind::BadParam);
  CHECK(kind([] { apply_cnot_chain(2.0, 2, -1); }) == ErrorKind::BadParam);
}

TEST_CASE("CNOT chain follows q^(M+1) and the one-tangle identity") {
  for (double x : {1.2, 2.0, 3.5, 7.0, 20.0}) {
    const TransferRun run = apply_cnot_chain(x, 4, 4);
    REQUIRE(run.steps.size() == 4);
    for (const auto& st : run.steps) {
      CHECK_NEAR(st.tau_12_sq, transfer_closed_form(x, st.M), 1e-12);
      CHECK_NEAR(st.residual, st.tau_1rest - st.tau_12_sq, 1e-15);
      CHECK(st.residual >= -1e-12);
      CHECK(std::abs(st.n4_identity) < 1e-10);
    }
    // the entanglement with qubit 2 reported by the independent concurrence
    const PureState p = build_initial(x, 1);
    const double c = oracle::concurrence_from_state(p.amplitudes(), 3, 1, 2);
    CHECK_NEAR(c * c, transfer_q(x), 1e-12);
  }
}

TEST_CASE("sweep matches single runs for any thread count") {
  const std::vector<double> grid{1.5, 2.5, 6.0};
  const auto a = transfer_sweep(grid, 3, 2, 1);
  const auto b = transfer_sweep(grid, 3, 2, 3);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const TransferRun one = apply_cnot_chain(grid[i], 3, 2, false);
    CHECK(a[i].steps.back().tau_12_sq == one.steps.back().tau_12_sq);
    CHECK(b[i].steps.back().tau_1rest == a[i].steps.back().tau_1rest);
  }
}
