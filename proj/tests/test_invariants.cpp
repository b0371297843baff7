#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "near.hpp"
#include "oracles.hpp"
#include "qtangle/errors.hpp"
#include "qtangle/invariants.hpp"
#include "qtangle/spectral.hpp"

using namespace qtangle;

namespace {

PureState random_lu(const PureState& s, std::mt19937_64& rng) {
  PureState out = s;
  for (int q = 1; q <= s.n_qubits(); ++q) out = apply_local_unitary(out, q, Mat2(oracle::random_unitary(2, rng)));
  return out;
}

}  // namespace

TEST_CASE("triple bookkeeping") {
  CHECK(triple_index(2, 3) == 0);
  CHECK(triple_index(3, 2) == 0);
  CHECK(triple_index(2, 4) == 1);
  CHECK(triple_index(4, 3) == 2);
  CHECK_THROWS_AS(triple_index(2, 2), Error);
  CHECK(triples_of_pair(2) == std::array<int, 2>{0, 1});
  CHECK(triples_of_pair(3) == std::array<int, 2>{0, 2});
  CHECK(triples_of_pair(4) == std::array<int, 2>{1, 2});
}

TEST_CASE("three-qubit I34 matches the Cayley hyperdeterminant") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const oracle::CVec v = oracle::random_state(3, rng);
    CHECK_NEAR(4.0 * std::abs(i34_pure3(PureState(3, v))), oracle::cayley_tangle(v), 1e-13);
    CHECK_NEAR(4.0 * std::abs(i34_amplitudes(v.data())), oracle::cayley_tangle(v), 1e-13);
  }
  CHECK_NEAR(4.0 * std::abs(i34_pure3(PureState(3, oracle::ket(3, {{"000", 1.0}, {"111", 1.0}})))), 1.0, 1e-15);
  CHECK_NEAR(std::abs(i34_pure3(PureState(3, oracle::ket(3, {{"001", 1.0}, {"010", 1.0}, {"100", 1.0}})))), 0.0, 1e-15);
}

TEST_CASE("degree-four and degree-eight structural forms vs spectrum") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    const oracle::CVec v = oracle::random_state(4, rng);
    const PureState s(4, v);
    const FourQubitInvariants inv = four_invariants(s);
    for (int j = 2; j <= 4; ++j) {
      const oracle::Sym sym = oracle::symmetric(oracle::reduced(v, 4, {1, j}));
      CHECK_NEAR(n4_structural(s, j), sym.e1, 1e-12);
      CHECK_NEAR(n8_structural(s, j), sym.e2, 1e-12);
      CHECK_NEAR(n8_decomposition(inv, j), sym.e2, 1e-12);
      CHECK_NEAR(n8_decomposition(s, j), sym.e2, 1e-12);
    }
  }
}

TEST_CASE("I42 and the P sum rule") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 50; ++t) {
    const oracle::CVec v = oracle::random_state(4, rng);
    const FourQubitInvariants inv = four_invariants(PureState(4, v));
    const cplx h = oracle::h_invariant(v);
    CHECK_NEAR(std::abs(inv.i42), 0.5 * std::abs(h), 1e-14);
    CHECK(std::abs(inv.p[0] + inv.p[1] + inv.p[2] - 3.0 * inv.i42 * inv.i42) < 1e-14);
  }
}

TEST_CASE("N48 per triple from refocused slices and from the pair forms") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 20; ++t) {
    const PureState s(4, oracle::random_state(4, rng));
    const FourQubitInvariants inv = four_invariants(s);
    for (std::size_t k = 0; k < 3; ++k) {
      const QubitSubset tri{kTriples[k][0], kTriples[k][1], kTriples[k][2]};
      CHECK_NEAR(inv.n48[k], n48_from_slices(three_qubit_slice_invariants(s, tri)), 1e-14);
    }
    const InvariantSet s2 = invariant_set(s, 2), s3 = invariant_set(s, 3), s4 = invariant_set(s, 4);
    CHECK_NEAR(inv.n48[0], n48_form_a(s2), 1e-14);
    CHECK_NEAR(inv.n48[1], n48_form_b(s2), 1e-14);
    CHECK_NEAR(inv.n48[1], n48_form_a(s4), 1e-14);
    CHECK_NEAR(inv.n48[2], n48_form_b(s3), 1e-14);
  }
}

TEST_CASE("moduli of the invariants are local-unitary invariant") {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 20; ++t) {
    const PureState s(4, oracle::random_state(4, rng));
    const PureState r = random_lu(s, rng);
    const FourQubitInvariants a = four_invariants(s), b = four_invariants(r);
    CHECK_NEAR(std::abs(a.i42), std::abs(b.i42), 1e-13);
    CHECK_NEAR(std::abs(a.i48), std::abs(b.i48), 1e-13);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK_NEAR(a.n48[k], b.n48[k], 1e-13);
      CHECK_NEAR(std::abs(a.p[k]), std::abs(b.p[k]), 1e-13);
      CHECK_NEAR(a.m48[k], b.m48[k], 1e-13);
    }
  }
}

TEST_CASE("I48 does not depend on the triple used") {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 20; ++t) {
    const PureState s(4, oracle::random_state(4, rng));
    const double ref = std::abs(four_invariants(s).i48);
    CHECK_NEAR(std::abs(four_invariants(swap_qubits(s, 3, 4)).i48), ref, 1e-13);
    CHECK_NEAR(std::abs(four_invariants(swap_qubits(s, 2, 4)).i48), ref, 1e-13);
  }
}

TEST_CASE("GHZ and cluster reference invariants") {
  const PureState ghz(4, oracle::ket(4, {{"0000", 1.0}, {"1111", 1.0}}));
  const FourQubitInvariants g = four_invariants(ghz);
  CHECK_NEAR(std::abs(g.i42), 0.5, 1e-15);
  for (int j = 2; j <= 4; ++j) CHECK_NEAR(n8_decomposition(g, j), 1.0 / 16, 1e-15);
  const PureState cl(4, oracle::ket(4, {{"0000", 1.0}, {"1100", 1.0}, {"0011", 1.0}, {"1111", -1.0}}));
  CHECK_NEAR(std::abs(four_invariants(cl).i42), 0.0, 1e-15);
}

TEST_CASE("argument errors") {
  const PureState s3(3, oracle::ket(3, {{"000", 1.0}}));
  CHECK_THROWS_AS(four_invariants(s3), Error);
  CHECK_THROWS_AS(i34_pure3(PureState(4, oracle::ket(4, {{"0000", 1.0}}))), Error);
  CHECK_THROWS_AS(three_qubit_slice_invariants(PureState(4, oracle::ket(4, {{"0000", 1.0}})), {2, 3, 4}), Error);
}
