#pragma once

#include <array>

#include "qtangle/fonts.hpp"
#include "qtangle/qstate.hpp"

namespace qtangle {

// Triples containing qubit 1, in the order used by every per-triple array.
inline constexpr std::array<std::array<int, 3>, 3> kTriples{{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}};

// Index into kTriples of {1, j, k}.
int triple_index(int j, int k);

// The two triples {1, j, k} that contain pair (1, j), as kTriples indices.
std::array<int, 2> triples_of_pair(int j);

// Degree-four three-qubit invariant of 8 (possibly unnormalized) amplitudes.
cplx i34_amplitudes(const cplx* a);
cplx i34_pure3(const PureState& state);

struct SliceInvariants {
  cplx i40, i31, i22, i13, i04;
};

// Triple must be {1, j, k}; the remaining qubit is the traced one.
SliceInvariants three_qubit_slice_invariants(const PureState& state, const QubitSubset& triple);
SliceInvariants slice_invariants(const InvariantSet& s);

// sum_m binom(4, m) |I^{4-m, m}|^2
double n48_from_slices(const SliceInvariants& v);

struct FourQubitInvariants {
  cplx i42;
  cplx i48;
  std::array<double, 3> n48{};  // by kTriples
  std::array<cplx, 3> p{};      // by j - 2
  std::array<double, 3> m48{};  // by j - 2
};

FourQubitInvariants four_invariants(const PureState& state);

double n4_structural(const InvariantSet& s);
double n4_structural(const PureState& state, int j);
double n8_structural(const InvariantSet& s);
double n8_structural(const PureState& state, int j);

// N48 closed forms in terms of one pair set.
double n48_form_a(const InvariantSet& s);
double n48_form_b(const InvariantSet& s);
cplx p_invariant(const InvariantSet& s);
double m48_invariant(const InvariantSet& s);

// N48 + N48 + |3 I42^2 - P_1j|^2 / 24 + M48(rho_1j)
double n8_decomposition(const FourQubitInvariants& inv, int j);
double n8_decomposition(const PureState& state, int j);

}  // namespace qtangle
