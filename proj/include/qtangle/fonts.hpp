#pragma once

#include <vector>

#include "qtangle/qstate.hpp"

namespace qtangle {

// Determinants D_{1jIJ} for the focus pair (1, j).
// Spectator key I_v = sum_k 2^k i_{s_k}, with s_0 < s_1 < ... the qubits other than 1 and j.
struct FontTable {
  int n_qubits = 0;
  int j = 0;
  std::vector<int> spectators;
  std::size_t side = 0;  // 2^(N-2)
  std::vector<cplx> entries;

  cplx at(std::size_t I, std::size_t J) const { return entries[I * side + J]; }
};

// D_{1jIJ} = a_{0 0 I} a_{1 1 J} - a_{1 0 I} a_{0 1 J}: the 2x2 minor with rows i_1 and
// columns (i_j = 0, I), (i_j = 1, J).
FontTable font_table(const PureState& state, int j);

// 2 sum_{I<J} (D_IJ D_JI^* + c.c.)
double coherence_X_pairwise(const FontTable& table);
double coherence_X_pairwise(const PureState& state, int j);

// Pairwise term plus the weight correction 2 sum_{I!=J} (1 - 2/d_IJ) |D_IJ|^2, where d_IJ is the
// number of qubits other than 1 whose index differs between the two columns. Makes
// sum_j (n4(rho_1j) - X_1j) equal the one-tangle for every N; identical to the pairwise term for N = 3.
double coherence_X(const FontTable& table);
double coherence_X(const PureState& state, int j);

struct InvariantSet {
  int j = 0;
  cplx E, B, C, D, F, L, G, K, H0, H1;
};

// Four-qubit pair invariants. With spectators (p, q), p < q, and S = D_IJ + D_JI:
// E, C, B, D are the diagonal fonts at (i_p, i_q) = 00, 10, 01, 11;
// F = S(00,10), L = S(01,11), G = S(00,01), K = S(10,11), H0 = S(00,11), H1 = S(01,10).
InvariantSet invariant_set(const PureState& state, int j);

}  // namespace qtangle
