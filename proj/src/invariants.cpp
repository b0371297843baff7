#include "qtangle/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtangle/errors.hpp"
#include "qtangle/numeric.hpp"

namespace qtangle {

namespace {

void require_four(const PureState& state) {
  if (state.n_qubits() != 4) throw Error(ErrorKind::BadDim, "expected a 4-qubit state");
}

void require_pair(int j) {
  if (j < 2 || j > 4) throw Error(ErrorKind::BadIndex, "pair index j must be 2, 3 or 4");
}

// Three-qubit fonts of a[i1 i2 i3].
inline cplx at3(const cplx* a, int i1, int i2, int i3) { return a[(i1 << 2) | (i2 << 1) | i3]; }

cplx i34_second_form(const cplx* a) {
  auto d = [&](int i3) { return at3(a, 0, 0, i3) * at3(a, 1, 1, i3 ^ 1) - at3(a, 1, 0, i3) * at3(a, 0, 1, i3 ^ 1); };
  auto d2 = [&](int i2) { return at3(a, 0, i2, 0) * at3(a, 1, i2, 1) - at3(a, 1, i2, 0) * at3(a, 0, i2, 1); };
  const cplx m = d(0) - d(1);
  return m * m - 4.0 * d2(0) * d2(1);
}

PureState refocus_triple(const PureState& state, const QubitSubset& triple) {
  require_four(state);
  check_subset(triple, 4);
  if (triple.size() != 3 || std::find(triple.begin(), triple.end(), 1) == triple.end()) {
    throw Error(ErrorKind::BadSubset, "triple must have three qubits including qubit 1");
  }
  QubitSubset t = triple;
  std::sort(t.begin(), t.end());
  int traced = 10 - t[0] - t[1] - t[2];
  std::vector<int> perm(4);
  perm[static_cast<std::size_t>(t[1] - 1)] = 2;
  perm[static_cast<std::size_t>(t[2] - 1)] = 3;
  perm[0] = 1;
  perm[static_cast<std::size_t>(traced - 1)] = 4;
  return permute_qubits(state, perm);
}

}  // namespace

int triple_index(int j, int k) {
  if (j > k) std::swap(j, k);
  for (int t = 0; t < 3; ++t) {
    if (kTriples[static_cast<std::size_t>(t)][1] == j && kTriples[static_cast<std::size_t>(t)][2] == k) return t;
  }
  throw Error(ErrorKind::BadIndex, "no triple {1," + std::to_string(j) + "," + std::to_string(k) + "}");
}

std::array<int, 2> triples_of_pair(int j) {
  require_pair(j);
  std::array<int, 2> out{};
  int n = 0;
  for (int k = 2; k <= 4; ++k) {
    if (k != j) out[static_cast<std::size_t>(n++)] = triple_index(j, k);
  }
  return out;
}

cplx i34_amplitudes(const cplx* a) {
  auto d = [&](int i3) { return at3(a, 0, 0, i3) * at3(a, 1, 1, i3 ^ 1) - at3(a, 1, 0, i3) * at3(a, 0, 1, i3 ^ 1); };
  auto d3 = [&](int i3) { return at3(a, 0, 0, i3) * at3(a, 1, 1, i3) - at3(a, 1, 0, i3) * at3(a, 0, 1, i3); };
  const cplx s = d(0) + d(1);
  return s * s - 4.0 * d3(0) * d3(1);
}

cplx i34_pure3(const PureState& state) {
  if (state.n_qubits() != 3) throw Error(ErrorKind::BadDim, "expected a 3-qubit state");
  const cplx* a = state.amplitudes().data();
  const cplx first = i34_amplitudes(a);
  const cplx second = i34_second_form(a);
  if (std::abs(first - second) > 1e-8) {
    throw Error(ErrorKind::InternalMismatch, "the two forms of I34 disagree");
  }
  return first;
}

SliceInvariants slice_invariants(const InvariantSet& s) {
  const cplx H = s.H0 + s.H1;
  SliceInvariants v;
  v.i40 = s.F * s.F - 4.0 * s.E * s.C;
  v.i04 = s.L * s.L - 4.0 * s.B * s.D;
  v.i31 = 0.5 * H * s.F - (s.E * s.K + s.C * s.G);
  v.i13 = 0.5 * H * s.L - (s.B * s.K + s.D * s.G);
  v.i22 = H * H / 6.0 - (2.0 / 3.0) * s.G * s.K + s.F * s.L / 3.0 - (2.0 / 3.0) * (s.E * s.D + s.B * s.C);
  return v;
}

SliceInvariants three_qubit_slice_invariants(const PureState& state, const QubitSubset& triple) {
  return slice_invariants(invariant_set(refocus_triple(state, triple), 2));
}

double n48_from_slices(const SliceInvariants& v) {
  CompensatedSum s;
  s += std::norm(v.i40);
  s += 4.0 * std::norm(v.i31);
  s += 6.0 * std::norm(v.i22);
  s += 4.0 * std::norm(v.i13);
  s += std::norm(v.i04);
  return s.value();
}

double n48_form_a(const InvariantSet& s) {
  const cplx H = s.H0 + s.H1;
  CompensatedSum t;
  t += std::norm(s.F * s.F - 4.0 * s.E * s.C);
  t += std::norm(H * s.F - 2.0 * s.E * s.K - 2.0 * s.C * s.G);
  t += std::norm(H * H - 4.0 * s.G * s.K + 2.0 * s.F * s.L - 4.0 * s.B * s.C - 4.0 * s.E * s.D) / 6.0;
  t += std::norm(H * s.L - 2.0 * s.G * s.D - 2.0 * s.B * s.K);
  t += std::norm(s.L * s.L - 4.0 * s.B * s.D);
  return t.value();
}

double n48_form_b(const InvariantSet& s) {
  const cplx H = s.H0 + s.H1;
  CompensatedSum t;
  t += std::norm(s.G * s.G - 4.0 * s.E * s.B);
  t += std::norm(H * s.G - 2.0 * s.E * s.L - 2.0 * s.B * s.F);
  t += std::norm(H * H + 2.0 * s.G * s.K - 4.0 * s.F * s.L - 4.0 * s.E * s.D - 4.0 * s.B * s.C) / 6.0;
  t += std::norm(H * s.K - 2.0 * s.F * s.D - 2.0 * s.C * s.L);
  t += std::norm(s.K * s.K - 4.0 * s.C * s.D);
  return t.value();
}

cplx p_invariant(const InvariantSet& s) {
  const cplx H = s.H0 + s.H1;
  return H * H - 4.0 * s.F * s.L - 4.0 * s.G * s.K + 8.0 * s.E * s.D + 8.0 * s.B * s.C;
}

double m48_invariant(const InvariantSet& s) {
  const cplx dh = s.H1 - s.H0;
  const auto& [j, E, B, C, D, F, L, G, K, H0, H1] = s;
  (void)j;
  CompensatedSum t;
  t += 2.0 * std::norm(F * G - 2.0 * E * H1);
  t += std::norm(dh * G + 2.0 * E * L - 2.0 * B * F);
  t += 2.0 * std::norm(G * L - 2.0 * B * H0);
  t += std::norm(dh * F + 2.0 * E * K - 2.0 * C * G);
  t += 0.5 * std::norm(H1 * H1 - H0 * H0 + 4.0 * E * D - 4.0 * B * C);
  t += std::norm(dh * L + 2.0 * G * D - 2.0 * B * K);
  t += 2.0 * std::norm(F * K - 2.0 * C * H0);
  t += std::norm(dh * K + 2.0 * F * D - 2.0 * C * L);
  t += 2.0 * std::norm(K * L - 2.0 * D * H1);
  return t.value();
}

FourQubitInvariants four_invariants(const PureState& state) {
  require_four(state);
  FourQubitInvariants inv;
  std::array<InvariantSet, 3> sets;
  for (int j = 2; j <= 4; ++j) sets[static_cast<std::size_t>(j - 2)] = invariant_set(state, j);
  inv.i42 = sets[0].H0 - sets[0].H1;
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& tr = kTriples[t];
    const SliceInvariants v = three_qubit_slice_invariants(state, {tr[0], tr[1], tr[2]});
    inv.n48[t] = n48_from_slices(v);
    if (t == 0) inv.i48 = 3.0 * v.i22 * v.i22 - 4.0 * v.i31 * v.i13 + v.i40 * v.i04;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    inv.p[k] = p_invariant(sets[k]);
    inv.m48[k] = m48_invariant(sets[k]);
  }
  return inv;
}

double n4_structural(const InvariantSet& s) {
  CompensatedSum t;
  t += 4.0 * (std::norm(s.E) + std::norm(s.B) + std::norm(s.C) + std::norm(s.D));
  t += 2.0 * (std::norm(s.G) + std::norm(s.K));
  t += 2.0 * (std::norm(s.F) + std::norm(s.L));
  t += std::norm(s.H0 + s.H1);
  t += std::norm(s.H0 - s.H1);
  return t.value();
}

double n4_structural(const PureState& state, int j) { return n4_structural(invariant_set(state, j)); }

double n8_structural(const InvariantSet& s) {
  const auto& [j, E, B, C, D, F, L, G, K, H0, H1] = s;
  (void)j;
  CompensatedSum t;
  t += std::norm(G * G - 4.0 * E * B);
  t += std::norm(K * K - 4.0 * C * D);
  t += std::norm(F * F - 4.0 * E * C);
  t += std::norm(L * L - 4.0 * B * D);
  t += std::norm(H0 * H0 - 4.0 * E * D);
  t += std::norm(H1 * H1 - 4.0 * B * C);
  t += 2.0 * std::norm(G * K - F * L);
  t += 2.0 * std::norm(H0 * H1 - G * K);
  t += 2.0 * std::norm(H0 * H1 - F * L);
  t += 2.0 * std::norm(F * G - 2.0 * E * H1);
  t += 2.0 * std::norm(F * K - 2.0 * C * H0);
  t += 2.0 * std::norm(G * L - 2.0 * B * H0);
  t += 2.0 * std::norm(K * L - 2.0 * H1 * D);
  t += 2.0 * std::norm(H0 * F - 2.0 * E * K);
  t += 2.0 * std::norm(H0 * G - 2.0 * E * L);
  t += 2.0 * std::norm(H0 * K - 2.0 * F * D);
  t += 2.0 * std::norm(H0 * L - 2.0 * G * D);
  t += 2.0 * std::norm(H1 * F - 2.0 * C * G);
  t += 2.0 * std::norm(H1 * K - 2.0 * C * L);
  t += 2.0 * std::norm(H1 * G - 2.0 * B * F);
  t += 2.0 * std::norm(H1 * L - 2.0 * B * K);
  return t.value();
}

double n8_structural(const PureState& state, int j) { return n8_structural(invariant_set(state, j)); }

double n8_decomposition(const FourQubitInvariants& inv, int j) {
  require_pair(j);
  const auto tr = triples_of_pair(j);
  const std::size_t k = static_cast<std::size_t>(j - 2);
  CompensatedSum t;
  t += inv.n48[static_cast<std::size_t>(tr[0])];
  t += inv.n48[static_cast<std::size_t>(tr[1])];
  t += std::norm(3.0 * inv.i42 * inv.i42 - inv.p[k]) / 24.0;
  t += inv.m48[k];
  return t.value();
}

double n8_decomposition(const PureState& state, int j) { return n8_decomposition(four_invariants(state), j); }

}  // namespace qtangle
