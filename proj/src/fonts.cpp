#include "qtangle/fonts.hpp"

#include <bit>
#include <string>

#include "qtangle/errors.hpp"
#include "qtangle/numeric.hpp"

namespace qtangle {

FontTable font_table(const PureState& state, int j) {
  const int n = state.n_qubits();
  if (n < 3) throw Error(ErrorKind::BadIndex, "font tables need at least 3 qubits");
  if (j < 2 || j > n) throw Error(ErrorKind::BadIndex, "pair index j must be in 2..N, got " + std::to_string(j));
  FontTable t;
  t.n_qubits = n;
  t.j = j;
  for (int q = 2; q <= n; ++q) {
    if (q != j) t.spectators.push_back(q);
  }
  const std::size_t ns = t.spectators.size();
  t.side = std::size_t{1} << ns;
  std::vector<std::size_t> off(t.side, 0);
  for (std::size_t I = 0; I < t.side; ++I) {
    for (std::size_t k = 0; k < ns; ++k) {
      if ((I >> k) & 1u) off[I] |= std::size_t{1} << (n - t.spectators[k]);
    }
  }
  const std::size_t b1 = std::size_t{1} << (n - 1);
  const std::size_t bj = std::size_t{1} << (n - j);
  t.entries.resize(t.side * t.side);
  for (std::size_t I = 0; I < t.side; ++I) {
    const cplx a00 = state[off[I]];
    const cplx a10 = state[b1 | off[I]];
    for (std::size_t J = 0; J < t.side; ++J) {
      const cplx a11 = state[b1 | bj | off[J]];
      const cplx a01 = state[bj | off[J]];
      t.entries[I * t.side + J] = a00 * a11 - a10 * a01;
    }
  }
  return t;
}

double coherence_X_pairwise(const FontTable& t) {
  CompensatedSum s;
  for (std::size_t I = 0; I < t.side; ++I) {
    for (std::size_t J = I + 1; J < t.side; ++J) s += 4.0 * (t.at(I, J) * std::conj(t.at(J, I))).real();
  }
  return s.value();
}

double coherence_X_pairwise(const PureState& state, int j) { return coherence_X_pairwise(font_table(state, j)); }

double coherence_X(const FontTable& t) {
  CompensatedSum s;
  s += coherence_X_pairwise(t);
  for (std::size_t I = 0; I < t.side; ++I) {
    for (std::size_t J = 0; J < t.side; ++J) {
      if (I == J) continue;
      const double d = 1.0 + std::popcount(I ^ J);
      s += 2.0 * (1.0 - 2.0 / d) * std::norm(t.at(I, J));
    }
  }
  return s.value();
}

double coherence_X(const PureState& state, int j) { return coherence_X(font_table(state, j)); }

InvariantSet invariant_set(const PureState& state, int j) {
  if (state.n_qubits() != 4) throw Error(ErrorKind::BadDim, "invariant sets are defined for 4 qubits");
  if (j < 2 || j > 4) throw Error(ErrorKind::BadIndex, "pair index j must be 2, 3 or 4");
  const FontTable t = font_table(state, j);
  // key = i_p + 2 i_q
  auto S = [&](std::size_t I, std::size_t J) { return t.at(I, J) + t.at(J, I); };
  InvariantSet s;
  s.j = j;
  s.E = t.at(0, 0);
  s.C = t.at(1, 1);
  s.B = t.at(2, 2);
  s.D = t.at(3, 3);
  s.F = S(0, 1);
  s.L = S(2, 3);
  s.G = S(0, 2);
  s.K = S(1, 3);
  s.H0 = S(0, 3);
  s.H1 = S(2, 1);
  return s;
}

}  // namespace qtangle
