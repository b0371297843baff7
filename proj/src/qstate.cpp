#include "qtangle/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtangle/errors.hpp"

namespace qtangle {

namespace {

int log2_exact(std::size_t dim) {
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) return -1;
  return n;
}

// Offsets of all configurations of the given qubits, first listed qubit most significant.
std::vector<std::size_t> offsets(const std::vector<int>& qubits, int n) {
  const std::size_t k = qubits.size();
  std::vector<std::size_t> off(std::size_t{1} << k, 0);
  for (std::size_t c = 0; c < off.size(); ++c) {
    std::size_t o = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if ((c >> (k - 1 - t)) & 1u) o |= std::size_t{1} << (n - qubits[t]);
    }
    off[c] = o;
  }
  return off;
}

std::vector<int> complement(const QubitSubset& keep, int n) {
  std::vector<int> rest;
  for (int q = 1; q <= n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  }
  return rest;
}

}  // namespace

PureState::PureState(int n_qubits, CVector amplitudes) : n_(n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw Error(ErrorKind::BadDim, "n_qubits must be in 2..12, got " + std::to_string(n_qubits));
  }
  if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) {
    throw Error(ErrorKind::BadDim, "expected " + std::to_string(1 << n_qubits) + " amplitudes, got " +
                                       std::to_string(amplitudes.size()));
  }
  const double nrm2 = amplitudes.squaredNorm();
  renormalized_ = std::abs(nrm2 - 1.0) > 1e-12;
  amp_ = normalize(amplitudes);
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) throw Error(ErrorKind::BadDim, "bad qubit count");
  CVector v = CVector::Zero(Eigen::Index{1} << n_qubits);
  if (index >= static_cast<std::size_t>(v.size())) throw Error(ErrorKind::BadIndex, "basis index out of range");
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(n_qubits, v);
}

DensityMatrix::DensityMatrix(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || (n_ = log2_exact(static_cast<std::size_t>(m_.rows()))) < 1) {
    throw Error(ErrorKind::BadDim, "density matrix must be square with power-of-two dimension");
  }
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) throw Error(ErrorKind::BadInput, "density matrix not Hermitian");
  if (std::abs(m_.trace() - cplx(1.0)) > 1e-12) throw Error(ErrorKind::BadInput, "density matrix trace != 1");
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
}

CVector normalize(const CVector& amplitudes) {
  const double nrm = amplitudes.norm();
  if (!(nrm >= 1e-14)) throw Error(ErrorKind::ZeroState, "amplitude vector has zero norm");
  return amplitudes / nrm;
}

PureState normalize(const PureState& state) { return PureState(state.n_qubits(), normalize(state.amplitudes())); }

DensityMatrix density(const PureState& state) {
  const CVector& a = state.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

void check_subset(const QubitSubset& subset, int n_qubits) {
  std::vector<bool> seen(static_cast<std::size_t>(n_qubits) + 1, false);
  for (int q : subset) {
    if (q < 1 || q > n_qubits) throw Error(ErrorKind::BadSubset, "qubit " + std::to_string(q) + " out of range");
    if (seen[static_cast<std::size_t>(q)]) throw Error(ErrorKind::BadSubset, "repeated qubit " + std::to_string(q));
    seen[static_cast<std::size_t>(q)] = true;
  }
}

DensityMatrix partial_trace(const PureState& state, const QubitSubset& keep) {
  const int n = state.n_qubits();
  check_subset(keep, n);
  if (keep.empty() || static_cast<int>(keep.size()) >= n) {
    throw Error(ErrorKind::BadSubset, "keep must be a nonempty proper subset");
  }
  const auto ka = offsets(keep, n);
  const auto kr = offsets(complement(keep, n), n);
  const Eigen::Index d = static_cast<Eigen::Index>(ka.size());
  CMatrix rho = CMatrix::Zero(d, d);
  const CVector& psi = state.amplitudes();
  for (std::size_t r : kr) {
    for (Eigen::Index a = 0; a < d; ++a) {
      const cplx x = psi[static_cast<Eigen::Index>(ka[a] | r)];
      if (x == cplx(0.0)) continue;
      for (Eigen::Index b = 0; b < d; ++b) {
        rho(a, b) += x * std::conj(psi[static_cast<Eigen::Index>(ka[b] | r)]);
      }
    }
  }
  return DensityMatrix(rho);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
  const int n = rho.n_qubits();
  check_subset(keep, n);
  if (keep.empty() || static_cast<int>(keep.size()) >= n) {
    throw Error(ErrorKind::BadSubset, "keep must be a nonempty proper subset");
  }
  const auto ka = offsets(keep, n);
  const auto kr = offsets(complement(keep, n), n);
  const Eigen::Index d = static_cast<Eigen::Index>(ka.size());
  CMatrix out = CMatrix::Zero(d, d);
  const CMatrix& m = rho.matrix();
  for (std::size_t r : kr) {
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        out(a, b) += m(static_cast<Eigen::Index>(ka[a] | r), static_cast<Eigen::Index>(ka[b] | r));
      }
    }
  }
  return DensityMatrix(out);
}

PureState apply_local_unitary(const PureState& state, int qubit, const Mat2& u) {
  const int n = state.n_qubits();
  if (qubit < 1 || qubit > n) throw Error(ErrorKind::BadIndex, "qubit out of range");
  if ((u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::NotUnitary, "2x2 matrix is not unitary within 1e-10");
  }
  const std::size_t bit = std::size_t{1} << (n - qubit);
  CVector out = state.amplitudes();
  for (std::size_t k = 0; k < state.dim(); ++k) {
    if (k & bit) continue;
    const cplx a0 = state[k], a1 = state[k | bit];
    out[static_cast<Eigen::Index>(k)] = u(0, 0) * a0 + u(0, 1) * a1;
    out[static_cast<Eigen::Index>(k | bit)] = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return PureState(n, out);
}

PureState permute_qubits(const PureState& state, const std::vector<int>& perm) {
  const int n = state.n_qubits();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorKind::BadPermutation, "permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]) {
      throw Error(ErrorKind::BadPermutation, "not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  CVector out(static_cast<Eigen::Index>(state.dim()));
  for (std::size_t k = 0; k < state.dim(); ++k) {
    std::size_t t = 0;
    for (int m = 1; m <= n; ++m) {
      if ((k >> (n - m)) & 1u) t |= std::size_t{1} << (n - perm[static_cast<std::size_t>(m - 1)]);
    }
    out[static_cast<Eigen::Index>(t)] = state[k];
  }
  return PureState(n, out);
}

PureState swap_qubits(const PureState& state, int a, int b) {
  std::vector<int> perm(static_cast<std::size_t>(state.n_qubits()));
  for (int m = 1; m <= state.n_qubits(); ++m) perm[static_cast<std::size_t>(m - 1)] = m;
  if (a < 1 || b < 1 || a > state.n_qubits() || b > state.n_qubits()) {
    throw Error(ErrorKind::BadPermutation, "swap index out of range");
  }
  std::swap(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(b - 1)]);
  return permute_qubits(state, perm);
}

PureState tensor(const PureState& a, const PureState& b) {
  const int n = a.n_qubits() + b.n_qubits();
  if (n > kMaxQubits) throw Error(ErrorKind::BadDim, "tensor product exceeds 12 qubits");
  CVector out(static_cast<Eigen::Index>(a.dim() * b.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) out[static_cast<Eigen::Index>(i * b.dim() + j)] = a[i] * b[j];
  }
  return PureState(n, out);
}

PureState apply_cnot(const PureState& state, int control, int target) {
  const int n = state.n_qubits();
  if (control < 1 || control > n || target < 1 || target > n || control == target) {
    throw Error(ErrorKind::BadIndex, "bad CNOT qubits");
  }
  const std::size_t cb = std::size_t{1} << (n - control);
  const std::size_t tb = std::size_t{1} << (n - target);
  CVector out = state.amplitudes();
  for (std::size_t k = 0; k < state.dim(); ++k) {
    if ((k & cb) && !(k & tb)) std::swap(out[static_cast<Eigen::Index>(k)], out[static_cast<Eigen::Index>(k | tb)]);
  }
  return PureState(n, out);
}

PureState random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double re = g(rng);
    const double im = g(rng);
    v[k] = cplx(re, im);
  }
  return PureState(n_qubits, v);
}

CMatrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      z(i, j) = cplx(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    const double ad = std::abs(d);
    if (ad > 0) q.col(j) *= d / ad;
  }
  return q;
}

}  // namespace qtangle
