#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qtangle {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr int kMaxQubits = 12;

// Amplitudes in flat order: qubit 1 is the most significant bit.
class PureState {
 public:
  // Normalizes on construction; renormalized() reports inputs off by more than 1e-12.
  PureState(int n_qubits, CVector amplitudes);

  static PureState basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const CVector& amplitudes() const { return amp_; }
  cplx operator[](std::size_t k) const { return amp_[static_cast<Eigen::Index>(k)]; }
  bool renormalized() const { return renormalized_; }

 private:
  int n_;
  CVector amp_;
  bool renormalized_ = false;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  int n_qubits() const { return n_; }
  const CMatrix& matrix() const { return m_; }
  cplx operator()(std::size_t a, std::size_t b) const {
    return m_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }

 private:
  CMatrix m_;
  int n_;
};

// Ordered list of distinct 1-based qubit labels.
using QubitSubset = std::vector<int>;

CVector normalize(const CVector& amplitudes);
PureState normalize(const PureState& state);

DensityMatrix density(const PureState& state);

// Kept qubits appear in the order given; the first is the most significant.
DensityMatrix partial_trace(const PureState& state, const QubitSubset& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep);

PureState apply_local_unitary(const PureState& state, int qubit, const Mat2& u);

// perm[m-1] is the new position of qubit m.
PureState permute_qubits(const PureState& state, const std::vector<int>& perm);
PureState swap_qubits(const PureState& state, int a, int b);

PureState tensor(const PureState& a, const PureState& b);
PureState apply_cnot(const PureState& state, int control, int target);

// Gaussian amplitudes, then normalized.
PureState random_state(int n_qubits, std::mt19937_64& rng);
// Haar-distributed via QR of a complex Ginibre matrix.
CMatrix random_unitary(int dim, std::mt19937_64& rng);

void check_subset(const QubitSubset& subset, int n_qubits);

}  // namespace qtangle
