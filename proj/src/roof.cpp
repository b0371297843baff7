#include "qtangle/roof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qtangle/errors.hpp"
#include "qtangle/invariants.hpp"
#include "qtangle/parallel.hpp"
#include "rank2_hull.hpp"

namespace qtangle {

namespace {

using Mat8 = Eigen::Matrix<cplx, 8, 8>;
using Vec8 = Eigen::Matrix<cplx, 8, 1>;

constexpr double kRankTol = 1e-12;

struct Ensemble {
  std::vector<double> w;
  std::vector<Vec8> e;  // orthonormal eigenvectors with w > kRankTol
};

Ensemble eigen_ensemble(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat8> es(Mat8(rho.matrix()));
  if (es.info() != Eigen::Success) throw Error(ErrorKind::NumericalFailure, "eigensolve of 3-qubit marginal failed");
  Ensemble ens;
  for (int k = 7; k >= 0; --k) {
    const double w = es.eigenvalues()[k];
    if (w < -kRankTol * 100) throw Error(ErrorKind::NumericalFailure, "3-qubit marginal has a negative eigenvalue");
    if (w > kRankTol) {
      ens.w.push_back(w);
      ens.e.push_back(es.eigenvectors().col(k));
    }
  }
  return ens;
}

double tangle_unnormalized(const Vec8& v, double p) { return 4.0 * std::abs(i34_amplitudes(v.data())) / (p * p); }

// Decomposition sum_i |v_i><v_i| with v_i = sum_k U_ik sqrt(w_k) e_k.
class Mixer {
 public:
  Mixer(const Ensemble& ens, int m) : m_(m), r_(static_cast<int>(ens.w.size())) {
    psi_.resize(8, r_);
    for (int k = 0; k < r_; ++k) psi_.col(k) = std::sqrt(ens.w[static_cast<std::size_t>(k)]) * ens.e[static_cast<std::size_t>(k)];
  }

  int m() const { return m_; }
  int r() const { return r_; }

  Vec8 vector(const CMatrix& u, int i) const {
    Vec8 v = Vec8::Zero();
    for (int k = 0; k < r_; ++k) v += u(i, k) * psi_.col(k);
    return v;
  }

  double objective(const CMatrix& u) const {
    double f = 0.0;
    for (int i = 0; i < m_; ++i) {
      const Vec8 v = vector(u, i);
      const double p = v.squaredNorm();
      if (p < 1e-300) continue;
      f += 4.0 * std::abs(i34_amplitudes(v.data())) / p;
    }
    return f;
  }

 private:
  int m_, r_;
  Eigen::Matrix<cplx, 8, Eigen::Dynamic> psi_;
};

struct Generator {
  int type;  // 0 phase on column k, 1 and 2 the two rotations of columns k and l
  int k, l;
};

std::vector<Generator> generators(int m, int r) {
  std::vector<Generator> g;
  for (int k = 0; k < r; ++k) g.push_back({0, k, k});
  for (int k = 0; k < r; ++k) {
    for (int l = k + 1; l < m; ++l) {
      g.push_back({1, k, l});
      g.push_back({2, k, l});
    }
  }
  return g;
}

// u <- u * exp(i s E_g)
void rotate(CMatrix& u, const Generator& g, double s) {
  if (g.type == 0) {
    u.col(g.k) *= std::polar(1.0, s);
    return;
  }
  const double c = std::cos(s), sn = std::sin(s);
  cplx rkk = c, rll = c, rkl, rlk;
  if (g.type == 1) {
    rkl = cplx(0, sn);
    rlk = cplx(0, sn);
  } else {
    rkl = sn;
    rlk = -sn;
  }
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const cplx a = u(i, g.k), b = u(i, g.l);
    u(i, g.k) = a * rkk + b * rlk;
    u(i, g.l) = a * rkl + b * rll;
  }
}

struct RunResult {
  double f = 0.0;
  CMatrix u;
};

RunResult descend(const Mixer& mix, CMatrix u, int iterations) {
  const auto gens = generators(mix.m(), mix.r());
  std::vector<double> step(gens.size(), 0.4);
  double f = mix.objective(u);
  CMatrix trial;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      bool moved = false;
      for (double dir : {1.0, -1.0}) {
        trial = u;
        rotate(trial, gens[g], dir * step[g]);
        const double ft = mix.objective(trial);
        if (ft < f) {
          u.swap(trial);
          f = ft;
          step[g] = std::min(1.0, step[g] * 1.5);
          moved = true;
          break;
        }
      }
      if (!moved) step[g] *= 0.5;
    }
    if (*std::max_element(step.begin(), step.end()) < 1e-11) break;
  }
  return {f, u};
}

// Coefficients c_n of P(z) = I34(e1 + z e2), n = 0..4, from samples on the fifth roots of unity.
std::array<cplx, 5> quartic_coefficients(const Vec8& e1, const Vec8& e2) {
  std::array<cplx, 5> samples, c{};
  for (int k = 0; k < 5; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / 5.0);
    const Vec8 v = e1 + z * e2;
    samples[static_cast<std::size_t>(k)] = i34_amplitudes(v.data());
  }
  for (int n = 0; n < 5; ++n) {
    cplx s = 0;
    for (int k = 0; k < 5; ++k) s += samples[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * n * k / 5.0);
    c[static_cast<std::size_t>(n)] = s / 5.0;
  }
  return c;
}

Eigen::Vector3d bloch(const Eigen::Vector2cd& u) {
  return {2.0 * (std::conj(u[0]) * u[1]).real(), 2.0 * (std::conj(u[0]) * u[1]).imag(), std::norm(u[0]) - std::norm(u[1])};
}

// Convex weights of a subset of points summing to the origin, if any.
bool origin_in_hull(const std::vector<Eigen::Vector3d>& pts, std::vector<std::size_t>& subset, Eigen::VectorXd& lambda) {
  const std::size_t n = pts.size();
  double best = 1e-6;
  bool found = false;
  auto try_subset = [&](const std::vector<std::size_t>& idx) {
    const Eigen::Index s = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd a(4, s);
    for (Eigen::Index t = 0; t < s; ++t) {
      a.block<3, 1>(0, t) = pts[idx[static_cast<std::size_t>(t)]];
      a(3, t) = 1.0;
    }
    Eigen::Vector4d b(0, 0, 0, 1);
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    if (x.minCoeff() < -1e-9) return;
    const double res = (a * x - b).norm();
    if (res < best) {
      best = res;
      subset = idx;
      lambda = x.cwiseMax(0.0);
      lambda /= lambda.sum();
      found = true;
    }
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      try_subset({a, b});
      for (std::size_t c = b + 1; c < n; ++c) {
        try_subset({a, b, c});
        for (std::size_t d = c + 1; d < n; ++d) try_subset({a, b, c, d});
      }
    }
  }
  return found;
}

double reconstruction(const Decomposition& dec, const DensityMatrix& rho) {
  CMatrix m = CMatrix::Zero(8, 8);
  for (std::size_t i = 0; i < dec.states.size(); ++i) m += dec.weights[i] * dec.states[i] * dec.states[i].adjoint();
  return (m - rho.matrix()).cwiseAbs().maxCoeff();
}

double average_tangle(const Decomposition& dec) {
  double f = 0.0;
  for (std::size_t i = 0; i < dec.states.size(); ++i) {
    const Vec8 v = dec.states[i];
    f += dec.weights[i] * tangle_unnormalized(v, v.squaredNorm());
  }
  return f;
}

// Rank 2: the zeros of I34 on the range, mapped to the Bloch sphere of the whitened eigenbasis,
// decompose rho into zero-tangle states iff their convex hull contains the origin.
bool zero_certificate(const Ensemble& ens, const DensityMatrix& rho, RoofResult& out) {
  const Vec8& e1 = ens.e[0];
  const Vec8& e2 = ens.e[1];
  const auto c = quartic_coefficients(e1, e2);
  double scale = 0.0;
  for (const auto& x : c) scale = std::max(scale, std::abs(x));
  Decomposition dec;
  if (scale < 1e-13) {
    for (std::size_t k = 0; k < 2; ++k) {
      dec.weights.push_back(ens.w[k]);
      dec.states.push_back(ens.e[k]);
    }
  } else {
    int deg = 4;
    while (deg > 0 && std::abs(c[static_cast<std::size_t>(deg)]) <= 1e-12 * scale) --deg;
    std::vector<Eigen::Vector2cd> roots;
    if (deg > 0) {
      CMatrix comp = CMatrix::Zero(deg, deg);
      for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
      for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(deg)];
      Eigen::ComplexEigenSolver<CMatrix> ces(comp, false);
      if (ces.info() != Eigen::Success) return false;
      for (int i = 0; i < deg; ++i) roots.emplace_back(cplx(1.0), ces.eigenvalues()[i]);
    }
    for (int i = deg; i < 4; ++i) roots.emplace_back(cplx(0.0), cplx(1.0));
    std::vector<Eigen::Vector3d> pts;
    std::vector<Eigen::Vector2cd> white;
    for (const auto& u : roots) {
      Eigen::Vector2cd x(u[0] / std::sqrt(ens.w[0]), u[1] / std::sqrt(ens.w[1]));
      x.normalize();
      white.push_back(x);
      pts.push_back(bloch(x));
    }
    std::vector<std::size_t> subset;
    Eigen::VectorXd lambda;
    if (!origin_in_hull(pts, subset, lambda)) return false;
    for (std::size_t t = 0; t < subset.size(); ++t) {
      const Eigen::Vector2cd& x = white[subset[t]];
      const Eigen::Vector2cd y(std::sqrt(ens.w[0]) * x[0], std::sqrt(ens.w[1]) * x[1]);
      const double p = 2.0 * lambda[static_cast<Eigen::Index>(t)] * y.squaredNorm();
      if (p <= 0.0) continue;
      Vec8 s = y[0] * e1 + y[1] * e2;
      s.normalize();
      dec.weights.push_back(p);
      dec.states.push_back(s);
    }
  }
  const double err = reconstruction(dec, rho);
  const double avg = average_tangle(dec);
  if (err > 1e-6 || avg > 1e-8) return false;
  out.method = RoofMethod::ZeroCertificate;
  out.estimate = avg;
  out.reconstruction_error = err;
  out.decomposition = std::move(dec);
  return true;
}

// Rank 2: the roof is twice the lower convex envelope, at the centre of the whitened Bloch sphere,
// of h(x) = 4 |I34(W x)| / |W x|^2 with W = (sqrt(w1) e1, sqrt(w2) e2).
bool rank2_roof(const Ensemble& ens, const DensityMatrix& rho, RoofResult& out, Decomposition& fallback) {
  const double s1 = std::sqrt(ens.w[0]), s2 = std::sqrt(ens.w[1]);
  const Vec8 f1 = s1 * ens.e[0], f2 = s2 * ens.e[1];
  const detail::HullResult hull = detail::rank2_hull(quartic_coefficients(f1, f2), ens.w[0], ens.w[1]);
  Decomposition dec;
  for (std::size_t i = 0; i < hull.weights.size(); ++i) {
    const Vec8 v = hull.spinors[i][0] * f1 + hull.spinors[i][1] * f2;
    const double p = 2.0 * hull.weights[i] * v.squaredNorm();
    if (p <= 0.0) continue;
    dec.weights.push_back(p);
    dec.states.push_back(v.normalized());
  }
  const double err = dec.states.empty() ? 1.0 : reconstruction(dec, rho);
  if (!hull.certified || err > 1e-9) {
    if (err <= 1e-6) fallback = std::move(dec);
    return false;
  }
  out.method = RoofMethod::Rank2Hull;
  out.estimate = average_tangle(dec);
  out.reconstruction_error = err;
  out.best_size = static_cast<int>(dec.states.size());
  out.decomposition = std::move(dec);
  out.improved = out.estimate < out.eigen_value - 1e-12;
  return true;
}

}  // namespace

const char* to_string(RoofMethod m) {
  switch (m) {
    case RoofMethod::Pure: return "pure";
    case RoofMethod::ZeroCertificate: return "zero_certificate";
    case RoofMethod::Rank2Hull: return "rank2_hull";
    case RoofMethod::Optimizer: return "optimizer";
  }
  return "unknown";
}

double three_tangle_pure(const PureState& state) { return 4.0 * std::abs(i34_pure3(state)); }

RoofResult three_tangle_mixed(const DensityMatrix& rho, const RoofOptions& opts) {
  if (rho.dim() != 8) throw Error(ErrorKind::BadDim, "expected an 8x8 density matrix");
  if (opts.restarts < 1 || opts.iterations < 0) throw Error(ErrorKind::BadParam, "restarts must be >= 1");
  const Ensemble ens = eigen_ensemble(rho);
  const int r = static_cast<int>(ens.w.size());
  if (r == 0) throw Error(ErrorKind::NumericalFailure, "marginal has no positive eigenvalue");

  RoofResult out;
  for (int k = 0; k < r; ++k) {
    const Vec8& e = ens.e[static_cast<std::size_t>(k)];
    out.eigen_value += ens.w[static_cast<std::size_t>(k)] * tangle_unnormalized(e, 1.0);
  }

  if (r == 1) {
    out.method = RoofMethod::Pure;
    out.estimate = out.eigen_value;
    out.decomposition.weights = {1.0};
    out.decomposition.states = {ens.e[0]};
    out.reconstruction_error = reconstruction(out.decomposition, rho);
    out.best_size = 1;
    return out;
  }
  if (r == 2 && opts.zero_certificate && zero_certificate(ens, rho, out)) {
    out.best_size = static_cast<int>(out.decomposition.states.size());
    return out;
  }
  Decomposition hull_fallback;
  if (r == 2 && opts.rank2_hull && rank2_roof(ens, rho, out, hull_fallback)) return out;

  std::vector<int> sizes;
  for (int m : opts.sizes) sizes.push_back(std::max(m, r));
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  struct Task {
    int m;
    std::uint64_t index;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    for (int k = 0; k < opts.restarts; ++k) tasks.push_back({sizes[s], s * static_cast<std::uint64_t>(opts.restarts) + static_cast<std::uint64_t>(k)});
  }
  std::vector<RunResult> results(tasks.size());
  auto run = [&](std::size_t t) {
    const Mixer mix(ens, tasks[t].m);
    std::mt19937_64 rng(opts.seed + tasks[t].index);
    results[t] = descend(mix, random_unitary(tasks[t].m, rng), opts.iterations);
  };
  parallel_for(tasks.size(), opts.threads, run);

  std::size_t best = 0;
  for (std::size_t t = 1; t < results.size(); ++t) {
    if (results[t].f < results[best].f) best = t;
  }
  const Mixer mix(ens, tasks[best].m);
  Decomposition dec;
  for (int i = 0; i < mix.m(); ++i) {
    const Vec8 v = mix.vector(results[best].u, i);
    const double p = v.squaredNorm();
    if (p < 1e-300) continue;
    dec.weights.push_back(p);
    dec.states.push_back(v / std::sqrt(p));
  }
  out.method = RoofMethod::Optimizer;
  out.estimate = average_tangle(dec);
  out.reconstruction_error = reconstruction(dec, rho);
  out.decomposition = std::move(dec);
  out.best_size = tasks[best].m;
  out.improved = out.estimate < out.eigen_value - 1e-12;
  if (!hull_fallback.states.empty() && average_tangle(hull_fallback) < out.estimate) {
    out.estimate = average_tangle(hull_fallback);
    out.reconstruction_error = reconstruction(hull_fallback, rho);
    out.best_size = static_cast<int>(hull_fallback.states.size());
    out.decomposition = std::move(hull_fallback);
  }
  if (out.eigen_value < out.estimate) {
    out.decomposition.weights = ens.w;
    out.decomposition.states.assign(ens.e.begin(), ens.e.end());
    out.estimate = out.eigen_value;
    out.reconstruction_error = reconstruction(out.decomposition, rho);
    out.best_size = r;
  }
  return out;
}

}  // namespace qtangle
