#include "rank2_hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qtangle::detail {

namespace {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;

constexpr int kGrid = 1500;
constexpr int kOuter = 16;
constexpr double kCertTol = 1e-10;

// Stereographic chart point: north uses z = x1/x0, south uses zeta = x0/x1.
struct Pt {
  bool south = false;
  cplx z;
  bool root = false;
};

struct Eval {
  double h = 0;
  Eigen::Vector2d grad = Eigen::Vector2d::Zero();
  Vec3 n;
  Eigen::Matrix<double, 3, 2> dn;
};

class Landscape {
 public:
  Landscape(const std::array<cplx, 5>& c, double w1, double w2) : c_(c), w1_(w1), w2_(w2) {}

  Eval eval(const Pt& p) const {
    const double s = p.z.real(), t = p.z.imag(), r = 1.0 + s * s + t * t;
    cplx q = 0, dq = 0;
    for (int k = 4; k >= 0; --k) {
      const cplx ck = p.south ? c_[static_cast<std::size_t>(4 - k)] : c_[static_cast<std::size_t>(k)];
      dq = dq * p.z + q;
      q = q * p.z + ck;
    }
    const double d0 = p.south ? w1_ * (r - 1.0) + w2_ : w1_ + w2_ * (r - 1.0);
    const double wd = p.south ? w1_ : w2_;
    const double d = r * d0;
    const double aq = std::abs(q);
    Eval e;
    e.h = 4.0 * aq / d;
    Eigen::Vector2d gq = Eigen::Vector2d::Zero();
    if (aq > 1e-300) {
      const cplx g = std::conj(q) * dq;
      gq << g.real() / aq, -g.imag() / aq;
    }
    const Eigen::Vector2d gd = 2.0 * Eigen::Vector2d(s, t) * (d0 + r * wd);
    e.grad = 4.0 * (gq * d - aq * gd) / (d * d);
    const double r2 = r * r, sy = p.south ? -1.0 : 1.0, sz = p.south ? 1.0 : -1.0;
    e.n << 2 * s / r, sy * 2 * t / r, p.south ? 1.0 - 2.0 / r : 2.0 / r - 1.0;
    e.dn << (2 * r - 4 * s * s) / r2, -4 * s * t / r2, sy * (-4 * s * t / r2), sy * (2 * r - 4 * t * t) / r2,
        sz * 4 * s / r2, sz * 4 * t / r2;
    return e;
  }

 private:
  std::array<cplx, 5> c_;
  double w1_, w2_;
};

Pt chart(const Vec3& n) {
  if (n.z() >= 0) return {false, cplx(n.x(), n.y()) / (1.0 + n.z())};
  return {true, cplx(n.x(), -n.y()) / (1.0 - n.z())};
}

Eigen::Vector2cd spinor(const Pt& p) {
  Eigen::Vector2cd x = p.south ? Eigen::Vector2cd(p.z, 1.0) : Eigen::Vector2cd(1.0, p.z);
  return x.normalized();
}

std::vector<Pt> roots(const std::array<cplx, 5>& c) {
  double scale = 0;
  for (const auto& x : c) scale = std::max(scale, std::abs(x));
  std::vector<Pt> out;
  if (scale < 1e-300) return out;
  int deg = 4;
  while (deg > 0 && std::abs(c[static_cast<std::size_t>(deg)]) <= 1e-12 * scale) --deg;
  if (deg > 0) {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(deg)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(comp, false);
    if (ces.info() == Eigen::Success) {
      for (int i = 0; i < deg; ++i) {
        const cplx z = ces.eigenvalues()[i];
        out.push_back(std::abs(z) <= 1.0 ? Pt{false, z, true} : Pt{true, 1.0 / z, true});
      }
    }
  }
  for (int i = deg; i < 4; ++i) out.push_back({true, 0.0, true});
  return out;
}

struct Column {
  Pt p;
  double h;
  Vec3 n;
};

struct LpResult {
  bool ok = false;
  double value = 0;
  std::vector<std::size_t> basis;
  Eigen::Vector4d x;     // basic weights
  Eigen::Vector4d dual;  // (a, b)
};

Eigen::Vector4d column_vec(const Column& c) { return {1.0, c.n.x(), c.n.y(), c.n.z()}; }

// min sum p_i h_i subject to sum p_i (1, n_i) = (1, 0), p >= 0, started from a feasible basis.
LpResult simplex(const std::vector<Column>& cols, std::vector<std::size_t> basis) {
  LpResult out;
  const Eigen::Vector4d rhs(1, 0, 0, 0);
  int degenerate = 0;
  for (int iter = 0; iter < 5000; ++iter) {
    Eigen::Matrix4d b;
    Eigen::Vector4d cb;
    for (int i = 0; i < 4; ++i) {
      b.col(i) = column_vec(cols[basis[static_cast<std::size_t>(i)]]);
      cb[i] = cols[basis[static_cast<std::size_t>(i)]].h;
    }
    const Eigen::FullPivLU<Eigen::Matrix4d> lu(b);
    if (!lu.isInvertible()) return out;
    const Eigen::Vector4d x = lu.solve(rhs);
    const Eigen::Vector4d y = b.transpose().fullPivLu().solve(cb);
    std::size_t enter = cols.size();
    double best = -1e-15;
    const bool bland = degenerate > 50;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const double rc = cols[j].h - y.dot(column_vec(cols[j]));
      if (rc < best) {
        enter = j;
        if (bland) break;
        best = rc;
      }
    }
    if (enter == cols.size()) {
      out.ok = true;
      out.basis = basis;
      out.x = x.cwiseMax(0.0);
      out.dual = y;
      out.value = cb.dot(out.x);
      return out;
    }
    const Eigen::Vector4d d = lu.solve(column_vec(cols[enter]));
    int leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
      if (d[i] > 1e-12) {
        const double rt = std::max(0.0, x[i]) / d[i];
        if (rt < ratio - 1e-15 || (rt <= ratio + 1e-15 && leave >= 0 && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          ratio = rt;
          leave = i;
        }
      }
    }
    if (leave < 0) return out;
    degenerate = ratio < 1e-14 ? degenerate + 1 : 0;
    basis[static_cast<std::size_t>(leave)] = enter;
  }
  return out;
}

double angle(const Vec3& a, const Vec3& b) { return std::acos(std::clamp(a.dot(b), -1.0, 1.0)); }

// Local minimum of g(n) = h(n) - b.n by damped Newton in the chart of the start point.
Pt polish(const Landscape& L, Pt p, const Vec3& b) {
  auto g = [&](const Pt& q) {
    const Eval e = L.eval(q);
    return e.h - b.dot(e.n);
  };
  auto grad = [&](const Pt& q) {
    const Eval e = L.eval(q);
    return Eigen::Vector2d(e.grad - e.dn.transpose() * b);
  };
  const Vec3 n0 = L.eval(p).n;
  p = chart(n0);
  for (int it = 0; it < 40; ++it) {
    const Eigen::Vector2d gr = grad(p);
    if (gr.norm() < 1e-15) break;
    const double hs = 1e-6;
    Eigen::Matrix2d hess;
    for (int k = 0; k < 2; ++k) {
      Pt a = p, c = p;
      const cplx dz = k == 0 ? cplx(hs, 0) : cplx(0, hs);
      a.z += dz;
      c.z -= dz;
      hess.col(k) = (grad(a) - grad(c)) / (2 * hs);
    }
    hess = 0.5 * (hess + hess.transpose()).eval();
    Eigen::Vector2d step;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(hess);
    if (es.eigenvalues().minCoeff() > 1e-10) {
      step = -hess.ldlt().solve(gr);
    } else {
      step = -gr;
    }
    const double f0 = g(p);
    double alpha = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 40; ++ls) {
      Pt q = p;
      q.z += alpha * cplx(step[0], step[1]);
      if (g(q) < f0) {
        p = q;
        moved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) break;
    if (std::abs(p.z) > 1.5) p = chart(L.eval(p).n);
  }
  p.root = false;
  return p;
}

struct Kkt {
  bool ok = false;
  std::vector<Pt> pts;
  std::vector<double> q;
  Eigen::Vector4d dual;
  double value = 0;
};

// Newton on the optimality system of the active set: contact h_i = a + b.n_i, stationarity at smooth
// points, and sum q_i (1, n_i) = (1, 0).
Kkt newton(const Landscape& L, std::vector<Pt> pts, std::vector<double> q, Eigen::Vector4d dual) {
  const std::size_t k = pts.size();
  std::vector<std::size_t> smooth;
  for (std::size_t i = 0; i < k; ++i) {
    if (!pts[i].root) smooth.push_back(i);
  }
  const Eigen::Index nv = static_cast<Eigen::Index>(2 * smooth.size() + k + 4);
  auto pack = [&](const std::vector<Pt>& p, const std::vector<double>& w, const Eigen::Vector4d& y) {
    Eigen::VectorXd v(nv);
    Eigen::Index o = 0;
    for (std::size_t i : smooth) {
      v[o++] = p[i].z.real();
      v[o++] = p[i].z.imag();
    }
    for (std::size_t i = 0; i < k; ++i) v[o++] = w[i];
    for (int i = 0; i < 4; ++i) v[o++] = y[i];
    return v;
  };
  auto unpack = [&](const Eigen::VectorXd& v, std::vector<Pt>& p, std::vector<double>& w, Eigen::Vector4d& y) {
    Eigen::Index o = 0;
    for (std::size_t i : smooth) {
      p[i].z = cplx(v[o], v[o + 1]);
      o += 2;
    }
    for (std::size_t i = 0; i < k; ++i) w[i] = v[o++];
    for (int i = 0; i < 4; ++i) y[i] = v[o++];
  };
  auto residual = [&](const Eigen::VectorXd& v) {
    std::vector<Pt> p = pts;
    std::vector<double> w(k);
    Eigen::Vector4d y;
    unpack(v, p, w, y);
    const Vec3 b = y.tail<3>();
    Eigen::VectorXd f(nv);
    Eigen::Index o = 0;
    Eigen::Vector4d feas(-1, 0, 0, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const Eval e = L.eval(p[i]);
      f[o++] = (p[i].root ? 0.0 : e.h) - y[0] - b.dot(e.n);
      if (!p[i].root) {
        const Eigen::Vector2d s = e.grad - e.dn.transpose() * b;
        f[o++] = s[0];
        f[o++] = s[1];
      }
      feas += w[i] * Eigen::Vector4d(1.0, e.n.x(), e.n.y(), e.n.z());
    }
    for (int i = 0; i < 4; ++i) f[o++] = feas[i];
    return f;
  };
  Eigen::VectorXd v = pack(pts, q, dual);
  Eigen::VectorXd f = residual(v);
  for (int it = 0; it < 60 && f.norm() > 1e-15; ++it) {
    Eigen::MatrixXd jac(nv, nv);
    for (Eigen::Index c = 0; c < nv; ++c) {
      const double hs = 1e-7;
      Eigen::VectorXd a = v, b = v;
      a[c] += hs;
      b[c] -= hs;
      jac.col(c) = (residual(a) - residual(b)) / (2 * hs);
    }
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-f);
    double alpha = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls) {
      const Eigen::VectorXd vt = v + alpha * step;
      const Eigen::VectorXd ft = residual(vt);
      if (ft.norm() < f.norm()) {
        v = vt;
        f = ft;
        moved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) break;
  }
  Kkt out;
  out.pts = pts;
  out.q.resize(k);
  unpack(v, out.pts, out.q, out.dual);
  out.ok = f.norm() < 1e-11;
  for (std::size_t i = 0; i < k; ++i) {
    const Eval e = L.eval(out.pts[i]);
    out.value += out.q[i] * (out.pts[i].root ? 0.0 : e.h);
    if (out.q[i] < -1e-12) out.ok = false;
  }
  return out;
}

}  // namespace

HullResult rank2_hull(const std::array<cplx, 5>& coeffs, double w1, double w2) {
  const Landscape L(coeffs, w1, w2);
  std::vector<Column> cols;
  auto add = [&](const Pt& p) {
    const Eval e = L.eval(p);
    cols.push_back({p, p.root ? 0.0 : e.h, e.n});
  };
  const double s3 = 1.0 / std::sqrt(3.0);
  for (const Vec3& t : {Vec3(s3, s3, s3), Vec3(s3, -s3, -s3), Vec3(-s3, s3, -s3), Vec3(-s3, -s3, s3)}) add(chart(t));
  const double golden = std::numbers::pi * (1.0 + std::sqrt(5.0));
  for (int i = 0; i < kGrid; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / kGrid, rho = std::sqrt(1.0 - z * z), th = golden * (i + 0.5);
    add(chart(Vec3(rho * std::cos(th), rho * std::sin(th), z)));
  }
  const std::size_t grid_end = cols.size();
  for (const Pt& r : roots(coeffs)) add(r);

  HullResult out;
  std::vector<std::size_t> basis{0, 1, 2, 3};
  double best_value = std::numeric_limits<double>::infinity();
  for (int outer = 0; outer < kOuter; ++outer) {
    const LpResult lp = simplex(cols, basis);
    if (!lp.ok) break;
    basis = lp.basis;
    if (lp.value < best_value) {
      best_value = lp.value;
      out.value = 2.0 * lp.value;
      out.weights.clear();
      out.spinors.clear();
      for (int i = 0; i < 4; ++i) {
        if (lp.x[i] <= 0) continue;
        out.weights.push_back(lp.x[i]);
        out.spinors.push_back(spinor(cols[lp.basis[static_cast<std::size_t>(i)]].p));
      }
    }

    // Active set: roots as they are, nearby smooth support points merged.
    std::vector<Pt> act;
    std::vector<Vec3> dirs;
    std::vector<double> q;
    for (int i = 0; i < 4; ++i) {
      if (lp.x[i] <= 1e-14) continue;
      const Column& c = cols[lp.basis[static_cast<std::size_t>(i)]];
      bool merged = false;
      for (std::size_t a = 0; a < act.size() && !c.p.root; ++a) {
        if (!act[a].root && angle(dirs[a], c.n) < 0.2) {
          dirs[a] = (q[a] * dirs[a] + lp.x[i] * c.n).normalized();
          q[a] += lp.x[i];
          merged = true;
          break;
        }
      }
      if (merged) continue;
      act.push_back(c.p);
      dirs.push_back(c.n);
      q.push_back(lp.x[i]);
    }
    for (std::size_t a = 0; a < act.size(); ++a) {
      if (!act[a].root) act[a] = chart(dirs[a]);
    }
    const Kkt kkt = newton(L, act, q, lp.dual);

    // Dual check: the slack h(n) - a - b.n must be non-negative on the whole sphere.
    const Eigen::Vector4d y = kkt.ok ? kkt.dual : lp.dual;
    const Vec3 b = y.tail<3>();
    std::vector<std::pair<double, std::size_t>> slack;
    for (std::size_t j = 0; j < grid_end; ++j) slack.emplace_back(cols[j].h - y[0] - b.dot(cols[j].n), j);
    std::partial_sort(slack.begin(), slack.begin() + 24, slack.end());
    double worst = 0.0;
    for (const Column& c : cols) {
      if (c.p.root) worst = std::min(worst, -y[0] - b.dot(c.n));
    }
    // Starts: lowest grid slacks and small rings around each root.
    std::vector<Pt> starts;
    for (std::size_t s = 0; s < 24; ++s) starts.push_back(cols[slack[s].second].p);
    for (std::size_t j = grid_end; j < cols.size(); ++j) {
      if (!cols[j].p.root) continue;
      const Pt c = chart(cols[j].n);
      for (double rad : {1e-6, 1e-4, 1e-2}) {
        for (int k = 0; k < 6; ++k) starts.push_back({c.south, c.z + std::polar(rad, k * std::numbers::pi / 3.0), false});
      }
    }
    std::vector<Pt> fresh;
    for (const Pt& st : starts) {
      const Pt p = polish(L, st, b);
      const Eval e = L.eval(p);
      const double g = e.h - y[0] - b.dot(e.n);
      worst = std::min(worst, g);
      if (g < -kCertTol) fresh.push_back(p);
    }
    if (kkt.ok && worst >= -kCertTol) {
      out.certified = true;
      out.value = 2.0 * kkt.value;
      out.dual_gap = worst;
      out.weights = kkt.q;
      out.spinors.clear();
      for (const Pt& p : kkt.pts) out.spinors.push_back(spinor(p));
      return out;
    }
    out.dual_gap = worst;
    for (int i = 0; i < 4; ++i) {
      const Column& c = cols[lp.basis[static_cast<std::size_t>(i)]];
      if (!c.p.root) fresh.push_back(polish(L, c.p, lp.dual.tail<3>()));
    }
    if (fresh.empty()) break;
    for (const Pt& p : fresh) add(p);
  }
  return out;
}

}  // namespace qtangle::detail
