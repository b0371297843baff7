#include "qtangle/zoo.hpp"

#include <algorithm>
#include <cmath>

#include "qtangle/errors.hpp"
#include "qtangle/spectral.hpp"
#include "qtangle/tangles.hpp"

namespace qtangle {

namespace {

struct Term {
  const char* bits;
  cplx c;
};

PureState from_terms(std::initializer_list<Term> terms) {
  CVector v = CVector::Zero(16);
  for (const auto& t : terms) v[std::stoi(t.bits, nullptr, 2)] += t.c;
  return PureState(4, v);
}

double param(const Params& p, const std::string& key, double def) {
  auto it = p.find(key);
  return it == p.end() ? def : it->second;
}

void check_keys(const Params& p, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : p) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw Error(ErrorKind::BadParam, "unknown parameter '" + k + "'");
    }
    if (!std::isfinite(v)) throw Error(ErrorKind::BadParam, "parameter '" + k + "' is not finite");
  }
}

Evidence ev(std::string name, double value, double tol) { return {std::move(name), value, value > tol}; }

}  // namespace

const char* to_string(ZooName name) {
  switch (name) {
    case ZooName::GHZ4: return "GHZ4";
    case ZooName::CLUSTER: return "CLUSTER";
    case ZooName::BELL_PRODUCT: return "BELL_PRODUCT";
    case ZooName::L_AIA: return "L_AIA";
    case ZooName::CHI: return "CHI";
    case ZooName::PSI_S: return "PSI_S";
    case ZooName::W_TILDE: return "W_TILDE";
    case ZooName::W4: return "W4";
  }
  return "?";
}

std::vector<ZooName> all_zoo_names() {
  return {ZooName::GHZ4, ZooName::CLUSTER, ZooName::BELL_PRODUCT, ZooName::L_AIA,
          ZooName::CHI,  ZooName::PSI_S,   ZooName::W_TILDE,      ZooName::W4};
}

std::optional<ZooName> parse_zoo_name(const std::string& s) {
  for (ZooName n : all_zoo_names()) {
    if (s == to_string(n)) return n;
  }
  return std::nullopt;
}

const char* to_string(Group g) {
  switch (g) {
    case Group::I: return "I";
    case Group::II: return "II";
    case Group::III: return "III";
    case Group::IV: return "IV";
    case Group::NOT_4WAY_ENTANGLED: return "NOT_4WAY_ENTANGLED";
    case Group::UNASSIGNED: return "UNASSIGNED";
  }
  return "?";
}

NamedState make(ZooName name, const Params& p) {
  const cplx i(0.0, 1.0);
  switch (name) {
    case ZooName::GHZ4:
      check_keys(p, {});
      return {name, p, from_terms({{"0000", 1.0}, {"1111", 1.0}})};
    case ZooName::CLUSTER:
      check_keys(p, {});
      return {name, p, from_terms({{"0000", 1.0}, {"1100", 1.0}, {"0011", 1.0}, {"1111", -1.0}})};
    case ZooName::BELL_PRODUCT:
      check_keys(p, {});
      return {name, p, from_terms({{"0000", 1.0}, {"0011", 1.0}, {"1100", 1.0}, {"1111", 1.0}})};
    case ZooName::L_AIA: {
      check_keys(p, {"a"});
      const double a = param(p, "a", 1.0);
      if (a < 0) throw Error(ErrorKind::BadParam, "L_AIA needs a >= 0");
      const cplx h = a * cplx(0.5, 0.5), g = a * cplx(0.5, -0.5);
      return {name, {{"a", a}},
              from_terms({{"0000", h}, {"1111", h}, {"0011", g}, {"1100", g}, {"0101", i * a}, {"1010", i * a}, {"0110", 1.0}})};
    }
    case ZooName::CHI: {
      check_keys(p, {"a0000", "a1101", "a1110"});
      const double x = param(p, "a0000", 0.6), y = param(p, "a1101", 0.5), z = param(p, "a1110", std::sqrt(0.39));
      if (x == 0 && y == 0 && z == 0) throw Error(ErrorKind::BadParam, "CHI amplitudes all zero");
      return {name, {{"a0000", x}, {"a1101", y}, {"a1110", z}}, from_terms({{"0000", x}, {"1101", y}, {"1110", z}})};
    }
    case ZooName::PSI_S: {
      check_keys(p, {"a0000", "a1110"});
      const double x = param(p, "a0000", 0.6), z = param(p, "a1110", 0.8);
      if (x == 0 && z == 0) throw Error(ErrorKind::BadParam, "PSI_S amplitudes all zero");
      return {name, {{"a0000", x}, {"a1110", z}}, from_terms({{"0000", x}, {"1110", z}})};
    }
    case ZooName::W_TILDE:
      check_keys(p, {});
      return {name, p, from_terms({{"0000", 1.0}, {"1100", 1.0}, {"1010", 1.0}, {"1001", 1.0}})};
    case ZooName::W4:
      check_keys(p, {});
      return {name, p, from_terms({{"0001", 1.0}, {"0010", 1.0}, {"0100", 1.0}, {"1000", 1.0}})};
  }
  throw Error(ErrorKind::BadParam, "unknown zoo state");
}

NamedState make(const std::string& name, const Params& params) {
  const auto n = parse_zoo_name(name);
  if (!n) throw Error(ErrorKind::BadParam, "unknown zoo state '" + name + "'");
  return make(*n, params);
}

GroupLabel classify(const PureState& state, double tol, const RoofOptions& opts) {
  if (state.n_qubits() != 4) throw Error(ErrorKind::BadDim, "classification needs a 4-qubit state");
  GroupLabel g;
  g.zero_tol = tol;
  auto& E = g.evidence;

  bool mixed_all = true;
  for (int q = 1; q <= 4; ++q) {
    E.push_back(ev("one_tangle(" + std::to_string(q) + ")", one_tangle(state, q), tol));
    mixed_all = mixed_all && E.back().nonzero;
  }
  // 2|2 cuts: 2 (1 - tr rho^2) of the pair containing qubit 1
  for (int j = 2; j <= 4; ++j) {
    const CMatrix r = partial_trace(state, {1, j}).matrix();
    const double lin = 2.0 * (1.0 - (r * r).trace().real());
    E.push_back(ev("linear_entropy(1" + std::to_string(j) + ")", std::max(0.0, lin), tol));
    mixed_all = mixed_all && E.back().nonzero;
  }
  g.four_way_entangled = mixed_all;

  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      E.push_back(ev("two_tangle(" + std::to_string(a) + std::to_string(b) + ")", two_tangle(partial_trace(state, {a, b})), tol));
      g.two = g.two || E.back().nonzero;
    }
  }
  const std::vector<QubitSubset> triples{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  for (const auto& t : triples) {
    const RoofResult rr = three_tangle_mixed(partial_trace(state, t), opts);
    E.push_back(ev("three_tangle(" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]) + ")", rr.estimate, tol));
    g.three = g.three || E.back().nonzero;
  }
  for (int q = 1; q <= 4; ++q) {
    const FourTangles ft = four_tangles(refocus(state, q));
    std::array<int, 4> label{1, 2, 3, 4};
    std::swap(label[0], label[static_cast<std::size_t>(q - 1)]);
    const std::string f = "[focus " + std::to_string(q) + "]";
    E.push_back(ev("tau0" + f, ft.tau0, tol));
    E.push_back(ev("tau1" + f, ft.tau1, tol));
    for (int j = 2; j <= 4; ++j) {
      const std::string pr = "(" + std::to_string(q) + std::to_string(label[static_cast<std::size_t>(j - 1)]) + ")";
      E.push_back(ev("tau2" + pr, ft.tau2[static_cast<std::size_t>(j - 2)], tol));
      E.push_back(ev("tau3" + pr, ft.tau3[static_cast<std::size_t>(j - 2)], tol));
    }
  }
  for (const auto& e : E) {
    if (e.name.rfind("tau", 0) == 0 && e.nonzero) g.four = true;
  }

  if (!g.four_way_entangled) {
    g.group = Group::NOT_4WAY_ENTANGLED;
  } else if (g.two && g.three && g.four) {
    g.group = Group::I;
  } else if (g.three && !g.two && g.four) {
    g.group = Group::II;
  } else if (g.two && !g.three && g.four) {
    g.group = Group::III;
  } else if (!g.four) {
    g.group = Group::IV;
  } else {
    g.group = Group::UNASSIGNED;
  }
  return g;
}

std::vector<Evidence> table2_check(const PureState& state, double tol, const RoofOptions& opts) {
  const TangleReport rep = analyze_tangles(state, 1, opts);
  std::vector<Evidence> out;
  out.push_back(ev("tau1", rep.four.tau1, tol));
  for (int j = 2; j <= 4; ++j) out.push_back(ev("tau2(1" + std::to_string(j) + ")", rep.four.tau2[static_cast<std::size_t>(j - 2)], tol));
  for (int j = 2; j <= 4; ++j) out.push_back(ev("tau3(1" + std::to_string(j) + ")", rep.four.tau3[static_cast<std::size_t>(j - 2)], tol));
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& e = rep.three_tangles[t];
    out.push_back(ev("three_tangle(1" + std::to_string(e.j) + std::to_string(e.k) + ")", e.estimate, tol));
  }
  for (int j = 2; j <= 4; ++j) {
    const double c = rep.two_tangles[static_cast<std::size_t>(j - 2)];
    out.push_back(ev("two_tangle_sq(1" + std::to_string(j) + ")", c * c, tol));
  }
  for (int j = 2; j <= 4; ++j) out.push_back(ev("n16(1" + std::to_string(j) + ")", rep.coeffs[static_cast<std::size_t>(j - 2)].n16, tol));
  return out;
}

}  // namespace qtangle
