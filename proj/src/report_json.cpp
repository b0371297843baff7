#include "qtangle/report_json.hpp"

#include "qtangle/errors.hpp"

namespace qtangle {

namespace {

std::string pair_key(const TangleReport& r, int j) {
  return std::to_string(r.label[0]) + std::to_string(r.label[static_cast<std::size_t>(j - 1)]);
}

std::string triple_key(const TangleReport& r, std::size_t t) {
  return std::to_string(r.label[0]) + std::to_string(r.label[static_cast<std::size_t>(kTriples[t][1] - 1)]) +
         std::to_string(r.label[static_cast<std::size_t>(kTriples[t][2] - 1)]);
}

ojson per_pair(const TangleReport& r, const std::array<double, 3>& v) {
  ojson o = ojson::object();
  for (int j = 2; j <= 4; ++j) o[pair_key(r, j)] = v[static_cast<std::size_t>(j - 2)];
  return o;
}

}  // namespace

PureState state_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorKind::BadInput, "state JSON must be an object");
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
      throw Error(ErrorKind::BadInput, "missing integer field n_qubits");
    }
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
      throw Error(ErrorKind::BadInput, "missing array field amplitudes");
    }
    const int n = doc["n_qubits"].get<int>();
    if (n < 2 || n > kMaxQubits) throw Error(ErrorKind::BadInput, "n_qubits must be in 2..12");
    const auto& arr = doc["amplitudes"];
    if (arr.size() != (std::size_t{1} << n)) {
      throw Error(ErrorKind::BadInput, "amplitudes has " + std::to_string(arr.size()) + " entries, expected " +
                                           std::to_string(1 << n));
    }
    CVector v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto& e = arr[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw Error(ErrorKind::BadInput, "amplitude " + std::to_string(k) + " must be [re, im]");
      }
      v[static_cast<Eigen::Index>(k)] = cplx(e[0].get<double>(), e[1].get<double>());
    }
    return PureState(n, v);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroState) throw;
    if (e.kind() == ErrorKind::BadInput) throw;
    throw Error(ErrorKind::BadInput, e.what());
  }
}

PureState state_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("malformed JSON: ") + e.what());
  }
  return state_from_json(doc);
}

ojson amplitudes_to_json(int n_qubits, const CVector& a) {
  ojson o;
  o["n_qubits"] = n_qubits;
  ojson arr = ojson::array();
  for (Eigen::Index k = 0; k < a.size(); ++k) arr.push_back(ojson::array({a[k].real(), a[k].imag()}));
  o["amplitudes"] = arr;
  return o;
}

ojson state_to_json(const PureState& s) { return amplitudes_to_json(s.n_qubits(), s.amplitudes()); }

ojson to_json(const PolyCoeffs& p) {
  ojson o;
  o["n4"] = p.n4;
  o["n8"] = p.n8;
  o["n12"] = p.n12;
  o["n16"] = p.n16;
  o["f16"] = p.f16;
  o["c_value"] = p.c_value;
  o["chi_plus"] = p.chi_plus;
  o["chi_minus"] = p.chi_minus;
  o["chi"] = p.chi();
  return o;
}

ojson to_json(const TangleReport& r) {
  ojson o;
  o["focus_qubit"] = r.focus_qubit;
  o["one_tangle"] = r.one_tangle;
  o["two_tangles"] = per_pair(r, r.two_tangles);
  ojson three = ojson::object();
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& e = r.three_tangles[t];
    ojson x;
    x["estimate"] = e.estimate;
    x["upper_bound"] = e.upper_bound;
    x["method"] = to_string(e.method);
    x["exact"] = e.exact();
    x["improved_on_eigen_ensemble"] = e.improved;
    three[triple_key(r, t)] = x;
  }
  o["three_tangles"] = three;
  ojson four;
  four["tau0"] = r.four.tau0;
  four["tau0_sq"] = r.four.tau0_sq;
  four["tau1"] = r.four.tau1;
  four["tau2"] = per_pair(r, r.four.tau2);
  four["tau3"] = per_pair(r, r.four.tau3);
  o["four_tangles"] = four;
  o["delta"] = per_pair(r, r.deltas.delta);
  o["Delta"] = per_pair(r, r.deltas.Delta);
  o["delta_lower_bound"] = per_pair(r, r.deltas.delta_lower);
  ojson pc = ojson::object();
  for (int j = 2; j <= 4; ++j) pc[pair_key(r, j)] = to_json(r.coeffs[static_cast<std::size_t>(j - 2)]);
  o["poly_coeffs"] = pc;
  return o;
}

ojson to_json(const ConstraintReport& r) {
  ojson arr = ojson::array();
  for (const auto& c : r.records) {
    ojson x;
    x["name"] = c.name;
    x["kind"] = c.kind == ConstraintKind::Equality ? "equality" : "inequality";
    x["lhs"] = c.lhs;
    x["rhs"] = c.rhs;
    x["residual"] = c.residual;
    x["tol"] = c.tol;
    x["pass"] = c.pass;
    x["diagnostic"] = c.diagnostic;
    x["optimizer_values"] = c.optimizer_values;
    if (!c.extras.empty()) {
      ojson e;
      for (const auto& [k, v] : c.extras) e[k] = v;
      x["extras"] = e;
    }
    arr.push_back(x);
  }
  return arr;
}

ojson to_json(const std::vector<Evidence>& rows) {
  ojson arr = ojson::array();
  for (const auto& e : rows) {
    ojson x;
    x["name"] = e.name;
    x["value"] = e.value;
    x["nonzero"] = e.nonzero;
    arr.push_back(x);
  }
  return arr;
}

ojson to_json(const GroupLabel& g) {
  ojson o;
  o["group"] = to_string(g.group);
  o["zero_tol"] = g.zero_tol;
  ojson pred;
  pred["four_way_entangled"] = g.four_way_entangled;
  pred["some_two_tangle_nonzero"] = g.two;
  pred["some_three_tangle_nonzero"] = g.three;
  pred["some_four_tangle_nonzero"] = g.four;
  o["predicates"] = pred;
  o["evidence"] = to_json(g.evidence);
  return o;
}

}  // namespace qtangle
