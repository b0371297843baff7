#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtangle/errors.hpp"
#include "qtangle/fonts.hpp"
#include "qtangle/monogamy.hpp"
#include "qtangle/report_json.hpp"
#include "qtangle/tangles.hpp"
#include "qtangle/transfer.hpp"
#include "qtangle/zoo.hpp"
#include "selftest.hpp"

using namespace qtangle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFail = 2;

struct Source {
  std::string file;
  std::string zoo;
  std::vector<std::string> params;
};

struct Loaded {
  PureState state;
  ojson echo;
};

Params parse_params(const std::vector<std::string>& kv) {
  Params p;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::BadParam, "parameter '" + s + "' is not key=value");
    const std::string key = s.substr(0, eq), val = s.substr(eq + 1);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size()) throw Error(ErrorKind::BadParam, "parameter '" + key + "' has a non-numeric value");
    p[key] = v;
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const Source& src) {
  if (src.file.empty() == src.zoo.empty()) throw Error(ErrorKind::BadInput, "give exactly one of --state or --zoo");
  if (!src.file.empty()) {
    if (!src.params.empty()) throw Error(ErrorKind::BadInput, "--param applies only to --zoo");
    const std::string text = read_file(src.file);
    PureState s = state_from_json_text(text);
    ojson echo;
    echo["source"] = "file";
    echo["path"] = src.file;
    echo["state"] = ojson::parse(text);
    echo["renormalized"] = s.renormalized();
    return {s, echo};
  }
  const NamedState ns = make(src.zoo, parse_params(src.params));
  ojson echo;
  echo["source"] = "zoo";
  echo["name"] = to_string(ns.name);
  ojson p = ojson::object();
  for (const auto& [k, v] : ns.params) p[k] = v;
  echo["params"] = p;
  echo["state"] = state_to_json(ns.state);
  echo["renormalized"] = false;
  return {ns.state, echo};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write " + path);
  out << text;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> grid(double lo, double hi, int points) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || points < 1 || hi < lo || (points == 1 && hi != lo)) {
    throw Error(ErrorKind::BadParam, "invalid range or point count");
  }
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return g;
}

void add_roof_options(CLI::App* app, RoofOptions& roof) {
  app->add_option("--seed", roof.seed, "Base seed for optimizer restarts");
  app->add_option("--restarts", roof.restarts, "Optimizer restarts per decomposition size")->check(CLI::PositiveNumber);
  app->add_option("--iterations", roof.iterations, "Coordinate-descent sweeps per restart")->check(CLI::NonNegativeNumber);
  app->add_option("--threads", roof.threads, "Worker threads")->check(CLI::PositiveNumber);
}

// Reports for states other than four qubits.
int analyze_general(const Loaded& in, const std::string& out_path) {
  const PureState& s = in.state;
  const int n = s.n_qubits();
  if (n < 3) throw Error(ErrorKind::BadInput, "analysis needs at least 3 qubits");
  ojson doc;
  doc["input"] = in.echo;
  doc["focus"] = 1;
  ojson t;
  t["one_tangle"] = one_tangle(s, 1);
  ojson two = ojson::object(), pc = ojson::object(), coh = ojson::object();
  double sum = 0;
  for (int j = 2; j <= n; ++j) {
    const DensityMatrix rho = partial_trace(s, {1, j});
    const PolyCoeffs p = poly_coeffs(rho);
    const double x = coherence_X(s, j);
    const std::string key = "1" + std::to_string(j);
    two[key] = std::max(0.0, p.c_value);
    pc[key] = to_json(p);
    coh[key] = x;
    sum += p.n4 - x;
  }
  t["two_tangles"] = two;
  t["coherence_X"] = coh;
  if (n == 3) t["three_tangle"] = three_tangle_pure(s);
  doc["tangles"] = t;
  doc["poly_coeffs"] = pc;
  ConstraintReport rep;
  if (n == 3) rep = evaluate_constraints_3q(s);
  ConstraintRecord c;
  c.name = "EQ_1TANN4N";
  c.lhs = one_tangle(s, 1);
  c.rhs = sum;
  c.residual = c.lhs - c.rhs;
  c.pass = std::abs(c.residual) <= c.tol;
  rep.records.push_back(c);
  doc["constraints"] = to_json(rep);
  emit(out_path, doc.dump(2) + "\n");
  return rep.equalities_pass() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangles, monogamy constraints and classification of few-qubit pure states"};
  app.require_subcommand(1);

  Source src;
  RoofOptions roof;
  int focus = 1;
  std::string json_out;
  double tol = 1e-6;
  auto* analyze = app.add_subcommand("analyze", "Full tangle and constraint report as JSON");
  analyze->add_option("--state", src.file, "State JSON file");
  analyze->add_option("--zoo", src.zoo, "Named state: GHZ4 CLUSTER BELL_PRODUCT L_AIA CHI PSI_S W_TILDE W4");
  analyze->add_option("--param", src.params, "Zoo parameter key=value (repeatable)");
  analyze->add_option("--focus", focus, "Focus qubit")->check(CLI::Range(1, 4));
  analyze->add_option("--json", json_out, "Output path (default stdout)");
  analyze->add_option("--tol", tol, "Zero threshold for the group label")->check(CLI::PositiveNumber);
  add_roof_options(analyze, roof);

  std::string family, csv_out;
  bool transfer = false;
  double a_min = 0, a_max = 3, x_min = 1.05, x_max = 10;
  int points = 61, M = 8, n_env = 0;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweeps as CSV");
  sweep->add_option("--family", family, "State family (L_AIA)");
  sweep->add_flag("--transfer", transfer, "CNOT transfer model");
  sweep->add_option("--a-min", a_min);
  sweep->add_option("--a-max", a_max);
  sweep->add_option("--x-min", x_min);
  sweep->add_option("--x-max", x_max);
  sweep->add_option("--points", points);
  sweep->add_option("--M", M, "Number of CNOT steps");
  sweep->add_option("--n-env", n_env, "Environment qubits (default max(8, M))");
  sweep->add_option("--csv", csv_out, "Output path (default stdout)");
  add_roof_options(sweep, roof);

  int n_random = 200;
  std::uint64_t self_seed = 7;
  auto* selftest = app.add_subcommand("selftest", "Run the identity and property suites");
  selftest->add_option("--n-random", n_random, "Random states per suite")->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", self_seed, "Seed for random states");

  Source csrc;
  RoofOptions croof;
  auto* classify_cmd = app.add_subcommand("classify", "Group label with evidence");
  classify_cmd->add_option("--state", csrc.file, "State JSON file");
  classify_cmd->add_option("--zoo", csrc.zoo, "Named state");
  classify_cmd->add_option("--param", csrc.params, "Zoo parameter key=value (repeatable)");
  classify_cmd->add_option("--tol", tol, "Zero threshold")->check(CLI::PositiveNumber);
  add_roof_options(classify_cmd, croof);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) {
      const Loaded in = load(src);
      if (in.state.n_qubits() != 4) return analyze_general(in, json_out);
      if (focus > 4) throw Error(ErrorKind::BadInput, "focus out of range");
      const TangleReport rep = analyze_tangles(in.state, focus, roof);
      const ConstraintReport cons = evaluate_constraints(in.state, rep);
      const GroupLabel group = classify(in.state, tol, roof);
      ojson doc;
      doc["input"] = in.echo;
      doc["focus"] = focus;
      ojson ro;
      ro["seed"] = roof.seed;
      ro["restarts"] = roof.restarts;
      ro["iterations"] = roof.iterations;
      doc["roof_options"] = ro;
      ojson t = to_json(rep);
      doc["poly_coeffs"] = t["poly_coeffs"];
      t.erase("poly_coeffs");
      doc["tangles"] = t;
      doc["constraints"] = to_json(cons);
      doc["group"] = to_json(group);
      emit(json_out, doc.dump(2) + "\n");
      return cons.equalities_pass() ? kExitOk : kExitFail;
    }
    if (*sweep) {
      if (transfer == !family.empty()) throw Error(ErrorKind::BadInput, "give exactly one of --family or --transfer");
      std::string csv;
      if (!family.empty()) {
        if (family != "L_AIA") throw Error(ErrorKind::BadInput, "unknown family '" + family + "'");
        if (a_min < 0) throw Error(ErrorKind::BadParam, "a must be >= 0");
        const auto rows = sweep_L_family(grid(a_min, a_max, points), roof, roof.threads);
        csv = "a,one_tangle,S1,S,R\n";
        for (const auto& r : rows) csv += num(r.a) + "," + num(r.one_tangle) + "," + num(r.s1) + "," + num(r.s) + "," + num(r.r) + "\n";
      } else {
        if (!(x_min > 1.0)) throw Error(ErrorKind::BadParam, "x must be > 1");
        if (M < 1) throw Error(ErrorKind::BadParam, "M must be >= 1");
        const int env = n_env > 0 ? n_env : std::max(8, M);
        const auto runs = transfer_sweep(grid(x_min, x_max, points), env, M, roof.threads);
        csv = "x,M,tau_12_sq,tau_1rest,residual\n";
        for (const auto& run : runs) {
          for (const auto& st : run.steps) {
            csv += num(run.x) + "," + std::to_string(st.M) + "," + num(st.tau_12_sq) + "," + num(st.tau_1rest) + "," + num(st.residual) + "\n";
          }
        }
      }
      emit(csv_out, csv);
      return kExitOk;
    }
    if (*selftest) {
      return cli::run_selftest(n_random, self_seed, RoofOptions{}, std::cout) ? kExitOk : kExitFail;
    }
    if (*classify_cmd) {
      const Loaded in = load(csrc);
      if (in.state.n_qubits() != 4) throw Error(ErrorKind::BadInput, "classification needs a 4-qubit state");
      const GroupLabel g = classify(in.state, tol, croof);
      std::printf("Group %s\n", to_string(g.group));
      std::printf("predicates: four_way_entangled=%d two=%d three=%d four=%d (zero_tol=%g)\n", g.four_way_entangled, g.two,
                  g.three, g.four, g.zero_tol);
      for (const auto& e : g.evidence) std::printf("  %-26s %-24s %s\n", e.name.c_str(), num(e.value).c_str(), e.nonzero ? "nonzero" : "zero");
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
