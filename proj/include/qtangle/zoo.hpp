#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtangle/roof.hpp"
#include "qtangle/qstate.hpp"

namespace qtangle {

enum class ZooName { GHZ4, CLUSTER, BELL_PRODUCT, L_AIA, CHI, PSI_S, W_TILDE, W4 };

using Params = std::map<std::string, double>;

struct NamedState {
  ZooName name;
  Params params;
  PureState state;
};

const char* to_string(ZooName name);
std::optional<ZooName> parse_zoo_name(const std::string& s);
std::vector<ZooName> all_zoo_names();

// Parameters: L_AIA {a}, CHI {a0000, a1101, a1110}, PSI_S {a0000, a1110}. Missing ones take defaults.
NamedState make(ZooName name, const Params& params = {});
NamedState make(const std::string& name, const Params& params = {});

enum class Group { I, II, III, IV, NOT_4WAY_ENTANGLED, UNASSIGNED };

const char* to_string(Group g);

struct Evidence {
  std::string name;
  double value = 0;
  bool nonzero = false;
};

struct GroupLabel {
  Group group = Group::UNASSIGNED;
  double zero_tol = 1e-6;
  bool two = false, three = false, four = false;
  bool four_way_entangled = false;
  std::vector<Evidence> evidence;
};

// Two-tangles over all 6 pairs, three-tangles over all 4 triples, four-tangles for every focus.
GroupLabel classify(const PureState& state, double zero_tol = 1e-6, const RoofOptions& opts = {});

std::vector<Evidence> table2_check(const PureState& state, double zero_tol = 1e-6, const RoofOptions& opts = {});

}  // namespace qtangle
