#pragma once

#include <string>

#include <json.hpp>

#include "qtangle/monogamy.hpp"
#include "qtangle/qstate.hpp"
#include "qtangle/spectral.hpp"
#include "qtangle/tangles.hpp"
#include "qtangle/zoo.hpp"

namespace qtangle {

using ojson = nlohmann::ordered_json;

// {"n_qubits": n, "amplitudes": [[re, im], ...]}; throws BadInput on malformed documents.
PureState state_from_json(const nlohmann::json& doc);
PureState state_from_json_text(const std::string& text);
ojson state_to_json(const PureState& state);
ojson amplitudes_to_json(int n_qubits, const CVector& amplitudes);

ojson to_json(const PolyCoeffs& p);
ojson to_json(const TangleReport& r);
ojson to_json(const ConstraintReport& r);
ojson to_json(const GroupLabel& g);
ojson to_json(const std::vector<Evidence>& rows);

}  // namespace qtangle
