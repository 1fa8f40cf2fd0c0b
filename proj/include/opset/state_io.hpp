// Text formats. State-set files and PVM literals are JSON with every
// coordinate a pair of decimal rational strings ["re", "im"]; rationals are
// reduced with positive denominators ("p" or "p/q"). Serialisation is
// canonical: fixed key order, states in input order, two-space indent, so
// parse/serialize round-trips are byte-identical. Party indices are
// 1-based in files and reports, 0-based in the API.

#pragma once

#include <string>

#include "json.hpp"
#include "opset/state_set.hpp"

namespace opset {

struct PVM;  // measurement.hpp

StateSet parse_state_set(const std::string& text);
std::string serialize_state_set(const StateSet& s);

PVM parse_pvm(const std::string& text, const StateSet& reference);
std::string serialize_pvm(const PVM& m);

// Shared JSON helpers for reports.
nlohmann::ordered_json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::ordered_json vec_to_json(const Vec& v);
nlohmann::ordered_json state_set_to_json(const StateSet& s);
nlohmann::ordered_json pvm_to_json(const PVM& m);

std::string read_file(const std::string& path);

}  // namespace opset
