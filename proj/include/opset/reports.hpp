// JSON reports for every analysis, byte-deterministic for fixed inputs.
// All reports carry a "schema" version field; party indices are 1-based.

#pragma once

#include "json.hpp"
#include "opset/activation.hpp"
#include "opset/constraints.hpp"
#include "opset/discrimination.hpp"
#include "opset/state_set.hpp"

namespace opset {

inline constexpr const char* kSchema = "opset/1";

nlohmann::ordered_json analyze_report(const StateSet& s);
nlohmann::ordered_json constraints_report(const StateSet& s,
                                          std::optional<std::size_t> party);
nlohmann::ordered_json measure_report(const StateSet& s, const PVM& m);
nlohmann::ordered_json tree_to_json(const ProtocolNode& node);
nlohmann::ordered_json distinguish_report(const DistinguishabilityVerdict& v);
nlohmann::ordered_json upb_report(const UpbResult& r);
nlohmann::ordered_json witness_to_json(const ActivationWitness& w);
nlohmann::ordered_json activation_report(const ActivationResult& r);
nlohmann::ordered_json strong_local_report(const StrongLocalityReport& r);

}  // namespace opset
