#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ninepalace/trace.hpp"
#include "ninepalace/verify.hpp"

namespace ninepalace {

// Structured output schema: {"op", "inputs", "result", "trace", "report"?}
// with steps serialized as {kind, start, end, arrow, events}. Events are
// single-key objects ({"carry": "+1"}, {"annotation": "..."}).

nlohmann::json trace_to_json(const StepTrace& t);
StepTrace trace_from_json(const nlohmann::json& j); // throws std::invalid_argument

nlohmann::json report_to_json(const ConformanceReport& r);

nlohmann::json envelope(const std::string& op, nlohmann::json inputs, nlohmann::json result,
                        const StepTrace& trace,
                        const std::optional<std::vector<ConformanceReport>>& reports = std::nullopt);

// Deterministic serialization used for all machine output.
std::string to_output_string(const nlohmann::json& j);

} // namespace ninepalace
