#include "ninepalace/json_io.hpp"

#include <stdexcept>

namespace ninepalace {

using nlohmann::json;

namespace {

json cell_to_json(const CellRef& c) {
    return json{{"family", c.family}, {"position", c.position}};
}

CellRef cell_from_json(const json& j) {
    return {j.at("family").get<long long>(), j.at("position").get<int>()};
}

} // namespace

json trace_to_json(const StepTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t.steps) {
        json events = json::array();
        for (const TraceEvent& e : s.events) events.push_back(json{{e.kind, e.text}});
        steps.push_back(json{{"kind", s.kind},
                             {"start", cell_to_json(s.start)},
                             {"end", cell_to_json(s.end)},
                             {"arrow",
                              {{"dcol", s.arrow.dcol},
                               {"drow", s.arrow.drow},
                               {"wrap", s.arrow.wrap}}},
                             {"events", events}});
    }
    return steps;
}

StepTrace trace_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("trace: expected an array of steps");
    StepTrace t;
    for (const json& js : j) {
        TraceStep s;
        s.kind = js.at("kind").get<std::string>();
        s.start = cell_from_json(js.at("start"));
        s.end = cell_from_json(js.at("end"));
        const json& a = js.at("arrow");
        s.arrow = {a.at("dcol").get<int>(), a.at("drow").get<int>(), a.at("wrap").get<bool>()};
        for (const json& je : js.at("events")) {
            if (!je.is_object() || je.size() != 1)
                throw std::invalid_argument("trace: event must be a single-key object");
            for (auto it = je.begin(); it != je.end(); ++it)
                s.events.push_back({it.key(), it.value().get<std::string>()});
        }
        t.steps.push_back(std::move(s));
    }
    return t;
}

json report_to_json(const ConformanceReport& r) {
    json failures = json::array();
    for (const CaseFailure& f : r.failures)
        failures.push_back(
            json{{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    return json{{"claim_id", r.claim_id},
                {"total_cases", r.total_cases},
                {"failures", failures}};
}

json envelope(const std::string& op, json inputs, json result, const StepTrace& trace,
              const std::optional<std::vector<ConformanceReport>>& reports) {
    json j;
    j["op"] = op;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    j["trace"] = trace_to_json(trace);
    if (reports) {
        json rs = json::array();
        for (const ConformanceReport& r : *reports) rs.push_back(report_to_json(r));
        j["report"] = rs;
    }
    return j;
}

std::string to_output_string(const json& j) { return j.dump(2) + "\n"; }

} // namespace ninepalace
