#include "wpvol/cli/report.hpp"

namespace wpvol {

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    if (!other.details.empty()) details[other.suite] = other.details;
}

nlohmann::json Report::to_json(bool with_clock) const {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = suite;
    j["status"] = pass() ? "pass" : "fail";
    auto& arr = j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        e["measured"] = c.measured;
        e["envelope"] = c.envelope;
        e["margin"] = c.margin;
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(std::move(e));
    }
    if (!details.empty()) j["details"] = details;
    if (with_clock) j["wall_clock_seconds"] = wall_clock;
    return j;
}

}  // namespace wpvol
