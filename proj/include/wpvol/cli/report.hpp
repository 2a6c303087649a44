#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace wpvol {

inline constexpr int kSchemaVersion = 1;

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json measured;
    nlohmann::json envelope;
    double margin = 0;  // > 0 when inside the envelope; scale depends on the check
    std::string note;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    nlohmann::json details = nlohmann::json::object();
    double wall_clock = 0;

    bool pass() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    void merge(const Report& other);
    nlohmann::json to_json(bool with_clock = true) const;
};

}  // namespace wpvol
