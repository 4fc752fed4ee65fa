#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace mmchaos {

using Json = nlohmann::ordered_json;

// Uniform result document for every probe. `witnesses` holds replayable
// search hits (points and times as strings/integers); `params` echoes the
// effective parameters; `results` carries probe-specific measurements.
struct ChaosReport {
    std::string kind;
    bool found = false;
    Json witnesses = Json::array();
    Json params = Json::object();
    std::uint64_t horizon = 0;
    std::string caveat;
    Json results = Json::object();

    Json to_json() const;
    static ChaosReport from_json(const Json& j);
    std::string str(int indent = 2) const;
};

} // namespace mmchaos
