#pragma once

#include <map>
#include <string>
#include <vector>

namespace mmchaos {

// Flat probe configuration: a probe name plus string-valued parameters,
// assembled from command-line flags and/or a JSON config file (flags win).
struct RunConfig {
    std::string probe;
    std::map<std::string, std::string> values;
};

struct RunOutcome {
    int exit_code = 0;
    std::string body; // serialized report or error payload, newline terminated
};

// Reads a flat JSON object and fills in keys the config does not already
// carry. A "probe" entry sets the probe only when none is set yet.
void merge_config_file(RunConfig& config, const std::string& path);

// Executes the probe and serializes the outcome. Errors are captured into a
// JSON payload carrying a machine-readable code; the exit code follows the
// documented mapping (0 completed, 2 config, 3 resource, 4 admissibility).
RunOutcome run(const RunConfig& config);

std::vector<std::string> probe_names();

} // namespace mmchaos
