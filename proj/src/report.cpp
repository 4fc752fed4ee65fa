#include "mmchaos/report.hpp"

#include "mmchaos/errors.hpp"

namespace mmchaos {

Json ChaosReport::to_json() const {
    Json j;
    j["kind"] = kind;
    j["found"] = found;
    j["witnesses"] = witnesses;
    j["params"] = params;
    j["horizon"] = horizon;
    j["caveat"] = caveat;
    j["results"] = results;
    return j;
}

ChaosReport ChaosReport::from_json(const Json& j) {
    ChaosReport r;
    try {
        r.kind = j.at("kind").get<std::string>();
        r.found = j.at("found").get<bool>();
        r.witnesses = j.at("witnesses");
        r.params = j.at("params");
        r.horizon = j.at("horizon").get<std::uint64_t>();
        r.caveat = j.at("caveat").get<std::string>();
        r.results = j.at("results");
    } catch (const Json::exception& e) {
        fail_config(std::string("malformed report document: ") + e.what());
    }
    return r;
}

std::string ChaosReport::str(int indent) const { return to_json().dump(indent); }

} // namespace mmchaos
