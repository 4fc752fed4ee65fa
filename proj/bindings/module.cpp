#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmchaos/errors.hpp"
#include "mmchaos/metric.hpp"
#include "mmchaos/multimap.hpp"
#include "mmchaos/report.hpp"
#include "mmchaos/runner.hpp"
#include "mmchaos/symbolic.hpp"
#include "mmchaos/systems.hpp"
#include "mmchaos/textio.hpp"

namespace py = pybind11;

namespace {

mmchaos::Scalar::Kind kind_from(const std::string& mode) {
    if (mode == "exact") return mmchaos::Scalar::Kind::Exact;
    if (mode == "binary") return mmchaos::Scalar::Kind::Binary;
    mmchaos::fail_config("mode must be 'exact' or 'binary'");
}

} // namespace

PYBIND11_MODULE(_mmchaos, m) {
    m.doc() = "Set-valued iteration and chaos probes for finite families of interval and "
              "symbol maps";

    py::register_exception<mmchaos::Error>(m, "ChaosError");

    m.def("fixtures", &mmchaos::fixture_names, "List the built-in systems.");

    m.def(
        "iterate",
        [](const std::string& system, const std::string& x, unsigned n, const std::string& mode) {
            const mmchaos::MultiMap f =
                system == "example4" ? mmchaos::example4_system() : mmchaos::parse_system(system);
            const mmchaos::Point start = mmchaos::parse_point(x, f.space(), kind_from(mode));
            const mmchaos::FiniteSet image = f.iterate(start, n);
            std::vector<std::string> out;
            out.reserve(image.size());
            for (std::size_t i = 0; i < image.size(); ++i) out.push_back(image.at(i).str());
            return out;
        },
        py::arg("system"), py::arg("x"), py::arg("n"), py::arg("mode") = "exact",
        "Apply the system n times to a start point; returns the image as point strings.");

    m.def(
        "hausdorff",
        [](const std::string& a, const std::string& b, const std::string& space,
           const std::string& mode) {
            mmchaos::Space sp = mmchaos::Space::Interval;
            if (space == "symbol") sp = mmchaos::Space::Symbol;
            else if (space != "interval") mmchaos::fail_config("space must be 'interval' or 'symbol'");
            const auto sa = mmchaos::parse_set(a, sp, kind_from(mode));
            const auto sb = mmchaos::parse_set(b, sp, kind_from(mode));
            return mmchaos::hausdorff(sa, sb).str();
        },
        py::arg("a"), py::arg("b"), py::arg("space") = "interval", py::arg("mode") = "exact",
        "Hausdorff distance between two finite sets, as a value string.");

    m.def(
        "build_word", [](unsigned n) { return mmchaos::build_word(n).str(); }, py::arg("n"),
        "The n-th word of the recursive family, as a 0/1 string.");

    m.def(
        "block_count",
        [](unsigned n, const std::string& block) {
            return mmchaos::block_count_recursive(n, mmchaos::BitWord::from_string(block));
        },
        py::arg("n"), py::arg("block"),
        "Occurrences of the block in the n-th word, overlaps allowed.");

    m.def(
        "run",
        [](const std::string& config_json) {
            mmchaos::Json doc;
            try {
                doc = mmchaos::Json::parse(config_json);
            } catch (const mmchaos::Json::exception& e) {
                mmchaos::fail_config(std::string("cannot parse config: ") + e.what());
            }
            if (!doc.is_object()) mmchaos::fail_config("config must be a JSON object");
            mmchaos::RunConfig config;
            for (const auto& [key, value] : doc.items()) {
                std::string text;
                if (value.is_string()) text = value.get<std::string>();
                else if (value.is_boolean()) text = value.get<bool>() ? "true" : "false";
                else if (value.is_number()) text = value.dump();
                else mmchaos::fail_config("config value for '" + key + "' must be a scalar");
                if (key == "probe") config.probe = text;
                else config.values.emplace(key, text);
            }
            const mmchaos::RunOutcome outcome = mmchaos::run(config);
            return py::make_tuple(outcome.exit_code, outcome.body);
        },
        py::arg("config_json"),
        "Execute a probe from a flat JSON config; returns (exit_code, report_text).");
}
