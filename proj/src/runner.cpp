#include "mmchaos/runner.hpp"

#include "mmchaos/errors.hpp"
#include "mmchaos/probes.hpp"
#include "mmchaos/profile.hpp"
#include "mmchaos/report.hpp"
#include "mmchaos/symbolic.hpp"
#include "mmchaos/synthesis.hpp"
#include "mmchaos/systems.hpp"
#include "mmchaos/textio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>

namespace mmchaos {

namespace {

// Typed access to the flat parameter map with uniform config errors, plus
// rejection of keys the probe does not know (catches config-file typos).
class Args {
  public:
    Args(const RunConfig& config, std::initializer_list<const char*> allowed)
        : values_(config.values) {
        std::set<std::string> known = {"mode", "format", "seed"};
        for (const char* k : allowed) known.insert(k);
        for (const auto& [key, value] : values_) {
            (void)value;
            if (!known.count(key))
                fail_config("unknown parameter '" + key + "' for probe '" + config.probe + "'");
        }
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string str(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) fail_config("missing required parameter '" + key + "'");
        return it->second;
    }

    std::string str_or(const std::string& key, const std::string& fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    std::uint64_t u64(const std::string& key) const { return to_u64(key, str(key)); }

    std::uint64_t u64_or(const std::string& key, std::uint64_t fallback) const {
        return has(key) ? u64(key) : fallback;
    }

    unsigned u32(const std::string& key) const {
        const std::uint64_t v = u64(key);
        if (v > 0xffffffffu) fail_config("parameter '" + key + "' is out of range");
        return static_cast<unsigned>(v);
    }

    unsigned u32_or(const std::string& key, unsigned fallback) const {
        return has(key) ? u32(key) : fallback;
    }

    bool flag_or(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        const std::string v = str(key);
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        fail_config("parameter '" + key + "' must be true or false");
    }

    Rational rational(const std::string& key) const {
        const std::string text = str(key);
        auto r = parse_rational(text);
        if (!r) fail_config("malformed rational in parameter '" + key + "': '" + text + "'");
        return *r;
    }

    Rational rational_or(const std::string& key, const Rational& fallback) const {
        return has(key) ? rational(key) : fallback;
    }

    Scalar scalar(const std::string& key, Scalar::Kind kind) const {
        return parse_scalar(str(key), kind);
    }

    std::vector<std::uint64_t> u64_list(const std::string& key) const {
        std::vector<std::uint64_t> out;
        for (const std::string& part : split(str(key), ','))
            out.push_back(to_u64(key, part));
        return out;
    }

    std::vector<std::string> list(const std::string& key, char sep) const {
        return split(str(key), sep);
    }

    static std::vector<std::string> split(const std::string& text, char sep) {
        std::vector<std::string> out;
        std::string piece;
        std::istringstream in(text);
        while (std::getline(in, piece, sep)) {
            const auto b = piece.find_first_not_of(" \t");
            const auto e = piece.find_last_not_of(" \t");
            out.push_back(b == std::string::npos ? std::string() : piece.substr(b, e - b + 1));
        }
        if (!out.empty() && out.back().empty()) out.pop_back();
        return out;
    }

  private:
    std::uint64_t to_u64(const std::string& key, const std::string& text) const {
        std::uint64_t v = 0;
        const char* begin = text.data();
        const char* end = begin + text.size();
        auto [p, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || p != end)
            fail_config("parameter '" + key + "' must be a nonnegative integer, got '" + text +
                        "'");
        return v;
    }

    const std::map<std::string, std::string>& values_;
};

Scalar::Kind parse_mode(const Args& a) {
    const std::string mode = a.str_or("mode", "exact");
    if (mode == "exact") return Scalar::Kind::Exact;
    if (mode == "binary") return Scalar::Kind::Binary;
    fail_config("mode must be 'exact' or 'binary', got '" + mode + "'");
}

std::string parse_format(const Args& a, bool csv_allowed) {
    const std::string format = a.str_or("format", "json");
    if (format != "json" && format != "csv")
        fail_config("format must be 'json' or 'csv', got '" + format + "'");
    if (format == "csv" && !csv_allowed)
        fail_config("this probe has no csv form");
    return format;
}

MultiMap resolve_system(const std::string& text) {
    if (text == "example4") return example4_system();
    return parse_system(text);
}

void check_grid(const Rational& step) {
    if (step <= 0 || step > 1) fail_config("grid step must lie in (0, 1]");
}

std::vector<Scalar> parse_t_grid(const Args& a, Scalar::Kind kind) {
    const std::string text = a.str_or("t_grid", "1/8,1/4,1/2,1");
    std::vector<Scalar> grid;
    for (const std::string& part : Args::split(text, ','))
        grid.push_back(parse_scalar(part, kind));
    return grid;
}

std::vector<OpenRegion> parse_region_list(const std::string& text, Space space,
                                          Scalar::Kind kind) {
    std::vector<OpenRegion> out;
    for (const std::string& part : Args::split(text, ';'))
        out.push_back(parse_region(part, space, kind));
    if (out.empty()) fail_config("empty region list");
    return out;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

// ---- probe handlers ------------------------------------------------------

std::string run_fixtures(const RunConfig& config) {
    Args a(config, {});
    const std::string format = parse_format(a, true);
    const auto names = fixture_names();
    if (format == "csv") {
        std::string out;
        for (const auto& n : names) out += n + "\n";
        return out;
    }
    Json j;
    j["kind"] = "fixtures";
    j["fixtures"] = names;
    return finish(j);
}

std::string run_word(const RunConfig& config) {
    Args a(config, {"n", "block", "table"});
    const std::string format = parse_format(a, a.has("table"));
    if (a.has("table")) {
        const std::string block_text = a.str("block");
        const BitWord block = BitWord::from_string(block_text);
        const auto rows = block_frequency_table(block, a.u32("table"));
        if (format == "csv") return block_frequency_csv(rows);
        Json j;
        j["kind"] = "word-table";
        j["block"] = block_text;
        Json jrows = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["k"] = r.k;
            row["count"] = r.count;
            row["freq"] = format_rational(r.freq);
            row["bound"] = format_rational(r.bound);
            jrows.push_back(row);
        }
        j["rows"] = jrows;
        return finish(j);
    }
    const unsigned n = a.u32("n");
    const BitWord& w = build_word(n);
    Json j;
    j["kind"] = "word";
    j["n"] = n;
    j["length"] = w.size();
    if (w.size() <= (1u << 20)) j["word"] = w.str();
    else j["word_prefix"] = w.slice(0, 1024).str();
    if (a.has("block")) {
        const std::string block_text = a.str("block");
        const BitWord block = BitWord::from_string(block_text);
        j["block"] = block_text;
        j["count"] = block_count_recursive(n, block);
    }
    return finish(j);
}

std::string run_iterate(const RunConfig& config) {
    Args a(config, {"system", "x", "n"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    const MultiMap f = resolve_system(a.str("system"));
    const Point x = parse_point(a.str("x"), f.space(), kind);
    const unsigned n = a.u32("n");
    const FiniteSet image = f.iterate(x, n);
    Json j;
    j["kind"] = "iterate";
    j["system"] = a.str("system");
    j["x"] = x.str();
    j["n"] = n;
    Json pts = Json::array();
    for (std::size_t i = 0; i < image.size(); ++i) pts.push_back(image.at(i).str());
    j["image"] = pts;
    j["size"] = image.size();
    return finish(j);
}

std::string run_hausdorff(const RunConfig& config) {
    Args a(config, {"a", "b", "space", "system"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    Space space = Space::Interval;
    if (a.has("system")) space = resolve_system(a.str("system")).space();
    else if (a.str_or("space", "interval") == "symbol") space = Space::Symbol;
    else if (a.str_or("space", "interval") != "interval")
        fail_config("space must be 'interval' or 'symbol'");
    const FiniteSet sa = parse_set(a.str("a"), space, kind);
    const FiniteSet sb = parse_set(a.str("b"), space, kind);
    Json j;
    j["kind"] = "hausdorff";
    j["a"] = sa.str();
    j["b"] = sb.str();
    j["distance"] = hausdorff(sa, sb).str();
    return finish(j);
}

std::string run_profile(const RunConfig& config) {
    Args a(config, {"system", "x", "y", "horizon", "t_grid", "window", "times"});
    const std::string format = parse_format(a, true);
    const Scalar::Kind kind = parse_mode(a);
    const MultiMap f = resolve_system(a.str("system"));
    const Point x = parse_point(a.str("x"), f.space(), kind);
    const Point y = parse_point(a.str("y"), f.space(), kind);
    std::vector<Scalar> t_grid = parse_t_grid(a, kind);
    const unsigned window = a.u32_or("window", 0);

    std::optional<DistributionalProfile> profile;
    if (a.has("times")) {
        TimeSequence p(a.u64_list("times"));
        profile.emplace(distributional_profile_seq(f, x, y, p, std::move(t_grid), window));
    } else {
        const unsigned horizon = a.u32("horizon");
        profile.emplace(distributional_profile(f, x, y, horizon, std::move(t_grid), window));
    }
    if (format == "csv") return profile->csv();

    Json j;
    j["kind"] = "profile";
    j["x"] = x.str();
    j["y"] = y.str();
    j["horizon"] = profile->horizon();
    j["window"] = profile->window();
    j["caveat"] = kFiniteHorizonCaveat;
    Json rows = Json::array();
    for (std::size_t ti = 0; ti < profile->t_grid().size(); ++ti) {
        Json row;
        row["t"] = profile->t_grid()[ti].str();
        row["phi"] = format_rational(profile->value(ti));
        row["lower"] = format_rational(profile->lower(ti));
        row["upper"] = format_rational(profile->upper(ti));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return finish(j);
}

std::string run_liyorke(const RunConfig& config) {
    Args a(config, {"system", "x", "y", "pairs", "horizon", "delta", "epsilon", "window"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    const MultiMap f = resolve_system(a.str("system"));
    std::vector<std::pair<Point, Point>> pairs;
    if (a.has("pairs")) {
        for (const std::string& entry : a.list("pairs", ';')) {
            const auto colon = entry.find(':');
            if (colon == std::string::npos)
                fail_config("pair entries use the form x:y, got '" + entry + "'");
            pairs.emplace_back(parse_point(entry.substr(0, colon), f.space(), kind),
                               parse_point(entry.substr(colon + 1), f.space(), kind));
        }
    } else {
        pairs.emplace_back(parse_point(a.str("x"), f.space(), kind),
                           parse_point(a.str("y"), f.space(), kind));
    }
    const ChaosReport report =
        li_yorke_scan(f, pairs, a.u32("horizon"), a.scalar("delta", kind),
                      a.scalar("epsilon", kind), a.u32_or("window", 0));
    return report.str() + "\n";
}

std::string run_kato(const RunConfig& config) {
    Args a(config, {"system", "delta", "epsilon", "horizon", "grid", "opens", "powers"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    const MultiMap f = resolve_system(a.str("system"));
    const Rational step = a.rational_or("grid", Rational(1, 1024));
    check_grid(step);
    std::vector<OpenRegion> opens;
    if (a.has("opens")) opens = parse_region_list(a.str("opens"), f.space(), kind);
    else if (f.space() == Space::Interval) opens = default_open_suite();
    else fail_config("symbol systems need an explicit open-region suite");
    std::vector<unsigned> powers;
    if (a.has("powers"))
        for (std::uint64_t p : a.u64_list("powers")) powers.push_back(static_cast<unsigned>(p));
    else powers.push_back(1);
    const ChaosReport report = kato_report(f, a.scalar("delta", kind), a.scalar("epsilon", kind),
                                           opens, a.u32("horizon"), step, powers);
    return report.str() + "\n";
}

std::string run_transitive(const RunConfig& config) {
    Args a(config, {"system", "u", "v", "horizon", "min_time", "grid"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    const MultiMap f = resolve_system(a.str("system"));
    const Rational step = a.rational_or("grid", Rational(1, 1024));
    check_grid(step);
    const ChaosReport report =
        transitivity_probe(f, parse_region(a.str("u"), f.space(), kind),
                           parse_region(a.str("v"), f.space(), kind), a.u32("horizon"),
                           a.u32_or("min_time", 0), step);
    return report.str() + "\n";
}

std::string run_mixing(const RunConfig& config) {
    Args a(config,
           {"system", "u", "v", "u2", "v2", "start", "window", "horizon", "weak", "grid"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    const MultiMap f = resolve_system(a.str("system"));
    const Rational step = a.rational_or("grid", Rational(1, 1024));
    check_grid(step);
    if (a.flag_or("weak", false)) {
        const ChaosReport report = weak_mixing_probe(
            f, parse_region(a.str("u"), f.space(), kind),
            parse_region(a.str("v"), f.space(), kind),
            parse_region(a.str("u2"), f.space(), kind),
            parse_region(a.str("v2"), f.space(), kind), a.u32("horizon"), step);
        return report.str() + "\n";
    }
    const ChaosReport report =
        mixing_probe(f, parse_region(a.str("u"), f.space(), kind),
                     parse_region(a.str("v"), f.space(), kind), a.u32("start"),
                     a.u32("window"), step);
    return report.str() + "\n";
}

std::string run_snw(const RunConfig& config) {
    Args a(config, {"system", "v", "witnesses", "horizon", "threshold", "checkpoints"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    const MultiMap f = resolve_system(a.str("system"));
    std::vector<Point> witnesses;
    for (const std::string& part : a.list("witnesses", ';'))
        witnesses.push_back(parse_point(part, f.space(), kind));
    std::vector<std::uint64_t> checkpoints;
    if (a.has("checkpoints")) checkpoints = a.u64_list("checkpoints");
    const ChaosReport report =
        snw_frequency(f, parse_region(a.str("v"), f.space(), kind), witnesses, a.u64("horizon"),
                      a.rational_or("threshold", Rational(1, 5)), checkpoints);
    return report.str() + "\n";
}

std::string run_dc_pair(const RunConfig& config) {
    Args a(config, {"system", "a1", "a2", "depth", "u0", "grid", "refinements", "cap", "verify",
                    "vx", "vy", "t_small", "eps_sep"});
    parse_format(a, false);
    const Scalar::Kind kind = parse_mode(a);
    if (kind != Scalar::Kind::Exact) fail_config("dc-pair synthesis runs in exact mode");
    const MultiMap f = resolve_system(a.str("system"));
    const FiniteSet a1 = parse_set(a.str("a1"), f.space(), kind);
    const FiniteSet a2 = parse_set(a.str("a2"), f.space(), kind);
    const OpenRegion u0 = parse_region(a.str_or("u0", "(0,1)"), f.space(), kind);
    SynthesisOptions options;
    options.initial_grid_step = a.rational_or("grid", options.initial_grid_step);
    check_grid(options.initial_grid_step);
    options.max_refinements = a.u32_or("refinements", options.max_refinements);
    options.level_time_cap = a.u32_or("cap", options.level_time_cap);
    const SynthesisResult result =
        synthesize_dc_pair(f, a1, a2, a.u32("depth"), u0, options);

    Json j;
    j["kind"] = "dc-pair";
    j["times"] = result.times.times;
    j["grid_step"] = format_rational(result.grid_step);
    j["refinements"] = result.refinements;
    Json pts = Json::array();
    for (const auto& [word, point] : result.points) {
        Json row;
        row["choices"] = word;
        row["x"] = point.str();
        pts.push_back(row);
    }
    j["points"] = pts;

    if (a.flag_or("verify", false)) {
        const std::string vx = a.str("vx");
        const std::string vy = a.str("vy");
        const Point* px = nullptr;
        const Point* py = nullptr;
        for (const auto& [word, point] : result.points) {
            if (word == vx) px = &point;
            if (word == vy) py = &point;
        }
        if (!px || !py)
            fail_config("verification choice words must name members of the synthesized family");
        const ChaosReport check =
            verify_dc_seq(f, *px, *py, result.times, vx, vy,
                          a.scalar("t_small", kind), a.scalar("eps_sep", kind));
        j["verify"] = check.to_json();
    }
    return finish(j);
}

std::string run_example4(const RunConfig& config) {
    Args a(config, {"depth", "horizon", "choices_x", "choices_y"});
    parse_format(a, false);
    const ChaosReport report =
        verify_example4(a.u32_or("depth", 3), a.u64_or("horizon", 78125),
                        a.str_or("choices_x", "111"), a.str_or("choices_y", "112"));
    return report.str() + "\n";
}

} // namespace

void merge_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_config("cannot open config file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        fail_config("cannot parse config file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) fail_config("config file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
        std::string text;
        if (value.is_string()) text = value.get<std::string>();
        else if (value.is_boolean()) text = value.get<bool>() ? "true" : "false";
        else if (value.is_number()) text = value.dump();
        else fail_config("config value for '" + key + "' must be a scalar");
        if (key == "probe") {
            if (config.probe.empty()) config.probe = text;
            continue;
        }
        config.values.emplace(key, text); // existing (flag) values win
    }
}

std::vector<std::string> probe_names() {
    return {"iterate",  "hausdorff", "profile", "liyorke",  "kato",     "transitive",
            "mixing",   "dc-pair",   "snw",     "word",     "example4", "fixtures"};
}

RunOutcome run(const RunConfig& config) {
    try {
        const std::string& p = config.probe;
        if (p.empty()) fail_config("no probe selected");
        std::string body;
        if (p == "fixtures") body = run_fixtures(config);
        else if (p == "word") body = run_word(config);
        else if (p == "iterate") body = run_iterate(config);
        else if (p == "hausdorff") body = run_hausdorff(config);
        else if (p == "profile") body = run_profile(config);
        else if (p == "liyorke") body = run_liyorke(config);
        else if (p == "kato") body = run_kato(config);
        else if (p == "transitive") body = run_transitive(config);
        else if (p == "mixing") body = run_mixing(config);
        else if (p == "snw") body = run_snw(config);
        else if (p == "dc-pair") body = run_dc_pair(config);
        else if (p == "example4") body = run_example4(config);
        else {
            std::string names;
            for (const auto& n : probe_names()) names += (names.empty() ? "" : ", ") + n;
            fail_config("unknown probe '" + p + "'; available: " + names);
        }
        return {0, std::move(body)};
    } catch (const Error& e) {
        Json inner;
        inner["code"] = e.code_name();
        inner["message"] = e.what();
        Json payload;
        payload["error"] = inner;
        return {e.exit_status(), payload.dump(2) + "\n"};
    } catch (const std::exception& e) {
        Json inner;
        inner["code"] = "internal";
        inner["message"] = e.what();
        Json payload;
        payload["error"] = inner;
        return {1, payload.dump(2) + "\n"};
    }
}

} // namespace mmchaos
