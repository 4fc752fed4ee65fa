#include "mmchaos/synthesis.hpp"

#include "mmchaos/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace mmchaos {

namespace {

struct LevelFailure {
    unsigned level = 0;
    std::string word;
};

struct Branch {
    std::string prefix;
    std::vector<std::size_t> survivors; // indices into the start grid
};

// One full attempt at a fixed grid step. Returns the result or the failure
// location for the error message after the last refinement.
std::optional<SynthesisResult> attempt_synthesis(const MultiMap& f, const FiniteSet& a1,
                                                 const FiniteSet& a2, unsigned depth,
                                                 const OpenRegion& u0, const Rational& step,
                                                 unsigned time_cap, LevelFailure& failure) {
    const std::vector<Scalar> starts = u0.grid_points(step);
    if (starts.empty()) {
        failure = {1, "1"};
        return std::nullopt;
    }

    std::vector<Orbit> orbits;
    orbits.reserve(starts.size());
    for (const Scalar& s : starts) orbits.emplace_back(f, Point(s));

    std::vector<Branch> branches;
    {
        Branch root;
        root.survivors.resize(starts.size());
        for (std::size_t i = 0; i < starts.size(); ++i) root.survivors[i] = i;
        branches.push_back(std::move(root));
    }

    std::vector<std::uint64_t> times;
    unsigned now = 0;
    for (unsigned level = 1; level <= depth; ++level) {
        const Scalar radius(Rational(1, level));
        bool level_done = false;
        for (unsigned cand = now + 1; cand <= now + time_cap; ++cand) {
            // Advance every orbit still referenced by some branch to `cand`.
            for (const Branch& b : branches)
                for (std::size_t i : b.survivors)
                    if (orbits[i].time() < cand) orbits[i].advance();

            std::vector<Branch> next;
            next.reserve(branches.size() * 2);
            bool ok = true;
            for (const Branch& b : branches) {
                Branch c1{b.prefix + '1', {}};
                Branch c2{b.prefix + '2', {}};
                for (std::size_t i : b.survivors) {
                    const FiniteSet& image = orbits[i].current();
                    if (hausdorff(image, a1, f.metric()) < radius) c1.survivors.push_back(i);
                    if (hausdorff(image, a2, f.metric()) < radius) c2.survivors.push_back(i);
                }
                if (c1.survivors.empty() || c2.survivors.empty()) {
                    failure = {level, c1.survivors.empty() ? c1.prefix : c2.prefix};
                    ok = false;
                    break;
                }
                next.push_back(std::move(c1));
                next.push_back(std::move(c2));
            }
            if (!ok) continue; // next candidate time
            branches = std::move(next);
            times.push_back(cand);
            now = cand;
            level_done = true;
            break;
        }
        if (!level_done) {
            // failure already records the last failing word at this level
            failure.level = level;
            return std::nullopt;
        }
    }

    SynthesisResult result;
    result.times = TimeSequence(std::move(times));
    result.points.reserve(branches.size());
    for (const Branch& b : branches)
        result.points.emplace_back(b.prefix, Point(starts[b.survivors.front()]));
    result.grid_step = step;
    return result;
}

std::uint64_t factorial(unsigned n) {
    std::uint64_t v = 1;
    for (unsigned i = 2; i <= n; ++i) v *= i;
    return v;
}

} // namespace

SynthesisResult synthesize_dc_pair(const MultiMap& f, const FiniteSet& a1, const FiniteSet& a2,
                                   unsigned depth, const OpenRegion& u0,
                                   const SynthesisOptions& options) {
    if (f.space() != Space::Interval) fail_type("synthesis requires an interval system");
    if (a1.space() != Space::Interval || a2.space() != Space::Interval)
        fail_type("target sets must live on the interval");
    if (a1.scalar_kind() != Scalar::Kind::Exact || a2.scalar_kind() != Scalar::Kind::Exact)
        fail_type("synthesis runs in exact arithmetic");
    if (u0.space() != Space::Interval) fail_type("the seed region must be an interval region");
    if (depth == 0) fail_config("depth must be at least 1");
    if (depth > 12) fail_resource("depth is capped at 12 (the family has 2^depth members)");
    if (a1 == a2) fail_config("target sets must differ");
    if (options.level_time_cap == 0) fail_config("level time cap must be positive");
    if (options.max_refinements > 16) fail_config("refinement count is capped at 16");

    // Both targets must be realizable as sampled range elements before any
    // search: otherwise no image can come Hausdorff-close at every scale.
    {
        const Scalar eta = collection_tolerance(f, Scalar::Kind::Exact);
        const RangeSample range = range_sample(f, 2, options.initial_grid_step);
        for (const FiniteSet* target : {&a1, &a2}) {
            bool matched = false;
            for (const FiniteSet& r : range.sets)
                if (hausdorff(r, *target, f.metric()) <= eta) {
                    matched = true;
                    break;
                }
            if (!matched)
                fail_admissibility("target set " + target->str() +
                                   " does not match any sampled range element");
        }
    }

    LevelFailure failure;
    Rational step = options.initial_grid_step;
    for (unsigned refine = 0; refine <= options.max_refinements; ++refine) {
        if (refine > 0) {
            const Rational halved = step / 2;
            step = halved;
        }
        auto result = attempt_synthesis(f, a1, a2, depth, u0, step, options.level_time_cap,
                                        failure);
        if (result) {
            result->refinements = refine;
            return std::move(*result);
        }
    }
    fail_resource("synthesis search exhausted at level " + std::to_string(failure.level) +
                  " for choice word '" + failure.word + "' (grid step " + format_rational(step) +
                  " after " + std::to_string(options.max_refinements) + " refinements)");
}

ChaosReport verify_dc_seq(const MultiMap& f, const Point& x, const Point& y,
                          const TimeSequence& p, const std::string& choices_x,
                          const std::string& choices_y, const Scalar& t_small,
                          const Scalar& eps_sep) {
    const std::size_t k = p.size();
    if (k < 2) fail_config("the time sequence must cover at least the first factorial block");
    if (choices_x.size() != k || choices_y.size() != k)
        fail_config("choice words must have one symbol per time index");
    for (const std::string* c : {&choices_x, &choices_y})
        for (char ch : *c)
            if (ch != '1' && ch != '2') fail_config("choice word symbols must be '1' or '2'");
    if (!(t_small > Scalar::zero(t_small.kind())))
        fail_config("the agreement threshold must be positive");
    if (!(eps_sep > Scalar::zero(eps_sep.kind())))
        fail_config("the separation threshold must be positive");
    if (p.times.back() > 0xffffffffull) fail_resource("time sequence reaches past the orbit range");

    ChaosReport report;
    report.kind = "dc-seq";
    report.horizon = p.times.back();
    report.caveat = kFiniteHorizonCaveat;
    report.params["t_small"] = t_small.str();
    report.params["eps_sep"] = eps_sep.str();
    report.params["choices_x"] = choices_x;
    report.params["choices_y"] = choices_y;
    report.params["times"] = p.times;

    // Gap at each listed time, plus the per-index predicate: agreement
    // indices want a small gap, disagreement indices want a large one.
    Orbit ox(f, x), oy(f, y);
    std::vector<Scalar> gaps;
    std::vector<bool> agree_at, pred_at;
    gaps.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto t = static_cast<unsigned>(p.at(i));
        ox.advance_to(t);
        oy.advance_to(t);
        const Scalar gap = hausdorff(ox.current(), oy.current(), f.metric());
        const bool agree = choices_x[i] == choices_y[i];
        gaps.push_back(gap);
        agree_at.push_back(agree);
        pred_at.push_back(agree ? gap < t_small : gap > eps_sep);
    }

    Json rows = Json::array();
    bool all_ok = true;
    unsigned checked = 0;
    for (unsigned n = 2; factorial(n) <= k; ++n) {
        const std::uint64_t lo = factorial(n - 1);
        const std::uint64_t hi = factorial(n);
        bool any_agree = false, any_differ = false;
        for (std::uint64_t i = lo + 1; i <= hi; ++i)
            (agree_at[i - 1] ? any_agree : any_differ) = true;
        Json row;
        row["n"] = n;
        row["from"] = lo + 1;
        row["to"] = hi;
        if (any_agree && any_differ) {
            row["type"] = "mixed";
            row["skipped"] = true;
            rows.push_back(row);
            continue;
        }
        std::uint64_t hits = 0, prefix_hits = 0;
        for (std::uint64_t i = 1; i <= hi; ++i) {
            if (!pred_at[i - 1]) continue;
            ++prefix_hits;
            if (i > lo) ++hits;
        }
        const std::uint64_t size = hi - lo;
        const Rational fraction(hits, size);
        const Rational bound(n, n + 1u);
        const bool ok = fraction >= bound;
        row["type"] = any_agree ? "agreement" : "disagreement";
        row["count"] = hits;
        row["size"] = size;
        row["fraction"] = format_rational(fraction);
        row["bound"] = format_rational(bound);
        row["prefix_count"] = prefix_hits;
        row["prefix_fraction"] = format_rational(Rational(prefix_hits, hi));
        row["ok"] = ok;
        rows.push_back(row);
        ++checked;
        if (!ok) all_ok = false;
    }

    Json gap_rows = Json::array();
    for (std::size_t i = 0; i < k; ++i) {
        Json g;
        g["i"] = i + 1;
        g["time"] = p.at(i);
        g["type"] = agree_at[i] ? "agreement" : "disagreement";
        g["gap"] = gaps[i].str();
        g["ok"] = static_cast<bool>(pred_at[i]);
        gap_rows.push_back(g);
    }

    report.found = all_ok && checked > 0;
    Json wit;
    wit["x"] = x.str();
    wit["y"] = y.str();
    report.witnesses.push_back(wit);
    report.results["blocks"] = rows;
    report.results["gaps"] = gap_rows;
    report.results["checked_blocks"] = checked;
    return report;
}

} // namespace mmchaos
