#include "mmchaos/probes.hpp"

#include "mmchaos/errors.hpp"

#include <algorithm>

namespace mmchaos {

namespace {

// Lazily extended image-set history for a list of start points, shared by the
// searches so every (point, time) pair is iterated at most once.
class OrbitTable {
  public:
    OrbitTable(const MultiMap& f, std::vector<Point> pts) : f_(&f) {
        orbits_.reserve(pts.size());
        hist_.resize(pts.size());
        for (Point& p : pts) {
            orbits_.emplace_back(f, p);
            hist_[orbits_.size() - 1].push_back(orbits_.back().current());
        }
    }

    std::size_t size() const { return orbits_.size(); }

    const FiniteSet& at(std::size_t i, unsigned n) {
        auto& h = hist_[i];
        while (h.size() <= n) {
            orbits_[i].advance();
            h.push_back(orbits_[i].current());
        }
        return h[n];
    }

    const Point& start(std::size_t i) { return hist_[i][0].at(0); }

  private:
    const MultiMap* f_;
    std::vector<Orbit> orbits_;
    std::vector<std::vector<FiniteSet>> hist_;
};

std::vector<Point> region_grid(const OpenRegion& region, const Rational& step) {
    std::vector<Point> pts;
    for (Scalar& s : region.grid_points(step))
        pts.emplace_back(std::move(s));
    if (pts.empty())
        fail_config("region " + region.str() + " contains no grid point at step " +
                    format_rational(step) + "; refine the grid");
    return pts;
}

struct PairHit {
    bool found = false;
    std::size_t i = 0, j = 0;
    unsigned n = 0;
    Scalar gap;
};

// First (x_i, x_j, n) in scan order (pairs outer, time inner) whose gap
// clears the predicate.
template <typename Pred>
PairHit scan_pair_gap(const MultiMap& f, OrbitTable& a, OrbitTable& b, bool same_table,
                      unsigned horizon, unsigned stride, Pred&& pred) {
    PairHit hit;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t j0 = same_table ? i + 1 : 0;
        for (std::size_t j = j0; j < b.size(); ++j) {
            for (unsigned n = 1; n <= horizon; ++n) {
                Scalar gap = hausdorff(a.at(i, n * stride), b.at(j, n * stride), f.metric());
                if (pred(gap)) {
                    hit.found = true;
                    hit.i = i;
                    hit.j = j;
                    hit.n = n;
                    hit.gap = gap;
                    return hit;
                }
            }
        }
    }
    return hit;
}

// Same predicate search but with the time loop outermost, for probes whose
// witnesses appear at a common late time (orbit collapse).
template <typename Pred>
PairHit scan_time_first(const MultiMap& f, OrbitTable& a, OrbitTable& b, bool same_table,
                        unsigned horizon, unsigned stride, Pred&& pred) {
    PairHit hit;
    for (unsigned n = 1; n <= horizon; ++n)
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::size_t j0 = same_table ? i + 1 : 0;
            for (std::size_t j = j0; j < b.size(); ++j) {
                Scalar gap = hausdorff(a.at(i, n * stride), b.at(j, n * stride), f.metric());
                if (pred(gap)) {
                    hit.found = true;
                    hit.i = i;
                    hit.j = j;
                    hit.n = n;
                    hit.gap = gap;
                    return hit;
                }
            }
        }
    return hit;
}

Json pair_witness(OrbitTable& a, OrbitTable& b, const PairHit& hit, unsigned stride) {
    Json w;
    w["x"] = a.start(hit.i).str();
    w["y"] = b.start(hit.j).str();
    w["n"] = hit.n;
    w["time"] = hit.n * stride;
    w["gap"] = hit.gap.str();
    return w;
}

} // namespace

ChaosReport li_yorke_scan(const MultiMap& f, const std::vector<std::pair<Point, Point>>& pairs,
                          unsigned horizon, const Scalar& delta, const Scalar& epsilon,
                          unsigned window) {
    if (pairs.empty())
        fail_config("li-yorke scan needs at least one pair");
    if (horizon == 0)
        fail_config("horizon must be positive");
    if (!(Scalar::zero(delta.kind()) < delta) || !(Scalar::zero(epsilon.kind()) < epsilon))
        fail_config("delta and epsilon must be positive");
    unsigned w = window == 0 ? default_window(horizon) : window;
    if (w > horizon)
        fail_config("window cannot exceed the horizon");

    ChaosReport report;
    report.kind = "li-yorke";
    report.horizon = horizon;
    report.caveat = kFiniteHorizonCaveat;
    report.params["delta"] = delta.str();
    report.params["epsilon"] = epsilon.str();
    report.params["window"] = w;

    Json detail = Json::array();
    for (const auto& [x, y] : pairs) {
        std::vector<Scalar> gaps = orbit_gaps(f, x, y, horizon);
        bool proximal = false, separated = false;
        std::size_t i_prox = 0, i_sep = 0;
        for (std::size_t i = horizon - w; i < horizon; ++i) {
            if (!proximal && gaps[i] < epsilon) {
                proximal = true;
                i_prox = i;
            }
            if (!separated && gaps[i] > delta) {
                separated = true;
                i_sep = i;
            }
        }
        Json d;
        d["x"] = x.str();
        d["y"] = y.str();
        d["proximal"] = proximal;
        d["separated"] = separated;
        detail.push_back(d);
        if (proximal && separated && !report.found) {
            report.found = true;
            Json w1;
            w1["x"] = x.str();
            w1["y"] = y.str();
            w1["proximal_time"] = i_prox;
            w1["proximal_gap"] = gaps[i_prox].str();
            w1["separated_time"] = i_sep;
            w1["separated_gap"] = gaps[i_sep].str();
            report.witnesses.push_back(w1);
        }
    }
    report.results["pairs"] = detail;
    return report;
}

ChaosReport sensitivity_probe(const MultiMap& f, const Scalar& delta,
                              const std::vector<OpenRegion>& opens, unsigned horizon,
                              const Rational& grid_step, unsigned stride) {
    if (opens.empty())
        fail_config("sensitivity probe needs at least one open region");
    if (!(Scalar::zero(delta.kind()) < delta))
        fail_config("delta must be positive");
    if (horizon == 0 || stride == 0)
        fail_config("horizon and stride must be positive");

    ChaosReport report;
    report.kind = "sensitivity";
    report.horizon = horizon;
    report.caveat = kFiniteHorizonCaveat;
    report.params["delta"] = delta.str();
    report.params["grid_step"] = format_rational(grid_step);
    report.params["stride"] = stride;

    report.found = true;
    Json per_region = Json::array();
    for (const OpenRegion& u : opens) {
        OrbitTable table(f, region_grid(u, grid_step));
        PairHit hit = scan_pair_gap(f, table, table, true, horizon, stride,
                                    [&](const Scalar& g) { return g > delta; });
        Json r;
        r["region"] = u.str();
        r["found"] = hit.found;
        per_region.push_back(r);
        if (hit.found) {
            Json w = pair_witness(table, table, hit, stride);
            w["region"] = u.str();
            report.witnesses.push_back(w);
        } else {
            report.found = false;
        }
    }
    report.results["regions"] = per_region;
    return report;
}

ChaosReport accessibility_probe(const MultiMap& f, const Scalar& epsilon, const OpenRegion& u,
                                const OpenRegion& v, unsigned horizon, const Rational& grid_step,
                                unsigned stride) {
    if (!(Scalar::zero(epsilon.kind()) < epsilon))
        fail_config("epsilon must be positive");
    if (horizon == 0 || stride == 0)
        fail_config("horizon and stride must be positive");

    ChaosReport report;
    report.kind = "accessibility";
    report.horizon = horizon;
    report.caveat = kFiniteHorizonCaveat;
    report.params["epsilon"] = epsilon.str();
    report.params["grid_step"] = format_rational(grid_step);
    report.params["stride"] = stride;
    report.params["U"] = u.str();
    report.params["V"] = v.str();

    OrbitTable ta(f, region_grid(u, grid_step));
    OrbitTable tb(f, region_grid(v, grid_step));
    PairHit hit = scan_time_first(f, ta, tb, false, horizon, stride,
                                  [&](const Scalar& g) { return g < epsilon; });
    report.found = hit.found;
    if (hit.found)
        report.witnesses.push_back(pair_witness(ta, tb, hit, stride));
    return report;
}

ChaosReport kato_report(const MultiMap& f, const Scalar& delta, const Scalar& epsilon,
                        const std::vector<OpenRegion>& opens, unsigned horizon,
                        const Rational& grid_step, const std::vector<unsigned>& powers) {
    if (opens.empty())
        fail_config("kato report needs a region suite");
    if (powers.empty())
        fail_config("kato report needs at least one power");
    for (unsigned k : powers)
        if (k == 0)
            fail_config("powers must be positive");

    ChaosReport report;
    report.kind = "kato";
    report.horizon = horizon;
    report.caveat = kFiniteHorizonCaveat;
    report.params["delta"] = delta.str();
    report.params["epsilon"] = epsilon.str();
    report.params["grid_step"] = format_rational(grid_step);
    Json pj = Json::array();
    for (unsigned k : powers)
        pj.push_back(k);
    report.params["powers"] = pj;

    // One table per region, shared across powers and both sub-probes.
    std::vector<OrbitTable> tables;
    tables.reserve(opens.size());
    for (const OpenRegion& u : opens)
        tables.emplace_back(f, region_grid(u, grid_step));

    Json per_power = Json::array();
    bool agreement = true;
    bool base_kato = false;
    bool first_flag_set = false;
    bool first_flag = false;
    for (unsigned k : powers) {
        bool sensitive = true;
        for (std::size_t r = 0; r < tables.size() && sensitive; ++r) {
            PairHit hit = scan_pair_gap(f, tables[r], tables[r], true, horizon, k,
                                        [&](const Scalar& g) { return g > delta; });
            if (hit.found) {
                if (k == powers.front()) {
                    Json w = pair_witness(tables[r], tables[r], hit, k);
                    w["region"] = opens[r].str();
                    w["role"] = "sensitivity";
                    report.witnesses.push_back(w);
                }
            } else {
                sensitive = false;
            }
        }
        bool accessible = sensitive; // skip the expensive half once refuted
        if (sensitive) {
            for (std::size_t i = 0; i < tables.size() && accessible; ++i)
                for (std::size_t j = i; j < tables.size() && accessible; ++j) {
                    PairHit hit = scan_time_first(f, tables[i], tables[j], i == j, horizon, k,
                                                  [&](const Scalar& g) { return g < epsilon; });
                    if (!hit.found)
                        accessible = false;
                    else if (k == powers.front() && i == 0 && j == 0) {
                        Json w = pair_witness(tables[i], tables[j], hit, k);
                        w["role"] = "accessibility";
                        report.witnesses.push_back(w);
                    }
                }
        }
        bool kato = sensitive && accessible;
        Json row;
        row["k"] = k;
        row["sensitive"] = sensitive;
        row["accessible"] = accessible;
        row["kato"] = kato;
        per_power.push_back(row);
        if (!first_flag_set) {
            first_flag = kato;
            first_flag_set = true;
            base_kato = kato;
        } else if (kato != first_flag) {
            agreement = false;
        }
    }
    report.found = base_kato;
    report.results["powers"] = per_power;
    report.results["agreement"] = agreement;
    return report;
}

void require_admissible(const MultiMap& f, const OpenRegion& v, const Rational& grid_step,
                        unsigned depth) {
    Scalar::Kind kind = v.space() == Space::Interval ? v.scalar_kind() : Scalar::Kind::Exact;
    RangeSample sample = range_sample(f, depth, grid_step, kind);
    for (const FiniteSet& s : sample.sets)
        if (v.contains_set(s))
            return;
    fail_admissibility("target region " + v.str() +
                       " contains no sampled range element (depth " + std::to_string(depth) +
                       ", grid step " + format_rational(grid_step) + ")");
}

namespace {

// hits[n] = index of the first grid point x with F^n(x) inside v, or npos.
std::vector<std::size_t> containment_hits(const MultiMap& f, OrbitTable& table,
                                          const OpenRegion& v, unsigned max_time) {
    std::vector<std::size_t> hits(max_time + 1, static_cast<std::size_t>(-1));
    for (unsigned n = 1; n <= max_time; ++n)
        for (std::size_t i = 0; i < table.size(); ++i)
            if (v.contains_set(table.at(i, n))) {
                hits[n] = i;
                break;
            }
    (void)f;
    return hits;
}

} // namespace

ChaosReport transitivity_probe(const MultiMap& f, const OpenRegion& u, const OpenRegion& v,
                               unsigned horizon, unsigned min_time, const Rational& grid_step) {
    if (horizon <= min_time)
        fail_config("horizon must exceed the minimum time");
    require_admissible(f, v, grid_step);

    ChaosReport report;
    report.kind = "transitive";
    report.horizon = horizon;
    report.caveat = kFiniteHorizonCaveat;
    report.params["U"] = u.str();
    report.params["V"] = v.str();
    report.params["min_time"] = min_time;
    report.params["grid_step"] = format_rational(grid_step);

    OrbitTable table(f, region_grid(u, grid_step));
    for (unsigned n = min_time + 1; n <= horizon; ++n)
        for (std::size_t i = 0; i < table.size(); ++i)
            if (v.contains_set(table.at(i, n))) {
                report.found = true;
                Json w;
                w["x"] = table.start(i).str();
                w["n"] = n;
                w["image"] = table.at(i, n).str();
                report.witnesses.push_back(w);
                report.results["n"] = n;
                return report;
            }
    return report;
}

ChaosReport mixing_probe(const MultiMap& f, const OpenRegion& u, const OpenRegion& v,
                         unsigned start, unsigned window, const Rational& grid_step) {
    if (start == 0 || window == 0)
        fail_config("start and window must be positive");
    require_admissible(f, v, grid_step);

    ChaosReport report;
    report.kind = "mixing";
    report.horizon = start + window;
    report.caveat = kFiniteHorizonCaveat;
    report.params["U"] = u.str();
    report.params["V"] = v.str();
    report.params["start"] = start;
    report.params["window"] = window;
    report.params["grid_step"] = format_rational(grid_step);

    OrbitTable table(f, region_grid(u, grid_step));
    std::vector<std::size_t> hits = containment_hits(f, table, v, start + window);
    for (unsigned N = 1; N <= start; ++N) {
        bool all = true;
        for (unsigned n = N; n <= N + window && all; ++n)
            if (hits[n] == static_cast<std::size_t>(-1))
                all = false;
        if (all) {
            report.found = true;
            report.results["N"] = N;
            for (unsigned n = N; n <= N + window; ++n) {
                Json w;
                w["n"] = n;
                w["x"] = table.start(hits[n]).str();
                report.witnesses.push_back(w);
            }
            return report;
        }
    }
    return report;
}

ChaosReport weak_mixing_probe(const MultiMap& f, const OpenRegion& u1, const OpenRegion& v1,
                              const OpenRegion& u2, const OpenRegion& v2, unsigned horizon,
                              const Rational& grid_step) {
    if (horizon == 0)
        fail_config("horizon must be positive");
    require_admissible(f, v1, grid_step);
    require_admissible(f, v2, grid_step);

    ChaosReport report;
    report.kind = "weak-mixing";
    report.horizon = horizon;
    report.caveat = kFiniteHorizonCaveat;
    report.params["U1"] = u1.str();
    report.params["V1"] = v1.str();
    report.params["U2"] = u2.str();
    report.params["V2"] = v2.str();
    report.params["grid_step"] = format_rational(grid_step);

    OrbitTable t1(f, region_grid(u1, grid_step));
    OrbitTable t2(f, region_grid(u2, grid_step));
    std::vector<std::size_t> h1 = containment_hits(f, t1, v1, horizon);
    std::vector<std::size_t> h2 = containment_hits(f, t2, v2, horizon);
    for (unsigned n = 1; n <= horizon; ++n)
        if (h1[n] != static_cast<std::size_t>(-1) && h2[n] != static_cast<std::size_t>(-1)) {
            report.found = true;
            report.results["n"] = n;
            Json w1;
            w1["pair"] = 1;
            w1["n"] = n;
            w1["x"] = t1.start(h1[n]).str();
            report.witnesses.push_back(w1);
            Json w2;
            w2["pair"] = 2;
            w2["n"] = n;
            w2["x"] = t2.start(h2[n]).str();
            report.witnesses.push_back(w2);
            return report;
        }
    return report;
}

ChaosReport snw_frequency(const MultiMap& f, const OpenRegion& v,
                          const std::vector<Point>& witnesses, std::uint64_t horizon,
                          const Rational& threshold, std::vector<std::uint64_t> checkpoints) {
    if (witnesses.empty())
        fail_config("snw probe needs at least one witness point");
    if (horizon == 0)
        fail_config("horizon must be positive");
    std::sort(checkpoints.begin(), checkpoints.end());
    for (std::uint64_t c : checkpoints)
        if (c == 0 || c > horizon)
            fail_config("checkpoints must lie in [1, horizon]");

    ChaosReport report;
    report.kind = "snw";
    report.horizon = horizon;
    report.caveat = kFiniteHorizonCaveat;
    report.params["V"] = v.str();
    report.params["threshold"] = format_rational(threshold);

    unsigned w = default_window(horizon);
    Json detail = Json::array();
    for (const Point& y : witnesses) {
        Orbit orbit(f, y);
        std::uint64_t count = 0;
        Rational tail_max(0);
        std::size_t next_cp = 0;
        Json cps = Json::array();
        for (std::uint64_t i = 0; i < horizon; ++i) {
            if (i)
                orbit.advance();
            if (v.intersects_set(orbit.current()))
                ++count;
            std::uint64_t r = i + 1;
            if (r + w > horizon) {
                Rational freq(count, r);
                tail_max = std::max(tail_max, freq);
            }
            if (next_cp < checkpoints.size() && checkpoints[next_cp] == r) {
                Json cp;
                cp["r"] = r;
                cp["count"] = count;
                cp["freq"] = format_rational(Rational(count, r));
                cps.push_back(cp);
                ++next_cp;
            }
        }
        Json d;
        d["y"] = y.str();
        d["count"] = count;
        d["freq"] = format_rational(Rational(count, horizon));
        d["tail_max"] = format_rational(tail_max);
        bool above = tail_max >= threshold;
        d["above_threshold"] = above;
        if (!cps.empty())
            d["checkpoints"] = cps;
        detail.push_back(d);
        if (above && !report.found) {
            report.found = true;
            Json wit;
            wit["y"] = y.str();
            wit["tail_max"] = format_rational(tail_max);
            report.witnesses.push_back(wit);
        }
    }
    report.results["witnesses"] = detail;
    return report;
}

std::vector<OpenRegion> default_open_suite() {
    std::vector<OpenRegion> suite;
    for (int j = 0; j < 16; ++j) {
        IntervalComponent c;
        c.lo = Scalar(Rational(j, 16));
        c.hi = Scalar(Rational(j + 1, 16));
        c.closed_lo = j == 0;
        c.closed_hi = j == 15;
        suite.push_back(OpenRegion::intervals({c}));
    }
    return suite;
}

} // namespace mmchaos
