#include "mmchaos/multimap.hpp"

#include "mmchaos/errors.hpp"

#include <algorithm>

namespace mmchaos {

namespace {

// Hard cap on intermediate image-set size; honest systems collapse far below
// this, so hitting it signals a runaway configuration rather than real work.
constexpr std::size_t kMaxSetSize = 1u << 20;

} // namespace

MultiMap::MultiMap(std::vector<MapPtr> maps, std::optional<Scalar> dedup_tolerance,
                   MetricOptions metric)
    : maps_(std::move(maps)), dedup_tolerance_(std::move(dedup_tolerance)),
      metric_(std::move(metric)) {
    if (maps_.empty())
        fail_config("a multiple mapping needs at least one map");
    for (const MapPtr& m : maps_)
        if (!m)
            fail_config("a multiple mapping cannot hold a null map");
    space_ = maps_.front()->space();
    for (const MapPtr& m : maps_)
        if (m->space() != space_)
            fail_type("all maps of a multiple mapping must share one ground space");
}

FiniteSet MultiMap::step(const FiniteSet& a) const {
    if (a.space() != space_)
        fail_type("set and multiple mapping live in different ground spaces");
    if (a.size() * maps_.size() > kMaxSetSize)
        fail_resource("image set would exceed the size cap");
    std::vector<Point> images;
    images.reserve(a.size() * maps_.size());
    for (const MapPtr& m : maps_)
        for (const Point& p : a.points())
            images.push_back(m->apply(p));
    return FiniteSet(std::move(images), dedup_tolerance_, metric_);
}

FiniteSet MultiMap::iterate(const Point& x, unsigned n) const {
    return iterate(FiniteSet({x}, dedup_tolerance_, metric_), n);
}

FiniteSet MultiMap::iterate(const FiniteSet& a, unsigned n) const {
    FiniteSet cur = a;
    for (unsigned i = 0; i < n; ++i)
        cur = step(cur);
    return cur;
}

Orbit::Orbit(const MultiMap& f, Point start)
    : f_(&f), current_(FiniteSet({std::move(start)}, f.dedup_tolerance(), f.metric())) {}

Orbit::Orbit(const MultiMap& f, FiniteSet start) : f_(&f), current_(std::move(start)) {}

void Orbit::advance() {
    current_ = f_->step(current_);
    ++time_;
}

void Orbit::advance_to(unsigned t) {
    if (t < time_)
        fail_internal("orbit cannot run backwards");
    while (time_ < t)
        advance();
}

std::vector<Scalar> orbit_gaps(const MultiMap& f, const Point& x, const Point& y,
                               unsigned horizon) {
    if (x.space() != f.space() || y.space() != f.space())
        fail_type("points and multiple mapping live in different ground spaces");
    std::vector<Scalar> gaps;
    gaps.reserve(horizon);
    Orbit ox(f, x);
    Orbit oy(f, y);
    for (unsigned i = 0; i < horizon; ++i) {
        if (i) {
            ox.advance();
            oy.advance();
        }
        gaps.push_back(hausdorff(ox.current(), oy.current(), f.metric()));
    }
    return gaps;
}

Scalar collection_tolerance(const MultiMap& f, Scalar::Kind kind) {
    if (f.dedup_tolerance())
        return *f.dedup_tolerance();
    if (f.space() == Space::Interval && kind == Scalar::Kind::Binary)
        return Scalar(rational_to_double(pow2(-40)));
    return Scalar::zero(f.space() == Space::Interval ? kind : Scalar::Kind::Exact);
}

std::vector<Point> unit_grid(const Rational& step, Scalar::Kind kind) {
    if (step <= 0 || step > 1)
        fail_config("grid step must lie in (0, 1]");
    if (boost::multiprecision::numerator(step) != 1)
        fail_config("grid step must divide 1");
    BigInt count = boost::multiprecision::denominator(step);
    if (count > 1u << 24)
        fail_resource("grid is too fine");
    std::vector<Point> grid;
    grid.reserve(count.convert_to<std::size_t>() + 1);
    for (BigInt j = 0; j <= count; ++j)
        grid.emplace_back(Scalar::from_rational(Rational(j) * step, kind));
    return grid;
}

namespace {

std::vector<FiniteSet> dedup_collection(std::vector<FiniteSet> sets, const Scalar& eta,
                                        const MetricOptions& metric) {
    std::vector<FiniteSet> kept;
    for (FiniteSet& s : sets) {
        bool fresh = true;
        for (const FiniteSet& k : kept) {
            Scalar d = hausdorff(s, k, metric);
            if (d < eta || d == eta) {
                fresh = false;
                break;
            }
        }
        if (fresh)
            kept.push_back(std::move(s));
    }
    return kept;
}

bool matches_some(const FiniteSet& s, const std::vector<FiniteSet>& pool, const Scalar& eta,
                  const MetricOptions& metric) {
    for (const FiniteSet& k : pool) {
        Scalar d = hausdorff(s, k, metric);
        if (d < eta || d == eta)
            return true;
    }
    return false;
}

} // namespace

RangeSample range_sample(const MultiMap& f, unsigned depth, const Rational& grid_step,
                         Scalar::Kind kind) {
    if (f.space() != Space::Interval)
        fail_type("range sampling over a grid is defined for interval systems");
    if (depth == 0)
        fail_config("range sampling needs a positive depth");
    Scalar eta = collection_tolerance(f, kind);
    std::vector<Point> grid = unit_grid(grid_step, kind);

    std::vector<FiniteSet> at_depth;
    std::vector<FiniteSet> at_next;
    at_depth.reserve(grid.size());
    at_next.reserve(grid.size());
    for (const Point& x : grid) {
        Orbit o(f, x);
        o.advance_to(depth);
        at_depth.push_back(o.current());
        o.advance();
        at_next.push_back(o.current());
    }

    RangeSample out;
    out.depth = depth;
    out.grid_step = grid_step;
    out.sets = dedup_collection(std::move(at_depth), eta, f.metric());
    out.stabilized = true;
    for (const FiniteSet& s : dedup_collection(std::move(at_next), eta, f.metric()))
        if (!matches_some(s, out.sets, eta, f.metric())) {
            out.stabilized = false;
            break;
        }
    return out;
}

std::vector<Point> preimage_hits(const MultiMap& f, unsigned n, const OpenRegion& v,
                                 const Rational& grid_step, Scalar::Kind kind) {
    if (f.space() != Space::Interval)
        fail_type("grid preimage scans are defined for interval systems");
    if (v.space() != f.space())
        fail_type("target region and multiple mapping live in different ground spaces");
    std::vector<Point> hits;
    for (const Point& x : unit_grid(grid_step, kind))
        if (v.contains_set(f.iterate(x, n)))
            hits.push_back(x);
    return hits;
}

} // namespace mmchaos
