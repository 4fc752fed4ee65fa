#pragma once

#include "mmchaos/endomorphism.hpp"
#include "mmchaos/finite_set.hpp"
#include "mmchaos/metric.hpp"
#include "mmchaos/region.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mmchaos {

// A multiple mapping: an ordered nonempty tuple of self-maps of one ground
// space, iterated set-valuedly. F(A) applies every map to every point of A
// and dedups; F^n is n such steps.
class MultiMap {
  public:
    MultiMap(std::vector<MapPtr> maps, std::optional<Scalar> dedup_tolerance = std::nullopt,
             MetricOptions metric = {});

    Space space() const { return space_; }
    std::size_t arity() const { return maps_.size(); }
    const std::vector<MapPtr>& maps() const { return maps_; }
    const std::optional<Scalar>& dedup_tolerance() const { return dedup_tolerance_; }
    const MetricOptions& metric() const { return metric_; }

    FiniteSet step(const FiniteSet& a) const;
    FiniteSet iterate(const Point& x, unsigned n) const;
    FiniteSet iterate(const FiniteSet& a, unsigned n) const;

  private:
    std::vector<MapPtr> maps_;
    std::optional<Scalar> dedup_tolerance_;
    MetricOptions metric_;
    Space space_;
};

// A running orbit of image sets: current() is F^time()(start), advance()
// moves one step. Probes share these to avoid recomputing prefixes.
class Orbit {
  public:
    Orbit(const MultiMap& f, Point start);
    Orbit(const MultiMap& f, FiniteSet start);

    const FiniteSet& current() const { return current_; }
    unsigned time() const { return time_; }
    void advance();
    // Advance until time() == t (t must not be behind the current time).
    void advance_to(unsigned t);

  private:
    const MultiMap* f_;
    FiniteSet current_;
    unsigned time_ = 0;
};

// The sequence d_H(F^i(x), F^i(y)) for i = 0..horizon-1, image sets carried
// forward step by step.
std::vector<Scalar> orbit_gaps(const MultiMap& f, const Point& x, const Point& y,
                               unsigned horizon);

struct RangeSample {
    unsigned depth = 0;
    Rational grid_step;
    std::vector<FiniteSet> sets; // deduped under d_H <= eta
    bool stabilized = false;
};

// Sample {F^N(x) : x in the step-spaced grid of [0,1]}, dedup the collection
// under d_H <= eta, and check stabilization: every depth-(N+1) sampled set
// must match a depth-N one within eta. Interval systems only.
RangeSample range_sample(const MultiMap& f, unsigned depth, const Rational& grid_step,
                         Scalar::Kind kind = Scalar::Kind::Exact);

// All grid points x with F^n(x) contained in V, in ascending order.
std::vector<Point> preimage_hits(const MultiMap& f, unsigned n, const OpenRegion& v,
                                 const Rational& grid_step,
                                 Scalar::Kind kind = Scalar::Kind::Exact);

// The eta used when deduplicating collections of sets for a given system.
Scalar collection_tolerance(const MultiMap& f, Scalar::Kind kind);

// Grid {0, s, 2s, ..., 1}; s must divide 1.
std::vector<Point> unit_grid(const Rational& step, Scalar::Kind kind);

} // namespace mmchaos
