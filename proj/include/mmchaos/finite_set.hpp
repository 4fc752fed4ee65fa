#pragma once

#include "mmchaos/metric.hpp"
#include "mmchaos/point.hpp"

#include <optional>
#include <vector>

namespace mmchaos {

// Nonempty finite point set in canonical form: ascending order (numeric for
// interval points, lexicographic for symbol sequences) with no two stored
// points within the dedup tolerance of each other. Tolerance zero means exact
// duplicate removal.
class FiniteSet {
public:
    explicit FiniteSet(std::vector<Point> points, std::optional<Scalar> dedup_tolerance = {},
                       const MetricOptions& options = {});
    static FiniteSet single(Point p, std::optional<Scalar> dedup_tolerance = {});

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Point& at(std::size_t i) const { return points_[i]; }
    Space space() const { return space_; }
    const Scalar& dedup_tolerance() const { return dedup_tolerance_; }
    Scalar::Kind scalar_kind() const; // interval sets only

    bool operator==(const FiniteSet& o) const;
    bool operator!=(const FiniteSet& o) const { return !(*this == o); }

    // "{0/1, 1/2, 1/1}"
    std::string str() const;

    static Scalar default_tolerance(Space space, Scalar::Kind kind);

private:
    std::vector<Point> points_;
    Space space_;
    Scalar dedup_tolerance_;
};

} // namespace mmchaos
