#include "mmchaos/finite_set.hpp"

#include "mmchaos/errors.hpp"

#include <algorithm>

namespace mmchaos {

Scalar FiniteSet::default_tolerance(Space space, Scalar::Kind kind) {
    if (space == Space::Interval && kind == Scalar::Kind::Binary)
        return Scalar(1.0 / static_cast<double>(std::uint64_t(1) << 40));
    return Scalar(Rational(0));
}

FiniteSet::FiniteSet(std::vector<Point> points, std::optional<Scalar> dedup_tolerance,
                     const MetricOptions& options)
    : space_(Space::Interval), dedup_tolerance_(Scalar(Rational(0))) {
    if (points.empty())
        fail_type("finite set must be nonempty");
    space_ = points.front().space();
    for (const Point& p : points)
        if (p.space() != space_)
            fail_type("finite set mixes ground spaces");
    if (space_ == Space::Interval) {
        Scalar::Kind kind = points.front().interval().kind();
        for (const Point& p : points)
            if (p.interval().kind() != kind)
                fail_type("finite set mixes scalar kinds");
        dedup_tolerance_ = dedup_tolerance ? *dedup_tolerance : default_tolerance(space_, kind);
        if (dedup_tolerance_.kind() != kind)
            fail_type("dedup tolerance kind does not match the set");
    } else {
        dedup_tolerance_ = dedup_tolerance ? *dedup_tolerance : Scalar(Rational(0));
        if (!dedup_tolerance_.is_exact())
            fail_type("symbol sets use exact tolerances");
    }

    if (space_ == Space::Interval) {
        std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
            return a.interval() < b.interval();
        });
    } else {
        std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
            return a.symbol().compare(b.symbol()) < 0;
        });
    }

    bool exact_only = space_ == Space::Symbol
                          ? dedup_tolerance_.rational() == 0
                          : dedup_tolerance_ == Scalar::zero(dedup_tolerance_.kind());
    for (Point& p : points) {
        bool keep = true;
        for (const Point& kept : points_) {
            if (exact_only) {
                if (kept.equals(p)) {
                    keep = false;
                    break;
                }
            } else if (!(point_distance(kept, p, options) > dedup_tolerance_)) {
                keep = false;
                break;
            }
        }
        if (keep)
            points_.push_back(std::move(p));
    }
}

FiniteSet FiniteSet::single(Point p, std::optional<Scalar> dedup_tolerance) {
    std::vector<Point> pts;
    pts.push_back(std::move(p));
    return FiniteSet(std::move(pts), std::move(dedup_tolerance));
}

Scalar::Kind FiniteSet::scalar_kind() const {
    if (space_ != Space::Interval)
        fail_type("scalar kind only applies to interval sets");
    return points_.front().interval().kind();
}

bool FiniteSet::operator==(const FiniteSet& o) const {
    if (space_ != o.space_ || points_.size() != o.points_.size())
        return false;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (!points_[i].equals(o.points_[i]))
            return false;
    return true;
}

std::string FiniteSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i)
            out += ", ";
        out += points_[i].str();
    }
    out += "}";
    return out;
}

} // namespace mmchaos
