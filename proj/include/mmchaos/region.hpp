#pragma once

#include "mmchaos/finite_set.hpp"
#include "mmchaos/point.hpp"

#include <vector>

namespace mmchaos {

// One open interval piece. Closed ends are only meaningful at the space
// boundary, where [0, h) and (l, 1] are relatively open in [0, 1].
struct IntervalComponent {
    Scalar lo, hi;
    bool closed_lo = false;
    bool closed_hi = false;
};

// A nonempty open region: a finite union of interval components, or a finite
// union of cylinder sets (all sequences extending a finite word).
class OpenRegion {
public:
    static OpenRegion intervals(std::vector<IntervalComponent> components);
    static OpenRegion cylinders(std::vector<BitWord> words);

    Space space() const { return space_; }
    Scalar::Kind scalar_kind() const; // interval regions only

    bool contains(const Point& p) const;
    bool contains_set(const FiniteSet& s) const;   // every point inside
    bool intersects_set(const FiniteSet& s) const; // some point inside

    const std::vector<IntervalComponent>& components() const { return components_; }
    const std::vector<BitWord>& cylinder_words() const { return words_; }

    // Ascending uniform grid points j * step that lie in the region.
    std::vector<Scalar> grid_points(const Rational& step) const;

    std::string str() const;

private:
    Space space_ = Space::Interval;
    std::vector<IntervalComponent> components_;
    std::vector<BitWord> words_;
};

// Open metric neighborhood of a finite set. Interval: union of open intervals
// clipped to [0, 1], boundary points included when strictly within radius.
// Symbol: cylinders fixing the first ceil(log2(1/radius)) + 2 symbols of each
// member, a subset of the true radius ball.
OpenRegion ball(const FiniteSet& a, const Scalar& radius);

} // namespace mmchaos
