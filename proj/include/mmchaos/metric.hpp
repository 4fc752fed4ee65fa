#pragma once

#include "mmchaos/point.hpp"

namespace mmchaos {

class FiniteSet;

// Controls the truncation depth used when comparing symbol sequences: the
// partial sum over indices 0..L-1 carries error at most 2^-(L-2), and L is
// the smallest depth for which that bound is <= symbol_tolerance. Distances
// involving only constant tails are summed in closed form and are exact.
struct MetricOptions {
    Rational symbol_tolerance = Rational(1, std::uint64_t(1) << 40);
    unsigned truncation_depth() const;
};

struct DistanceBound {
    Scalar value;
    Rational error_bound; // zero when the value is exact
};

DistanceBound point_distance_bound(const Point& a, const Point& b,
                                   const MetricOptions& options = {});
Scalar point_distance(const Point& a, const Point& b, const MetricOptions& options = {});

struct DirectedWitness {
    std::size_t from_index = 0; // attaining point in the first set
    std::size_t to_index = 0;   // nearest point in the second set
    Scalar value;
};

// sup over a in A of inf over b in B of d(a, b). Ties keep the lowest index.
DirectedWitness directed_distance_witness(const FiniteSet& a, const FiniteSet& b,
                                          const MetricOptions& options = {});
Scalar directed_distance(const FiniteSet& a, const FiniteSet& b,
                         const MetricOptions& options = {});
Scalar hausdorff(const FiniteSet& a, const FiniteSet& b, const MetricOptions& options = {});

} // namespace mmchaos
