#include "mmchaos/metric.hpp"

#include "mmchaos/errors.hpp"
#include "mmchaos/finite_set.hpp"

namespace mmchaos {

unsigned MetricOptions::truncation_depth() const {
    if (symbol_tolerance <= 0)
        fail_config("symbol tolerance must be positive");
    unsigned depth = 2;
    Rational bound = 1; // 2^-(depth-2)
    while (bound > symbol_tolerance && depth < 4096) {
        bound /= 2;
        ++depth;
    }
    return depth < 4 ? 4 : depth;
}

namespace {

DistanceBound symbol_distance(const SymbolPoint& a, const SymbolPoint& b, unsigned depth) {
    Rational sum = 0;
    Rational term = 1; // 2^-i
    std::uint64_t plen = std::max(a.prefix_length(), b.prefix_length());
    bool exact = false;
    for (unsigned i = 0; i < depth; ++i, term /= 2) {
        if (i >= plen && a.tail() != TailKind::WordU && b.tail() != TailKind::WordU) {
            // Both points ran into constant tails: the remainder is a full
            // geometric series (tails differ) or zero (tails agree).
            if (a.tail() != b.tail())
                sum += term * 2;
            exact = true;
            break;
        }
        if (a.at(i) != b.at(i))
            sum += term;
    }
    DistanceBound out{Scalar(std::move(sum)), Rational(0)};
    if (!exact) {
        // Remaining indices contribute at most sum_{i>=depth} 2^-i.
        out.error_bound = pow2(1 - static_cast<int>(depth));
    }
    return out;
}

} // namespace

DistanceBound point_distance_bound(const Point& a, const Point& b, const MetricOptions& options) {
    if (a.space() != b.space())
        fail_type("points live in different ground spaces");
    if (a.space() == Space::Interval)
        return DistanceBound{a.interval().abs_diff(b.interval()), Rational(0)};
    return symbol_distance(a.symbol(), b.symbol(), options.truncation_depth());
}

Scalar point_distance(const Point& a, const Point& b, const MetricOptions& options) {
    return point_distance_bound(a, b, options).value;
}

DirectedWitness directed_distance_witness(const FiniteSet& a, const FiniteSet& b,
                                          const MetricOptions& options) {
    if (a.space() != b.space())
        fail_type("sets live in different ground spaces");
    DirectedWitness best;
    bool have_best = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Scalar nearest;
        std::size_t nearest_j = 0;
        bool have_nearest = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            Scalar d = point_distance(a.at(i), b.at(j), options);
            if (!have_nearest || d < nearest) {
                nearest = std::move(d);
                nearest_j = j;
                have_nearest = true;
            }
        }
        if (!have_best || nearest > best.value) {
            best.value = std::move(nearest);
            best.from_index = i;
            best.to_index = nearest_j;
            have_best = true;
        }
    }
    return best;
}

Scalar directed_distance(const FiniteSet& a, const FiniteSet& b, const MetricOptions& options) {
    return directed_distance_witness(a, b, options).value;
}

Scalar hausdorff(const FiniteSet& a, const FiniteSet& b, const MetricOptions& options) {
    Scalar ab = directed_distance(a, b, options);
    Scalar ba = directed_distance(b, a, options);
    return ab < ba ? ba : ab;
}

} // namespace mmchaos
