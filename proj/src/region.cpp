#include "mmchaos/region.hpp"

#include "mmchaos/errors.hpp"

#include <algorithm>

namespace mmchaos {

namespace {

std::string format_endpoint(const Scalar& s) {
    if (!s.is_exact())
        return s.str();
    const Rational& r = s.rational();
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return format_rational(r);
}

} // namespace

OpenRegion OpenRegion::intervals(std::vector<IntervalComponent> components) {
    OpenRegion region;
    region.space_ = Space::Interval;
    std::vector<IntervalComponent> kept;
    for (IntervalComponent& c : components) {
        if (c.lo.kind() != c.hi.kind())
            fail_type("interval component mixes scalar kinds");
        Scalar zero = Scalar::zero(c.lo.kind());
        Scalar one = Scalar::one(c.lo.kind());
        if (c.lo < zero || c.hi > one)
            fail_config("region endpoints must stay in [0, 1]");
        if (c.closed_lo && !(c.lo == zero))
            fail_config("a closed lower end is only open relative to [0, 1] at 0");
        if (c.closed_hi && !(c.hi == one))
            fail_config("a closed upper end is only open relative to [0, 1] at 1");
        bool degenerate = c.hi < c.lo || (c.lo == c.hi && !(c.closed_lo && c.closed_hi));
        if (degenerate)
            continue;
        kept.push_back(std::move(c));
    }
    if (kept.empty())
        fail_config("open region is empty");
    for (std::size_t i = 1; i < kept.size(); ++i)
        if (kept[i].lo.kind() != kept[0].lo.kind())
            fail_type("region components mix scalar kinds");
    std::stable_sort(kept.begin(), kept.end(), [](const IntervalComponent& a, const IntervalComponent& b) {
        if (a.lo < b.lo)
            return true;
        if (b.lo < a.lo)
            return false;
        return b.hi < a.hi;
    });
    // Merge genuinely overlapping pieces; touching open pieces stay separate
    // because the shared endpoint is not a member.
    for (IntervalComponent& c : kept) {
        if (!region.components_.empty()) {
            IntervalComponent& last = region.components_.back();
            bool overlap = c.lo < last.hi || (c.lo == last.hi && (last.closed_hi || c.closed_lo));
            if (overlap) {
                if (last.hi < c.hi) {
                    last.hi = c.hi;
                    last.closed_hi = c.closed_hi;
                }
                continue;
            }
        }
        region.components_.push_back(std::move(c));
    }
    return region;
}

OpenRegion OpenRegion::cylinders(std::vector<BitWord> words) {
    OpenRegion region;
    region.space_ = Space::Symbol;
    for (BitWord& w : words) {
        if (w.empty())
            fail_config("cylinder word must be nonempty");
        bool seen = false;
        for (const BitWord& kept : region.words_)
            if (kept == w) {
                seen = true;
                break;
            }
        if (!seen)
            region.words_.push_back(std::move(w));
    }
    if (region.words_.empty())
        fail_config("open region is empty");
    return region;
}

Scalar::Kind OpenRegion::scalar_kind() const {
    if (space_ != Space::Interval)
        fail_type("scalar kind only applies to interval regions");
    return components_.front().lo.kind();
}

bool OpenRegion::contains(const Point& p) const {
    if (p.space() != space_)
        fail_type("point and region live in different ground spaces");
    if (space_ == Space::Interval) {
        const Scalar& x = p.interval();
        for (const IntervalComponent& c : components_) {
            bool above = c.closed_lo ? !(x < c.lo) : c.lo < x;
            bool below = c.closed_hi ? !(c.hi < x) : x < c.hi;
            if (above && below)
                return true;
        }
        return false;
    }
    const SymbolPoint& s = p.symbol();
    for (const BitWord& w : words_) {
        bool match = true;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (s.at(i) != w[i]) {
                match = false;
                break;
            }
        if (match)
            return true;
    }
    return false;
}

bool OpenRegion::contains_set(const FiniteSet& s) const {
    for (const Point& p : s.points())
        if (!contains(p))
            return false;
    return true;
}

bool OpenRegion::intersects_set(const FiniteSet& s) const {
    for (const Point& p : s.points())
        if (contains(p))
            return true;
    return false;
}

std::vector<Scalar> OpenRegion::grid_points(const Rational& step) const {
    if (space_ != Space::Interval)
        fail_type("grids are defined for interval regions");
    if (step <= 0 || step > 1)
        fail_config("grid step must lie in (0, 1]");
    Scalar::Kind kind = scalar_kind();
    std::vector<Scalar> out;
    BigInt last_emitted(-1);
    for (const IntervalComponent& c : components_) {
        // Candidate indices j with j * step spanning [lo, hi].
        Rational lo(0);
        Rational hi(1);
        if (c.lo.is_exact()) {
            lo = c.lo.rational();
            hi = c.hi.rational();
        }
        Rational q_lo = lo / step;
        Rational q_hi = hi / step;
        BigInt j_lo = boost::multiprecision::numerator(q_lo) /
                      boost::multiprecision::denominator(q_lo);
        BigInt j_hi = boost::multiprecision::numerator(q_hi) /
                          boost::multiprecision::denominator(q_hi) +
                      1;
        if (j_lo > 0)
            --j_lo;
        for (BigInt j = j_lo < 0 ? BigInt(0) : j_lo; j <= j_hi; ++j) {
            Rational xr = Rational(j) * step;
            if (xr > 1)
                break;
            Scalar x = Scalar::from_rational(xr, kind);
            if (contains(Point(x)) && j > last_emitted) {
                out.push_back(std::move(x));
                last_emitted = j;
            }
        }
    }
    return out;
}

std::string OpenRegion::str() const {
    std::string out;
    if (space_ == Space::Interval) {
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const IntervalComponent& c = components_[i];
            if (i)
                out += "|";
            out += c.closed_lo ? "[" : "(";
            out += format_endpoint(c.lo);
            out += ",";
            out += format_endpoint(c.hi);
            out += c.closed_hi ? "]" : ")";
        }
    } else {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (i)
                out += "|";
            out += "[" + words_[i].str() + "]";
        }
    }
    return out;
}

OpenRegion ball(const FiniteSet& a, const Scalar& radius) {
    if (a.space() == Space::Interval) {
        Scalar zero = Scalar::zero(radius.kind());
        Scalar one = Scalar::one(radius.kind());
        if (!(zero < radius))
            fail_config("ball radius must be positive");
        std::vector<IntervalComponent> comps;
        for (const Point& p : a.points()) {
            const Scalar& x = p.interval();
            IntervalComponent c;
            c.lo = x - radius;
            c.hi = x + radius;
            if (c.lo < zero) {
                c.lo = zero;
                c.closed_lo = true; // 0 is strictly within radius of x
            }
            if (one < c.hi) {
                c.hi = one;
                c.closed_hi = true;
            }
            comps.push_back(std::move(c));
        }
        return OpenRegion::intervals(std::move(comps));
    }
    if (!radius.is_exact())
        fail_type("symbol-space radii are exact scalars");
    const Rational& eps = radius.rational();
    if (eps <= 0)
        fail_config("ball radius must be positive");
    // depth = ceil(log2(1/eps)) + 2: members of a cylinder that deep sit at
    // distance at most 2^-(depth-1) < eps from the defining point.
    unsigned depth = 2;
    Rational p = 1;
    while (p * eps < 1 && depth < 4096 + 2) {
        p *= 2;
        ++depth;
    }
    std::vector<BitWord> words;
    for (const Point& pt : a.points()) {
        BitWord w;
        for (unsigned i = 0; i < depth; ++i)
            w.push_back(pt.symbol().at(i));
        words.push_back(std::move(w));
    }
    return OpenRegion::cylinders(std::move(words));
}

} // namespace mmchaos
