#include "mmchaos/endomorphism.hpp"

#include "mmchaos/errors.hpp"
#include "mmchaos/rational.hpp"

namespace mmchaos {

PwlMap::PwlMap(std::vector<std::pair<Rational, Rational>> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.size() < 2)
        fail_config("piecewise linear map needs at least two breakpoints");
    if (breakpoints_.front().first != 0)
        fail_config("piecewise linear map must start at x = 0");
    if (breakpoints_.back().first != 1)
        fail_config("piecewise linear map must end at x = 1");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational& y = breakpoints_[i].second;
        if (y < 0 || y > 1)
            fail_config("piecewise linear map values must stay in [0, 1]");
        if (i && !(breakpoints_[i - 1].first < breakpoints_[i].first))
            fail_config("piecewise linear map breakpoints must strictly increase");
    }
    approx_.reserve(breakpoints_.size());
    for (const auto& [x, y] : breakpoints_)
        approx_.emplace_back(rational_to_double(x), rational_to_double(y));
}

Rational PwlMap::apply_exact(const Rational& x) const {
    if (x < 0 || x > 1)
        fail_type("interval points must lie in [0, 1]");
    std::size_t hi = 1;
    while (hi + 1 < breakpoints_.size() && breakpoints_[hi].first < x)
        ++hi;
    const auto& [x0, y0] = breakpoints_[hi - 1];
    const auto& [x1, y1] = breakpoints_[hi];
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

double PwlMap::apply_binary(double x) const {
    if (x < 0.0 || x > 1.0)
        fail_type("interval points must lie in [0, 1]");
    std::size_t hi = 1;
    while (hi + 1 < approx_.size() && approx_[hi].first < x)
        ++hi;
    const auto& [x0, y0] = approx_[hi - 1];
    const auto& [x1, y1] = approx_[hi];
    double y = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    if (y < 0.0)
        y = 0.0;
    if (y > 1.0)
        y = 1.0;
    return y;
}

Point PwlMap::apply(const Point& p) const {
    const Scalar& x = p.interval();
    if (x.is_exact())
        return Point(Scalar::from_rational(apply_exact(x.rational()), Scalar::Kind::Exact));
    return Point(Scalar(apply_binary(x.binary())));
}

std::string PwlMap::descriptor() const {
    std::string out = "pwl:[";
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (i)
            out += ",";
        out += "(" + format_rational(breakpoints_[i].first) + "," +
               format_rational(breakpoints_[i].second) + ")";
    }
    out += "]";
    return out;
}

ConstMap::ConstMap(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
        fail_config("constant map value must lie in [0, 1]");
}

Point ConstMap::apply(const Point& p) const {
    const Scalar& x = p.interval();
    return Point(Scalar::from_rational(value_, x.kind()));
}

std::string ConstMap::descriptor() const { return "const:" + format_rational(value_); }

Point ShiftMap::apply(const Point& p) const { return Point(p.symbol().shifted()); }

ConstSeqMap::ConstSeqMap(SymbolPoint target) : target_(std::move(target)) {}

Point ConstSeqMap::apply(const Point& p) const {
    p.symbol(); // enforce the ground space
    return Point(target_);
}

std::string ConstSeqMap::descriptor() const { return "const-seq:" + target_.str(); }

MapPtr make_pwl(std::vector<std::pair<Rational, Rational>> breakpoints) {
    return std::make_shared<PwlMap>(std::move(breakpoints));
}

MapPtr make_const(Rational value) { return std::make_shared<ConstMap>(std::move(value)); }

MapPtr make_shift() { return std::make_shared<ShiftMap>(); }

MapPtr make_const_seq(SymbolPoint target) {
    return std::make_shared<ConstSeqMap>(std::move(target));
}

MapPtr make_tent() {
    return make_pwl({{Rational(0), Rational(0)},
                     {Rational(1, 2), Rational(1)},
                     {Rational(1), Rational(0)}});
}

MapPtr make_identity() {
    return make_pwl({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

} // namespace mmchaos
