#include "mmchaos/scalar.hpp"

#include "mmchaos/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace mmchaos {

const Rational& Scalar::rational() const {
    if (!is_exact())
        fail_type("exact scalar required");
    return std::get<Rational>(v_);
}

double Scalar::binary() const {
    if (is_exact())
        fail_type("binary scalar required");
    return std::get<double>(v_);
}

double Scalar::to_double() const {
    return is_exact() ? rational_to_double(std::get<Rational>(v_)) : std::get<double>(v_);
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    std::string out(buf, res.ptr);
    // Keep a decimal point so binary values stay visually distinct from ints.
    if (out.find('.') == std::string::npos && out.find('e') == std::string::npos &&
        out.find("inf") == std::string::npos && out.find("nan") == std::string::npos)
        out += ".0";
    return out;
}

std::string Scalar::str() const {
    if (is_exact())
        return format_rational(std::get<Rational>(v_));
    return format_double(std::get<double>(v_));
}

std::optional<Scalar> Scalar::parse(std::string_view text, Kind kind) {
    auto r = parse_rational(text);
    if (!r)
        return std::nullopt;
    return from_rational(*r, kind);
}

void Scalar::require_same_kind(const Scalar& o) const {
    if (kind() != o.kind())
        fail_type("scalar kinds differ (exact vs binary)");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact())
        return Scalar(std::get<Rational>(v_) + std::get<Rational>(o.v_));
    return Scalar(std::get<double>(v_) + std::get<double>(o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact())
        return Scalar(std::get<Rational>(v_) - std::get<Rational>(o.v_));
    return Scalar(std::get<double>(v_) - std::get<double>(o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact())
        return Scalar(std::get<Rational>(v_) * std::get<Rational>(o.v_));
    return Scalar(std::get<double>(v_) * std::get<double>(o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact()) {
        if (std::get<Rational>(o.v_) == 0)
            fail_type("division by zero");
        return Scalar(std::get<Rational>(v_) / std::get<Rational>(o.v_));
    }
    return Scalar(std::get<double>(v_) / std::get<double>(o.v_));
}

Scalar Scalar::abs_diff(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact()) {
        Rational d = std::get<Rational>(v_) - std::get<Rational>(o.v_);
        if (d < 0)
            d = -d;
        return Scalar(std::move(d));
    }
    return Scalar(std::fabs(std::get<double>(v_) - std::get<double>(o.v_)));
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact())
        return std::get<Rational>(v_) == std::get<Rational>(o.v_);
    return std::get<double>(v_) == std::get<double>(o.v_);
}

bool Scalar::operator<(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact())
        return std::get<Rational>(v_) < std::get<Rational>(o.v_);
    return std::get<double>(v_) < std::get<double>(o.v_);
}

bool Scalar::operator<=(const Scalar& o) const {
    require_same_kind(o);
    if (is_exact())
        return std::get<Rational>(v_) <= std::get<Rational>(o.v_);
    return std::get<double>(v_) <= std::get<double>(o.v_);
}

} // namespace mmchaos
