#pragma once

#include "mmchaos/rational.hpp"

#include <optional>
#include <string>
#include <variant>

namespace mmchaos {

// One coordinate value. Exact scalars hold arbitrary-precision rationals;
// binary scalars hold IEEE doubles. Arithmetic and comparisons require both
// operands to share a kind; mixing raises a type error.
class Scalar {
public:
    enum class Kind { Exact, Binary };

    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(double d) : v_(d) {}
    static Scalar exact(long long num, long long den = 1) {
        return Scalar(Rational(num, den));
    }

    Kind kind() const { return std::holds_alternative<Rational>(v_) ? Kind::Exact : Kind::Binary; }
    bool is_exact() const { return kind() == Kind::Exact; }

    const Rational& rational() const; // Kind::Exact only
    double binary() const;            // Kind::Binary only
    double to_double() const;

    // "p/q" for exact values, shortest round-trip decimal for binary ones.
    std::string str() const;
    static std::optional<Scalar> parse(std::string_view text, Kind kind);

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar abs_diff(const Scalar& o) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;
    bool operator<=(const Scalar& o) const;
    bool operator>(const Scalar& o) const { return o < *this; }
    bool operator>=(const Scalar& o) const { return o <= *this; }

    static Scalar zero(Kind kind) {
        return kind == Kind::Exact ? Scalar(Rational(0)) : Scalar(0.0);
    }
    static Scalar one(Kind kind) {
        return kind == Kind::Exact ? Scalar(Rational(1)) : Scalar(1.0);
    }
    // Converts an exact value into the requested kind.
    static Scalar from_rational(const Rational& r, Kind kind) {
        return kind == Kind::Exact ? Scalar(r) : Scalar(rational_to_double(r));
    }

private:
    void require_same_kind(const Scalar& o) const;
    std::variant<Rational, double> v_;
};

std::string format_double(double value);

} // namespace mmchaos
