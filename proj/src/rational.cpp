#include "mmchaos/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace mmchaos {

Rational pow2(int exponent) {
    BigInt big = 1;
    big <<= (exponent < 0 ? -exponent : exponent);
    if (exponent < 0)
        return Rational(1, big);
    return Rational(big);
}

bool is_dyadic(const Rational& r, unsigned* exponent) {
    BigInt den = boost::multiprecision::denominator(r);
    unsigned e = 0;
    while ((den & 1) == 0) {
        den >>= 1;
        ++e;
    }
    if (den != 1)
        return false;
    if (exponent)
        *exponent = e;
    return true;
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

namespace {

std::optional<BigInt> parse_int(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size())
        return std::nullopt;
    BigInt value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return std::nullopt;
        value = value * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-value) : value;
}

// "2^e" or plain integer; used for denominators and the "2^-e" shorthand.
std::optional<Rational> parse_pow_term(std::string_view s) {
    size_t caret = s.find('^');
    if (caret == std::string_view::npos) {
        auto v = parse_int(s);
        if (!v)
            return std::nullopt;
        return Rational(*v);
    }
    auto base = parse_int(s.substr(0, caret));
    auto exp = parse_int(s.substr(caret + 1));
    if (!base || !exp || *base != 2)
        return std::nullopt;
    if (*exp < -4096 || *exp > 4096)
        return std::nullopt;
    return pow2(exp->convert_to<int>());
}

std::optional<Rational> parse_decimal(std::string_view s) {
    size_t dot = s.find('.');
    if (dot == std::string_view::npos)
        return std::nullopt;
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool neg = false;
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
        neg = whole[0] == '-';
        whole = whole.substr(1);
    }
    if (whole.empty() && frac.empty())
        return std::nullopt;
    BigInt num = 0;
    for (char c : whole) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        num = num * 10 + (c - '0');
    }
    BigInt den = 1;
    for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        return std::nullopt;
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        auto num = parse_int(trim(s.substr(0, slash)));
        auto den = parse_pow_term(trim(s.substr(slash + 1)));
        if (!num || !den || *den == 0)
            return std::nullopt;
        return Rational(*num) / *den;
    }
    if (s.find('.') != std::string_view::npos)
        return parse_decimal(s);
    if (s.find('^') != std::string_view::npos)
        return parse_pow_term(s);
    auto v = parse_int(s);
    if (!v)
        return std::nullopt;
    return Rational(*v);
}

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    unsigned e = 0;
    if (is_dyadic(r, &e))
        return num.str() + "/2^" + std::to_string(e);
    return num.str() + "/" + den.str();
}

} // namespace mmchaos
