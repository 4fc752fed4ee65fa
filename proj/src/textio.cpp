#include "mmchaos/textio.hpp"

#include "mmchaos/errors.hpp"
#include "mmchaos/systems.hpp"
#include "mmchaos/word.hpp"

#include <charconv>
#include <cstdlib>

namespace mmchaos {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{')
            ++depth;
        else if (c == ')' || c == ']' || c == '}')
            --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

unsigned long parse_index(const std::string& text, const char* what) {
    std::string t = trim(text);
    unsigned long value = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || p != t.data() + t.size())
        fail_config(std::string("expected a nonnegative integer ") + what + ": '" + text + "'");
    return value;
}

} // namespace

Scalar parse_scalar(const std::string& text, Scalar::Kind kind) {
    std::optional<Scalar> s = Scalar::parse(trim(text), kind);
    if (!s)
        fail_config("malformed scalar '" + text + "'");
    return *s;
}

SymbolPoint parse_symbol_point(const std::string& text) {
    std::string t = trim(text);
    if (t.empty())
        fail_config("empty symbol point");
    std::string prefix_part;
    std::string tail_part = t;
    std::size_t tilde = t.find('~');
    if (tilde != std::string::npos) {
        prefix_part = trim(t.substr(0, tilde));
        tail_part = trim(t.substr(tilde + 1));
    }
    auto build = [&](TailKind tail, std::uint64_t offset) {
        auto prefix = std::make_shared<BitWord>(BitWord::from_string(prefix_part));
        return SymbolPoint::from_word(std::move(prefix), tail, WordSystem::shared(), {}, offset);
    };
    if (tail_part == "0*")
        return build(TailKind::Zeros, 0);
    if (tail_part == "1*")
        return build(TailKind::Ones, 0);
    if (tail_part == "u")
        return build(TailKind::WordU, 0);
    if (tail_part.rfind("u@", 0) == 0)
        return build(TailKind::WordU, parse_index(tail_part.substr(2), "tail offset"));
    fail_config("unrecognized symbol point '" + text +
                "' (expected tails: 0*, 1*, u, u@<offset>)");
}

Point parse_point(const std::string& text, Space space, Scalar::Kind kind) {
    if (space == Space::Interval)
        return Point(parse_scalar(text, kind));
    return Point(parse_symbol_point(text));
}

FiniteSet parse_set(const std::string& text, Space space, Scalar::Kind kind) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        fail_config("a set is written {p1, p2, ...}: '" + text + "'");
    std::vector<Point> points;
    for (const std::string& part : split_top_level(t.substr(1, t.size() - 2), ',')) {
        std::string p = trim(part);
        if (p.empty())
            fail_config("empty element in set '" + text + "'");
        points.push_back(parse_point(p, space, kind));
    }
    return FiniteSet(std::move(points));
}

namespace {

IntervalComponent parse_interval_component(const std::string& text, Scalar::Kind kind) {
    std::string t = trim(text);
    if (t.size() < 3)
        fail_config("malformed interval component '" + text + "'");
    char open = t.front();
    char close = t.back();
    if ((open != '(' && open != '[') || (close != ')' && close != ']'))
        fail_config("interval components use (a,b), [a,b), (a,b] or [a,b]: '" + text + "'");
    std::vector<std::string> ends = split_top_level(t.substr(1, t.size() - 2), ',');
    if (ends.size() != 2)
        fail_config("interval component needs exactly two endpoints: '" + text + "'");
    IntervalComponent c;
    c.lo = parse_scalar(ends[0], kind);
    c.hi = parse_scalar(ends[1], kind);
    c.closed_lo = open == '[';
    c.closed_hi = close == ']';
    return c;
}

} // namespace

OpenRegion parse_region(const std::string& text, Space space, Scalar::Kind kind) {
    std::string t = trim(text);
    if (t.empty())
        fail_config("empty region");
    std::vector<std::string> parts = split_top_level(t, '|');
    if (space == Space::Interval) {
        std::vector<IntervalComponent> comps;
        for (const std::string& part : parts)
            comps.push_back(parse_interval_component(part, kind));
        return OpenRegion::intervals(std::move(comps));
    }
    std::vector<BitWord> words;
    for (const std::string& part : parts) {
        std::string p = trim(part);
        if (p.size() < 3 || p.front() != '[' || p.back() != ']')
            fail_config("a cylinder is written [bits]: '" + part + "'");
        words.push_back(BitWord::from_string(trim(p.substr(1, p.size() - 2))));
    }
    return OpenRegion::cylinders(std::move(words));
}

MapPtr parse_map(const std::string& text) {
    std::string t = trim(text);
    if (t == "shift")
        return make_shift();
    if (t.rfind("const-seq:", 0) == 0)
        return make_const_seq(parse_symbol_point(t.substr(10)));
    if (t.rfind("const:", 0) == 0) {
        std::optional<Rational> c = parse_rational(trim(t.substr(6)));
        if (!c)
            fail_config("malformed constant value in '" + text + "'");
        return make_const(*c);
    }
    if (t.rfind("pwl:", 0) == 0) {
        std::string body = trim(t.substr(4));
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            fail_config("pwl breakpoints are written pwl:[(x0,y0),...]: '" + text + "'");
        std::vector<std::pair<Rational, Rational>> bps;
        for (const std::string& part : split_top_level(body.substr(1, body.size() - 2), ',')) {
            std::string p = trim(part);
            if (p.size() < 3 || p.front() != '(' || p.back() != ')')
                fail_config("each breakpoint is written (x,y): '" + part + "'");
            std::vector<std::string> xy = split_top_level(p.substr(1, p.size() - 2), ',');
            if (xy.size() != 2)
                fail_config("each breakpoint is written (x,y): '" + part + "'");
            std::optional<Rational> x = parse_rational(trim(xy[0]));
            std::optional<Rational> y = parse_rational(trim(xy[1]));
            if (!x || !y)
                fail_config("malformed breakpoint '" + part + "'");
            bps.emplace_back(std::move(*x), std::move(*y));
        }
        return make_pwl(std::move(bps));
    }
    fail_config("unrecognized map descriptor '" + text +
                "' (expected pwl:[...], const:<c>, shift, const-seq:<point>)");
}

MultiMap parse_system(const std::string& text) {
    std::string t = trim(text);
    if (t.empty())
        fail_config("empty system description");
    bool descriptor_list = t.find(':') != std::string::npos || t == "shift";
    if (t.rfind("const:", 0) == 0)
        descriptor_list = false; // const:<c> alone is also a fixture name
    if (!descriptor_list)
        return fixture(t);
    std::vector<MapPtr> maps;
    for (const std::string& part : split_top_level(t, ';'))
        maps.push_back(parse_map(part));
    return MultiMap(std::move(maps));
}

} // namespace mmchaos
