#include "mmchaos/systems.hpp"

#include "mmchaos/errors.hpp"

namespace mmchaos {

namespace {

MapPtr make_half_tent_up() {
    // 2x on [0,1/2], then constant 1.
    return make_pwl({{Rational(0), Rational(0)},
                     {Rational(1, 2), Rational(1)},
                     {Rational(1), Rational(1)}});
}

MapPtr make_half_tent_down() {
    // Constant 1 on [0,1/2], then 2-2x.
    return make_pwl({{Rational(0), Rational(1)},
                     {Rational(1, 2), Rational(1)},
                     {Rational(1), Rational(0)}});
}

MapPtr make_reflected_tent() {
    // 1-2x on [0,1/2], 2x-1 on (1/2,1].
    return make_pwl({{Rational(0), Rational(1)},
                     {Rational(1, 2), Rational(0)},
                     {Rational(1), Rational(1)}});
}

} // namespace

MultiMap fixture(const std::string& name) {
    if (name == "example1")
        return MultiMap({make_const(Rational(0)), make_tent()});
    if (name == "example2")
        return MultiMap({make_half_tent_up(), make_half_tent_down()});
    if (name == "example3")
        return MultiMap({make_tent(), make_reflected_tent()});
    if (name == "tent")
        return MultiMap({make_tent()});
    if (name == "identity")
        return MultiMap({make_identity()});
    if (name.rfind("const:", 0) == 0) {
        std::optional<Rational> c = parse_rational(name.substr(6));
        if (!c)
            fail_config("malformed constant value in '" + name + "'");
        return MultiMap({make_const(*c)});
    }
    std::string catalog;
    for (const std::string& n : fixture_names()) {
        if (!catalog.empty())
            catalog += ", ";
        catalog += n;
    }
    fail_config("unknown fixture '" + name + "' (available: " + catalog + ")");
}

std::vector<std::string> fixture_names() {
    return {"example1", "example2", "example3", "tent", "identity", "const:<value>"};
}

} // namespace mmchaos
