#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mmchaos/errors.hpp"
#include "mmchaos/finite_set.hpp"
#include "mmchaos/region.hpp"
#include "mmchaos/word.hpp"

using namespace mmchaos;

namespace {

IntervalComponent open_iv(const Rational& lo, const Rational& hi) {
    return {Scalar(lo), Scalar(hi), false, false};
}

Point ip(const Rational& r) {
    return Point(Scalar(r));
}

FiniteSet iset(std::initializer_list<Rational> values) {
    std::vector<Point> pts;
    for (const Rational& r : values)
        pts.emplace_back(Scalar(r));
    return FiniteSet(std::move(pts));
}

} // namespace

TEST_CASE("interval membership honours open and closed endpoints") {
    OpenRegion r = OpenRegion::intervals({open_iv(Rational(1, 4), Rational(1, 2))});
    CHECK(r.contains(ip(Rational(1, 3))));
    CHECK_FALSE(r.contains(ip(Rational(1, 4))));
    CHECK_FALSE(r.contains(ip(Rational(1, 2))));

    OpenRegion half = OpenRegion::intervals({{Scalar(Rational(0)), Scalar(Rational(1, 8)), true, false}});
    CHECK(half.contains(ip(Rational(0))));
    CHECK_FALSE(half.contains(ip(Rational(1, 8))));
}

TEST_CASE("overlapping components merge and touching ones stay apart") {
    OpenRegion merged = OpenRegion::intervals(
        {open_iv(Rational(0), Rational(1, 2)), open_iv(Rational(1, 4), Rational(3, 4))});
    CHECK(merged.components().size() == 1);
    CHECK(merged.str() == "(0,3/2^2)");

    OpenRegion apart = OpenRegion::intervals(
        {open_iv(Rational(0), Rational(1, 4)), open_iv(Rational(1, 4), Rational(1, 2))});
    CHECK(apart.components().size() == 2);
    CHECK_FALSE(apart.contains(ip(Rational(1, 4))));

    CHECK_THROWS_AS((void)OpenRegion::intervals({}), Error);
    CHECK_THROWS_AS((void)OpenRegion::intervals({open_iv(Rational(1, 3), Rational(1, 3))}),
                    Error);
}

TEST_CASE("set containment and intersection distinguish all and some") {
    OpenRegion r = OpenRegion::intervals(
        {{Scalar(Rational(0)), Scalar(Rational(1, 8)), true, false},
         open_iv(Rational(1, 2), Rational(5, 8))});
    CHECK(r.contains_set(iset({Rational(0), Rational(9, 16)})));
    CHECK_FALSE(r.contains_set(iset({Rational(0), Rational(1, 4)})));
    CHECK(r.intersects_set(iset({Rational(0), Rational(1, 4)})));
    CHECK_FALSE(r.intersects_set(iset({Rational(1, 4), Rational(3, 4)})));
}

TEST_CASE("grid points enumerate in-region multiples of the step") {
    OpenRegion unit = OpenRegion::intervals({open_iv(Rational(0), Rational(1))});
    std::vector<Scalar> g = unit.grid_points(Rational(1, 4));
    REQUIRE(g.size() == 3);
    CHECK(g[0].rational() == Rational(1, 4));
    CHECK(g[1].rational() == Rational(1, 2));
    CHECK(g[2].rational() == Rational(3, 4));

    OpenRegion closed = OpenRegion::intervals({{Scalar(Rational(0)), Scalar(Rational(1)), true, true}});
    CHECK(closed.grid_points(Rational(1, 4)).size() == 5);

    OpenRegion low = OpenRegion::intervals({{Scalar(Rational(0)), Scalar(Rational(1, 2)), true, false}});
    std::vector<Scalar> lg = low.grid_points(Rational(1, 3));
    REQUIRE(lg.size() == 2);
    CHECK(lg[0].rational() == Rational(0));
    CHECK(lg[1].rational() == Rational(1, 3));
}

TEST_CASE("cylinder regions match fixed prefixes") {
    OpenRegion r = OpenRegion::cylinders({BitWord::from_string("101")});
    auto sys = WordSystem::shared();
    CHECK(r.contains(Point(SymbolPoint::u_point(sys)))); // u starts 10111
    CHECK_FALSE(r.contains(Point(SymbolPoint::zeros())));
    CHECK_FALSE(r.contains(Point(SymbolPoint::ones())));

    auto prefix = std::make_shared<BitWord>(BitWord::from_string("100"));
    CHECK_FALSE(r.contains(Point(SymbolPoint::from_word(prefix, TailKind::Zeros, nullptr, "100~0*"))));

    CHECK_THROWS_AS((void)OpenRegion::cylinders({}), Error);
}

TEST_CASE("interval balls are open neighbourhoods clipped to [0,1]") {
    OpenRegion b = ball(iset({Rational(1, 2)}), Scalar(Rational(1, 4)));
    CHECK(b.contains(ip(Rational(1, 2))));
    CHECK(b.contains(ip(Rational(3, 8))));
    CHECK_FALSE(b.contains(ip(Rational(1, 4))));
    CHECK_FALSE(b.contains(ip(Rational(3, 4))));

    OpenRegion at_zero = ball(iset({Rational(0)}), Scalar(Rational(1, 4)));
    CHECK(at_zero.contains(ip(Rational(0))));
    CHECK(at_zero.str() == "[0,1/2^2)");

    OpenRegion both = ball(iset({Rational(0), Rational(1)}), Scalar(Rational(1, 8)));
    CHECK(both.components().size() == 2);
    CHECK(both.contains(ip(Rational(1))));
    CHECK_FALSE(both.contains(ip(Rational(1, 2))));
}

TEST_CASE("symbol balls refine to cylinders inside the true ball") {
    FiniteSet zeros(std::vector<Point>{Point(SymbolPoint::zeros())});
    OpenRegion b = ball(zeros, Scalar(Rational(1, 4)));
    REQUIRE(b.cylinder_words().size() == 1);
    // Fixing L symbols bounds the tail distance by 2^{1-L}; radius 1/4 needs
    // at least 4 fixed symbols.
    CHECK(b.cylinder_words()[0].size() >= 4);
    CHECK(b.cylinder_words()[0].str() == std::string(b.cylinder_words()[0].size(), '0'));
    CHECK(b.contains(Point(SymbolPoint::zeros())));
    CHECK_FALSE(b.contains(Point(SymbolPoint::ones())));
}
