#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "mmchaos/endomorphism.hpp"
#include "mmchaos/errors.hpp"
#include "mmchaos/multimap.hpp"
#include "mmchaos/region.hpp"
#include "mmchaos/systems.hpp"

using namespace mmchaos;

namespace {

Point ip(long long num, long long den = 1) {
    return Point(Scalar::exact(num, den));
}

// Reference evaluator: apply every length-n composition word and collect the
// images, independent of the set-valued stepper.
FiniteSet enumerate_compositions(const MultiMap& f, const Point& x, unsigned n) {
    std::vector<Point> images;
    std::vector<std::size_t> word(n, 0);
    std::function<void(unsigned, Point)> rec = [&](unsigned depth, Point p) {
        if (depth == n) {
            images.push_back(p);
            return;
        }
        for (const MapPtr& m : f.maps())
            rec(depth + 1, m->apply(p));
    };
    rec(0, x);
    return FiniteSet(std::move(images), f.dedup_tolerance(), f.metric());
}

} // namespace

TEST_CASE("fixture catalogue exposes the documented systems") {
    CHECK(fixture("example1").arity() == 2);
    CHECK(fixture("example2").arity() == 2);
    CHECK(fixture("example3").arity() == 2);
    CHECK(fixture("tent").arity() == 1);
    CHECK(fixture("identity").arity() == 1);
    CHECK(fixture("const:1/2").arity() == 1);
    CHECK_THROWS_AS((void)fixture("nope"), Error);
    CHECK(fixture_names().size() >= 5);
}

TEST_CASE("single steps apply every member map and dedup") {
    MultiMap f = fixture("example1"); // constant zero and the tent map
    FiniteSet image = f.iterate(ip(1, 3), 1);
    REQUIRE(image.size() == 2);
    CHECK(image.at(0).interval().rational() == Rational(0));
    CHECK(image.at(1).interval().rational() == Rational(2, 3));

    MultiMap twice(std::vector<MapPtr>{make_tent(), make_tent()});
    CHECK(twice.iterate(ip(1, 3), 1).size() == 1);

    CHECK(f.iterate(ip(1, 3), 0).size() == 1);
}

TEST_CASE("iterated images match brute-force composition enumeration") {
    for (const char* name : {"example1", "example2", "example3"}) {
        MultiMap f = fixture(name);
        for (unsigned n = 0; n <= 5; ++n) {
            Point x = ip(3, 8);
            CHECK(f.iterate(x, n) == enumerate_compositions(f, x, n));
        }
    }
    MultiMap three(std::vector<MapPtr>{make_tent(), make_const(Rational(0)), make_identity()});
    Point x = ip(5, 16);
    for (unsigned n = 0; n <= 4; ++n)
        CHECK(three.iterate(x, n) == enumerate_compositions(three, x, n));
}

TEST_CASE("orbit advancing matches one-shot iteration") {
    MultiMap f = fixture("example3");
    Orbit orbit(f, ip(1, 8));
    for (unsigned n = 1; n <= 6; ++n) {
        orbit.advance();
        CHECK(orbit.time() == n);
        CHECK(orbit.current() == f.iterate(ip(1, 8), n));
    }
    orbit.advance_to(9);
    CHECK(orbit.time() == 9);
    CHECK_THROWS_AS(orbit.advance_to(3), Error);
}

TEST_CASE("orbit gaps reproduce the worked pair") {
    MultiMap f = fixture("example1");
    std::vector<Scalar> gaps = orbit_gaps(f, ip(0), ip(1, 3), 4);
    REQUIRE(gaps.size() == 4);
    CHECK(gaps[0].rational() == Rational(1, 3));
    CHECK(gaps[1].rational() == Rational(2, 3));
    CHECK(gaps[2].rational() == Rational(2, 3));
    CHECK(gaps[3].rational() == Rational(2, 3));
}

TEST_CASE("range samples stabilize for the collapsing fixture") {
    MultiMap f = fixture("example1");
    RangeSample sample = range_sample(f, 2, Rational(1, 4));
    CHECK(sample.depth == 2);
    CHECK(sample.stabilized);
    // Depth-2 images over the quarter grid are {0} and {0,1}.
    REQUIRE(sample.sets.size() == 2);
    bool seen_single = false, seen_pair = false;
    for (const FiniteSet& s : sample.sets) {
        if (s.size() == 1)
            seen_single = s.at(0).interval().rational() == Rational(0);
        if (s.size() == 2)
            seen_pair = s.at(1).interval().rational() == Rational(1);
    }
    CHECK(seen_single);
    CHECK(seen_pair);

    CHECK_THROWS_AS((void)range_sample(f, 0, Rational(1, 4)), Error);
}

TEST_CASE("preimage scans find grid points whose image lands inside V") {
    MultiMap f = fixture("example1");
    OpenRegion v = OpenRegion::intervals(
        {{Scalar(Rational(0)), Scalar(Rational(1, 2)), true, false}});
    std::vector<Point> hits = preimage_hits(f, 1, v, Rational(1, 4));
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].interval().rational() == Rational(0));
    CHECK(hits[1].interval().rational() == Rational(1));

    OpenRegion mid = OpenRegion::intervals(
        {{Scalar(Rational(2, 5)), Scalar(Rational(3, 5)), false, false}});
    CHECK(preimage_hits(f, 2, mid, Rational(1, 8)).empty());
}

TEST_CASE("unit grids and step validation") {
    CHECK(unit_grid(Rational(1, 4), Scalar::Kind::Exact).size() == 5);
    CHECK(unit_grid(Rational(1, 3), Scalar::Kind::Exact).size() == 4);
    CHECK_THROWS_AS((void)unit_grid(Rational(2, 5), Scalar::Kind::Exact), Error);
    CHECK_THROWS_AS((void)unit_grid(Rational(0), Scalar::Kind::Exact), Error);
    CHECK_THROWS_AS((void)unit_grid(Rational(3, 2), Scalar::Kind::Exact), Error);
}

TEST_CASE("collection tolerance is zero in exact mode") {
    MultiMap f = fixture("example1");
    Scalar eta = collection_tolerance(f, Scalar::Kind::Exact);
    CHECK(eta.rational() == Rational(0));
    Scalar beta = collection_tolerance(f, Scalar::Kind::Binary);
    CHECK(beta.binary() > 0.0);
}

TEST_CASE("constructing a mapping over mixed spaces fails") {
    CHECK_THROWS_AS(MultiMap(std::vector<MapPtr>{make_tent(), make_shift()}), Error);
    CHECK_THROWS_AS(MultiMap(std::vector<MapPtr>{}), Error);
}
