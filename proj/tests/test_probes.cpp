#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <vector>

#include "mmchaos/errors.hpp"
#include "mmchaos/probes.hpp"
#include "mmchaos/systems.hpp"
#include "mmchaos/textio.hpp"

using namespace mmchaos;

namespace {

constexpr Scalar::Kind kExact = Scalar::Kind::Exact;

Point ip(long long num, long long den = 1) {
    return Point(Scalar::exact(num, den));
}

OpenRegion iregion(const char* text) {
    return parse_region(text, Space::Interval, kExact);
}

} // namespace

TEST_CASE("li-yorke flags need both closeness and separation in the tail") {
    MultiMap f = fixture("example1");
    // Gaps of (0, 1/3) settle at 2/3: separated above 1/2, proximal below 3/4.
    std::vector<std::pair<Point, Point>> pair = {{ip(0), ip(1, 3)}};
    ChaosReport hit = li_yorke_scan(f, pair, 12, Scalar::exact(1, 2), Scalar::exact(3, 4));
    CHECK(hit.kind == "li-yorke");
    CHECK(hit.found);
    REQUIRE(hit.witnesses.size() == 1);
    CHECK(hit.witnesses[0]["separated_gap"] == "2/3");
    CHECK(hit.witnesses[0]["proximal_gap"] == "2/3");
    CHECK(hit.caveat == kFiniteHorizonCaveat);

    ChaosReport miss = li_yorke_scan(f, pair, 12, Scalar::exact(1, 2), Scalar::exact(1, 10));
    CHECK_FALSE(miss.found);
    CHECK(miss.results["pairs"][0]["separated"] == true);
    CHECK(miss.results["pairs"][0]["proximal"] == false);

    CHECK_THROWS_AS(
        (void)li_yorke_scan(f, {}, 12, Scalar::exact(1, 2), Scalar::exact(3, 4)), Error);
    CHECK_THROWS_AS(
        (void)li_yorke_scan(f, pair, 0, Scalar::exact(1, 2), Scalar::exact(3, 4)), Error);
}

TEST_CASE("li-yorke witnesses replay against raw orbit gaps") {
    // Orbit gaps of (0, 1/5) under example1 oscillate between 2/5 and 4/5.
    MultiMap f = fixture("example1");
    std::vector<std::pair<Point, Point>> pairs = {{ip(0), ip(1, 5)}};
    ChaosReport r = li_yorke_scan(f, pairs, 24, Scalar::exact(3, 5), Scalar::exact(1, 2));
    REQUIRE(r.found);
    auto& w = r.witnesses[0];
    std::vector<Scalar> gaps = orbit_gaps(f, pairs[0].first, pairs[0].second, 24);
    std::uint64_t ts = w["separated_time"].get<std::uint64_t>();
    std::uint64_t tp = w["proximal_time"].get<std::uint64_t>();
    CHECK(gaps[ts] > Scalar::exact(3, 5));
    CHECK(gaps[tp] < Scalar::exact(1, 2));
    CHECK(gaps[ts].str() == w["separated_gap"].get<std::string>());
    CHECK(gaps[tp].str() == w["proximal_gap"].get<std::string>());
}

TEST_CASE("sensitivity finds separating pairs inside a small region") {
    MultiMap f = fixture("example1");
    ChaosReport r = sensitivity_probe(f, Scalar::exact(1, 4), {iregion("(0,1/2)")}, 8,
                                      Rational(1, 8));
    CHECK(r.kind == "sensitivity");
    CHECK(r.found);
    REQUIRE(r.witnesses.size() == 1);
    // Replay: the recorded pair separates at the recorded time.
    Point x = parse_point(r.witnesses[0]["x"].get<std::string>(), Space::Interval, kExact);
    Point y = parse_point(r.witnesses[0]["y"].get<std::string>(), Space::Interval, kExact);
    unsigned n = r.witnesses[0]["n"].get<unsigned>();
    std::vector<Scalar> gaps = orbit_gaps(f, x, y, n + 1);
    CHECK(gaps[n] > Scalar::exact(1, 4));
    CHECK(gaps[n].str() == r.witnesses[0]["gap"].get<std::string>());

    ChaosReport none = sensitivity_probe(fixture("identity"), Scalar::exact(1, 4),
                                         {iregion("(0,1/16)")}, 8, Rational(1, 32));
    CHECK_FALSE(none.found);
}

TEST_CASE("accessibility finds orbits meeting below epsilon") {
    MultiMap f = fixture("example1");
    ChaosReport r = accessibility_probe(f, Scalar::exact(1, 16), iregion("(0,1/4)"),
                                        iregion("(3/4,1)"), 16, Rational(1, 16));
    CHECK(r.kind == "accessibility");
    CHECK(r.found);
    Point x = parse_point(r.witnesses[0]["x"].get<std::string>(), Space::Interval, kExact);
    Point y = parse_point(r.witnesses[0]["y"].get<std::string>(), Space::Interval, kExact);
    unsigned n = r.witnesses[0]["n"].get<unsigned>();
    std::vector<Scalar> gx = orbit_gaps(f, x, y, n + 1);
    CHECK(gx[n] < Scalar::exact(1, 16));
}

TEST_CASE("kato probe holds for the collapsing fixture and fails for identity") {
    ChaosReport yes = kato_report(fixture("example1"), Scalar::exact(1, 4),
                                  Scalar::exact(1, 16), default_open_suite(), 16,
                                  Rational(1, 16));
    CHECK(yes.kind == "kato");
    CHECK(yes.found);
    CHECK(yes.results["powers"][0]["sensitive"] == true);
    CHECK(yes.results["powers"][0]["accessible"] == true);
    CHECK(yes.results["agreement"] == true);

    ChaosReport no = kato_report(fixture("identity"), Scalar::exact(1, 4),
                                 Scalar::exact(1, 16), default_open_suite(), 16,
                                 Rational(1, 16));
    CHECK_FALSE(no.found);
    CHECK(no.results["powers"][0]["sensitive"] == false);
}

TEST_CASE("kato power probes agree across strides on both fixtures") {
    for (const char* name : {"example1", "identity"}) {
        ChaosReport r = kato_report(fixture(name), Scalar::exact(1, 4), Scalar::exact(1, 16),
                                    default_open_suite(), 16, Rational(1, 16), {1, 2, 3});
        REQUIRE(r.results["powers"].size() == 3);
        CHECK(r.results["agreement"] == true);
        for (const auto& row : r.results["powers"])
            CHECK(row["kato"] == r.found);
    }
}

TEST_CASE("transitivity scans return the first carrying time") {
    MultiMap f = fixture("example1");
    ChaosReport r = transitivity_probe(f, iregion("(0.3,0.4)"), iregion("[0,0.1)"), 20, 0,
                                       Rational(1, 32));
    CHECK(r.kind == "transitive");
    CHECK(r.found);
    unsigned n = r.results["n"].get<unsigned>();
    CHECK(n <= 6);
    // Replay the witness containment.
    Point x = parse_point(r.witnesses[0]["x"].get<std::string>(), Space::Interval, kExact);
    CHECK(iregion("[0,0.1)").contains_set(f.iterate(x, n)));

    // Strictly later times can be requested; the system keeps carrying U into V.
    ChaosReport later = transitivity_probe(f, iregion("(0.3,0.4)"), iregion("[0,0.1)"), 40, n,
                                           Rational(1, 32));
    CHECK(later.found);
    CHECK(later.results["n"].get<unsigned>() > n);
}

TEST_CASE("inadmissible targets are rejected up front") {
    MultiMap f = fixture("example1");
    try {
        (void)transitivity_probe(f, iregion("(0.3,0.4)"), iregion("(0.4,0.6)"), 20, 0,
                                 Rational(1, 32));
        FAIL("unreachable");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::Admissibility);
        CHECK(err.exit_status() == 4);
    }
    CHECK_THROWS_AS((void)mixing_probe(f, iregion("(0.3,0.4)"), iregion("(0.4,0.6)"), 10, 20,
                                       Rational(1, 32)),
                    Error);
    // Every sampled range element contains 0, so targets containing 0 pass.
    require_admissible(f, iregion("[0,1/8)"), Rational(1, 4));
}

TEST_CASE("mixing finds a window-stable onset time") {
    MultiMap f = fixture("example1");
    ChaosReport r = mixing_probe(f, iregion("(3/8,1/2)"), iregion("[0,1/8)|(1/2,5/8)"), 12,
                                 50, Rational(1, 32));
    CHECK(r.kind == "mixing");
    CHECK(r.found);
    unsigned N = r.results["N"].get<unsigned>();
    CHECK(N <= 12);
    REQUIRE(r.witnesses.size() == 51);
    // Replay one witness: its image at its time lies inside V.
    unsigned n0 = r.witnesses[0]["n"].get<unsigned>();
    CHECK(n0 == N);
    Point x = parse_point(r.witnesses[0]["x"].get<std::string>(), Space::Interval, kExact);
    CHECK(iregion("[0,1/8)|(1/2,5/8)").contains_set(f.iterate(x, N)));
}

TEST_CASE("weak mixing shares one time across two region pairs") {
    MultiMap f = fixture("example1");
    ChaosReport r = weak_mixing_probe(f, iregion("(0.3,0.4)"), iregion("[0,0.1)"),
                                      iregion("(0.6,0.7)"), iregion("[0,0.2)"), 20,
                                      Rational(1, 32));
    CHECK(r.kind == "weak-mixing");
    CHECK(r.found);
    unsigned n = r.results["n"].get<unsigned>();
    REQUIRE(r.witnesses.size() == 2);
    Point x1 = parse_point(r.witnesses[0]["x"].get<std::string>(), Space::Interval, kExact);
    Point x2 = parse_point(r.witnesses[1]["x"].get<std::string>(), Space::Interval, kExact);
    CHECK(iregion("[0,0.1)").contains_set(f.iterate(x1, n)));
    CHECK(iregion("[0,0.2)").contains_set(f.iterate(x2, n)));
}

TEST_CASE("visit frequencies track region hits along an orbit") {
    MultiMap id = fixture("identity");
    ChaosReport stay = snw_frequency(id, iregion("(1/4,1/2)"), {ip(1, 3)}, 40);
    CHECK(stay.kind == "snw");
    CHECK(stay.found);
    CHECK(stay.results["witnesses"][0]["count"] == 40);
    CHECK(stay.results["witnesses"][0]["freq"] == "1");
    CHECK(stay.results["witnesses"][0]["tail_max"] == "1");

    MultiMap f = fixture("example1");
    ChaosReport never = snw_frequency(f, iregion("(3/4,1)"), {ip(1, 3)}, 40);
    CHECK_FALSE(never.found);
    CHECK(never.results["witnesses"][0]["count"] == 0);

    ChaosReport cps = snw_frequency(id, iregion("(1/4,1/2)"), {ip(1, 3)}, 40,
                                    Rational(1, 5), {10, 40});
    REQUIRE(cps.results["witnesses"][0]["checkpoints"].size() == 2);
    CHECK(cps.results["witnesses"][0]["checkpoints"][0]["r"] == 10);
    CHECK(cps.results["witnesses"][0]["checkpoints"][0]["freq"] == "1");
    CHECK_THROWS_AS((void)snw_frequency(id, iregion("(1/4,1/2)"), {ip(1, 3)}, 40,
                                        Rational(1, 5), {0}),
                    Error);
    CHECK_THROWS_AS((void)snw_frequency(id, iregion("(1/4,1/2)"), {ip(1, 3)}, 40,
                                        Rational(1, 5), {41}),
                    Error);
}

TEST_CASE("the default suite tiles [0,1] with sixteen dyadic cells") {
    std::vector<OpenRegion> suite = default_open_suite();
    REQUIRE(suite.size() == 16);
    CHECK(suite[0].str() == "[0,1/2^4)");
    CHECK(suite[15].str() == "(15/2^4,1]");
    for (int j = 1; j < 15; ++j)
        CHECK(suite[j].components().size() == 1);
    CHECK(suite[0].contains(ip(0)));
    CHECK(suite[15].contains(ip(1)));
    CHECK_FALSE(suite[1].contains(ip(1, 16)));
}
