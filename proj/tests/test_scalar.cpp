#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmchaos/errors.hpp"
#include "mmchaos/rational.hpp"
#include "mmchaos/scalar.hpp"

using namespace mmchaos;

TEST_CASE("rational parsing accepts the documented forms") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("0.3") == Rational(3, 10));
    CHECK(parse_rational("2^-10") == Rational(1, 1024));
    CHECK(parse_rational("2^3") == Rational(8));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("3/2^5") == Rational(3, 32));

    CHECK_FALSE(parse_rational("").has_value());
    CHECK_FALSE(parse_rational("abc").has_value());
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("1//2").has_value());
    CHECK_FALSE(parse_rational("1.2.3").has_value());
}

TEST_CASE("rational formatting renders dyadics as p/2^e") {
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(Rational(-3)) == "-3");
    CHECK(format_rational(Rational(1, 2)) == "1/2^1");
    CHECK(format_rational(Rational(3, 32)) == "3/2^5");
    CHECK(format_rational(Rational(-1, 4)) == "-1/2^2");
    CHECK(format_rational(Rational(1, 3)) == "1/3");
    CHECK(format_rational(Rational(1300, 390625)) == "52/15625");
}

TEST_CASE("rational formatting round trips through the parser") {
    const Rational samples[] = {
        Rational(0),     Rational(7),        Rational(-7),    Rational(1, 2),
        Rational(3, 8),  Rational(-5, 64),   Rational(1, 3),  Rational(22, 7),
        Rational(2, 10), Rational(1, 78125),
    };
    for (const Rational& r : samples) {
        auto back = parse_rational(format_rational(r));
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
}

TEST_CASE("dyadic detection and powers of two") {
    unsigned e = 99;
    CHECK(is_dyadic(Rational(3, 8), &e));
    CHECK(e == 3);
    CHECK(is_dyadic(Rational(4)));
    CHECK_FALSE(is_dyadic(Rational(1, 3)));
    CHECK_FALSE(is_dyadic(Rational(1, 6)));

    CHECK(pow2(0) == Rational(1));
    CHECK(pow2(3) == Rational(8));
    CHECK(pow2(-3) == Rational(1, 8));
}

TEST_CASE("exact scalar arithmetic stays rational") {
    Scalar a = Scalar::exact(1, 3);
    Scalar b = Scalar::exact(1, 6);
    Scalar s = a + b;
    CHECK(s.kind() == Scalar::Kind::Exact);
    CHECK(s.rational() == Rational(1, 2));
    CHECK(s.str() == "1/2^1");

    CHECK((a - b).rational() == Rational(1, 6));
    CHECK((a * b).rational() == Rational(1, 18));
    CHECK(a.abs_diff(b).rational() == Rational(1, 6));
    CHECK(b.abs_diff(a).rational() == Rational(1, 6));

    CHECK(b < a);
    CHECK(a <= a);
    CHECK(a == Scalar::exact(2, 6));
}

TEST_CASE("binary scalars carry doubles") {
    auto a = Scalar::parse("0.5", Scalar::Kind::Binary);
    REQUIRE(a.has_value());
    CHECK(a->kind() == Scalar::Kind::Binary);
    CHECK(a->binary() == doctest::Approx(0.5));

    auto b = Scalar::parse("1/4", Scalar::Kind::Binary);
    REQUIRE(b.has_value());
    CHECK((*a + *b).binary() == doctest::Approx(0.75));
}

TEST_CASE("mixing scalar kinds is a type error") {
    Scalar a = Scalar::exact(1, 2);
    auto b = Scalar::parse("0.5", Scalar::Kind::Binary);
    REQUIRE(b.has_value());
    CHECK_THROWS_AS((void)(a + *b), Error);
    try {
        (void)(a < *b);
        FAIL("comparison across kinds should throw");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::Type);
        CHECK(err.exit_status() == 2);
    }
}

TEST_CASE("scalar parsing rejects junk") {
    CHECK_FALSE(Scalar::parse("", Scalar::Kind::Exact).has_value());
    CHECK_FALSE(Scalar::parse("x/y", Scalar::Kind::Exact).has_value());
    CHECK(Scalar::parse("2^-4", Scalar::Kind::Exact)->rational() == Rational(1, 16));
}

TEST_CASE("scalar helpers cover both kinds") {
    CHECK(Scalar::zero(Scalar::Kind::Exact).rational() == Rational(0));
    CHECK(Scalar::one(Scalar::Kind::Binary).binary() == 1.0);
    CHECK(Scalar::from_rational(Rational(1, 3), Scalar::Kind::Exact).rational() == Rational(1, 3));
    CHECK(Scalar::from_rational(Rational(1, 4), Scalar::Kind::Binary).binary() == 0.25);
    CHECK(Scalar(0.5).str() == "0.5");
}

TEST_CASE("error helpers tag codes and exit statuses") {
    CHECK(Error(ErrorCode::Type, "").code_name() == std::string("type"));
    CHECK(Error(ErrorCode::Config, "").code_name() == std::string("config"));
    CHECK(Error(ErrorCode::Resource, "").code_name() == std::string("resource"));
    CHECK(Error(ErrorCode::Admissibility, "").code_name() == std::string("admissibility"));
    CHECK(Error(ErrorCode::Internal, "").code_name() == std::string("internal"));
    CHECK(Error(ErrorCode::Type, "").exit_status() == 2);
    CHECK(Error(ErrorCode::Internal, "").exit_status() == 1);
    try {
        fail_resource("too big");
        FAIL("unreachable");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::Resource);
        CHECK(err.exit_status() == 3);
        CHECK(std::string(err.what()) == "too big");
    }
    try {
        fail_admissibility("no range element inside V");
        FAIL("unreachable");
    } catch (const Error& err) {
        CHECK(err.exit_status() == 4);
    }
}
