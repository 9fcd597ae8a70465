#include <doctest.h>

#include "kwong/exponent.hpp"
#include "kwong/inertia.hpp"
#include "kwong/points.hpp"

using namespace kwong;

TEST_CASE("validate_points sorts and rejects") {
    const auto pts = validate_points<Rational>({2, 1, 5});
    CHECK(points_to_string(pts) == "1,2,5");

    CHECK_THROWS_AS(validate_points<Rational>({1, 1, 2}), DuplicatePoint);
    CHECK_THROWS_AS(validate_points<Rational>({1, -3}), NonpositivePoint);
    CHECK_THROWS_AS(validate_points<double>({0.0, 1.0}), NonpositivePoint);
    CHECK_THROWS_AS(validate_points<double>({}), NonpositivePoint);
}

TEST_CASE("points round-trip through text exactly in exact mode") {
    std::mt19937 gen(42);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> vals;
        Rational p(static_cast<long>(1 + gen() % 9), static_cast<long>(1 + gen() % 7));
        for (std::size_t i = 0; i < 1 + gen() % 6; ++i) {
            vals.push_back(p);
            p += Rational(static_cast<long>(1 + gen() % 5), static_cast<long>(1 + gen() % 5));
        }
        const auto pts = validate_points(std::move(vals));
        CHECK(parse_points_rational(points_to_string(pts)) == pts);
    }
}

TEST_CASE("rational text forms") {
    CHECK(to_string(parse_rational("6/8")) == "3/4");
    CHECK(to_string(parse_rational("1.25")) == "5/4");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("inertia_sum_check") {
    CHECK(inertia_sum_check({1, 0, 5}, 6));
    CHECK_FALSE(inertia_sum_check({1, 1, 1}, 4));
    CHECK(inertia_sum_check({0, 0, 0}, 0));
    CHECK_FALSE(inertia_sum_check({-1, 1, 0}, 0));
}

TEST_CASE("exponent integrality rules") {
    CHECK(Exponent(3).is_integer());
    CHECK(Exponent(3).as_integer() == 3);
    CHECK(Exponent(3.0).is_integer());
    CHECK(Exponent(3.0 + 5e-13).is_integer());
    CHECK(Exponent(3.0 + 5e-13).value() == 3.0);
    CHECK_FALSE(Exponent(3.5).is_integer());
    CHECK_FALSE(Exponent(3.0 + 5e-12).is_integer());

    CHECK(Exponent::from_rational(Rational(6, 2)).is_integer());
    CHECK_FALSE(Exponent::from_rational(Rational(7, 2)).is_integer());
    CHECK(Exponent(-3).is_odd_integer());
    CHECK(Exponent(-3).negated().as_integer() == 3);
}
