#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "curvrec/rational.hpp"

using namespace curvrec;

TEST_CASE("construction reduces") {
    CHECK(Rational::make(10, 4) == Rational{5, 2});
    CHECK(Rational::make(3, -6) == Rational{-1, 2});
    CHECK(Rational::make(0, 7) == Rational{0, 1});
    CHECK_THROWS_AS((void)Rational::make(1, 0), std::invalid_argument);
    CHECK(Rational{5, 2}.is_reduced());
    CHECK_FALSE((Rational{10, 4}.is_reduced()));
    CHECK(Rational::make(3, 5).to_string() == "3/5");
}

TEST_CASE("continued fractions") {
    CHECK(rationalize(1.0 / 3.0) == Rational{1, 3});
    CHECK(rationalize(0.6) == Rational{3, 5});
    CHECK(rationalize(-2.5) == Rational{-5, 2});
    CHECK(rationalize(0.0) == Rational{0, 1});
    CHECK(rationalize(355.0 / 113.0) == Rational{355, 113});
    CHECK_FALSE(rationalize(std::numbers::pi, 100, 1e-8).has_value());
}
