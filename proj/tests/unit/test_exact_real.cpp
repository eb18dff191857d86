#include "lensgraph/exact_real.hpp"

#include <doctest.h>

using namespace lensgraph;

TEST_SUITE("exact_real") {

TEST_CASE("exact powers of two") {
    CHECK(exact_log2(Rational(8)) == 3);
    CHECK(exact_log2(Rational(1, 4)) == -2);
    CHECK_FALSE(exact_log2(Rational(6)).has_value());
    CHECK_FALSE(exact_log2(Rational(3, 2)).has_value());
}

TEST_CASE("log2 enclosures contain the value") {
    for (unsigned long bits : {32UL, 128UL, 512UL}) {
        const auto r = log2_enclosure(Rational(6), bits);
        CHECK(r.lo < r.hi);
        CHECK(to_double(r.lo) <= 2.584962500721156);
        CHECK(to_double(r.hi) >= 2.584962500721156);
    }
    const auto exact = log2_enclosure(Rational(16), 64);
    CHECK(exact.lo <= 4);
    CHECK(exact.hi >= 4);
}

TEST_CASE("log terms compare exactly") {
    const auto cap = LogTerm::times_log2(Rational(64 * 4), Rational(2));
    CHECK(cap.exact() == Rational(256));
    const auto six = LogTerm::times_log2(Rational(1), Rational(6));
    CHECK(six.compare(Rational(2)) > 0);
    CHECK(six.compare(Rational(3)) < 0);
    CHECK(six.compare(parse_rational("2584962500721156/1000000000000000")) > 0);
    CHECK(six.compare(parse_rational("2584962500721157/1000000000000000")) < 0);
    const auto inv = LogTerm::over_log2(Rational(3), Rational(8));
    CHECK(inv.exact() == Rational(1));
    CHECK(Rational(2) <= six.scaled(Rational(1)));
    CHECK(Rational(3) >= six);
    CHECK(six.to_string() == "1*log2(6)");
}

TEST_CASE("scaled square root sums") {
    CHECK(compare_scaled_sqrt_sum(Rational(5), 1, Rational(4), Rational(9)) == 0);
    CHECK(compare_scaled_sqrt_sum(Rational(6), 1, Rational(4), Rational(9)) > 0);
    CHECK(compare_scaled_sqrt_sum(Rational(3), 1, Rational(2), Rational(3)) < 0); // 3.146
    CHECK(compare_scaled_sqrt_sum(Rational(315, 100), 1, Rational(2), Rational(3)) > 0);
    CHECK(compare_scaled_sqrt_sum(Rational(140), 22, Rational(41), Rational(0)) < 0);
    CHECK(compare_scaled_sqrt_sum(Rational(141), 22, Rational(41), Rational(0)) > 0);
    CHECK(compare_scaled_sqrt_sum(Rational(110), 22, Rational(25), Rational(0)) == 0);
}

}
