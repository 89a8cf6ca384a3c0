#include "blgeo/exact_value.hpp"
#include "blgeo/random.hpp"
#include "doctest.h"
#include "support.hpp"

#include <cmath>

using namespace blgeo;
using namespace blgeo::test;

TEST_CASE("measure values are canonical")
{
    auto m = MeasureValue(Rational(3), Rational(8));
    CHECK(m.q() == 6);
    CHECK(m.g() == 2);
    m = MeasureValue(Rational(1), q("1/2"));
    CHECK(m.q() == q("1/2"));
    CHECK(m.g() == 2);
    CHECK(MeasureValue(Rational(2), Rational(9)).is_rational());
    CHECK(MeasureValue(Rational(0), Rational(7)) == MeasureValue());
    CHECK(MeasureValue(Rational(5), Rational(3 * 49 * 121)).q() == 385);
    CHECK(MeasureValue(Rational(5), Rational(3 * 49 * 121)).g() == 3);
    CHECK_THROWS_AS(MeasureValue(Rational(-1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(MeasureValue(Rational(1), Rational(0)), std::invalid_argument);
    CHECK(MeasureValue(Rational(1), Rational(2)).approx() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("power products simplify")
{
    auto p = PowerProduct::of(Rational(2)).pow(q("1/2")) * PowerProduct::of(Rational(2)).pow(q("1/2"));
    CHECK(p.as_rational() == Rational(2));
    CHECK(PowerProduct::of(Rational(0)).is_zero());
    CHECK(PowerProduct().as_rational() == Rational(1));
    CHECK(PowerProduct::of(MeasureValue(Rational(3), Rational(2))).pow(Rational(2)).as_rational() == Rational(18));
    CHECK_FALSE(PowerProduct::of(Rational(3)).pow(q("1/3")).as_rational());
}

TEST_CASE("exact comparison")
{
    using std::strong_ordering;
    const auto cbrt2 = PowerProduct::of(Rational(2)).pow(q("1/3"));
    const auto sqrt2 = PowerProduct::of(Rational(2)).pow(q("1/2"));
    CHECK(compare_exact(cbrt2, sqrt2) == strong_ordering::less);
    CHECK(compare_exact(PowerProduct::of(Rational(8)).pow(q("1/3")), PowerProduct::of(Rational(2))) ==
          strong_ordering::equal);
    CHECK(compare_exact(PowerProduct::of(q("4/9")).pow(q("-1/2")), PowerProduct::of(q("3/2"))) == strong_ordering::equal);
    CHECK(compare_exact(PowerProduct::of(Rational(0)), cbrt2) == strong_ordering::less);
    // An exponent denominator this large would need too many bits.
    const auto huge = PowerProduct::of(Rational(3)).pow(Rational(1, 1000003)) *
                      PowerProduct::of(Rational(5)).pow(Rational(1, 1000033));
    CHECK_FALSE(compare_exact(huge, PowerProduct::of(Rational(2)), 1u << 12));
}

TEST_CASE("intervals enclose the true value")
{
    CounterRng rng(5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        Rational base = abs(rng.rational(50, 20)) + Rational(1, 7);
        Rational exponent(static_cast<long>(rng.integer(-6, 6)), static_cast<unsigned long>(rng.integer(1, 5)));
        exponent.canonicalize();
        const auto p = PowerProduct::of(base).pow(exponent);
        const Interval box = p.enclose();
        const double expected = std::pow(base.get_d(), exponent.get_d());
        CHECK(box.midpoint() == doctest::Approx(expected).epsilon(1e-12));
        CHECK(box.width() <= std::abs(expected) * 1e-60);
        CHECK_FALSE(box.certainly_less(box));
        // Refinement never widens.
        CHECK(p.enclose(1024).width() <= box.width());
    }
    const Interval two = Interval::from_rational(Rational(2));
    CHECK(two.root(2).pow(2).lo_string(5).substr(0, 4) == "1.99");
    CHECK(Interval::from_rational(Rational(1)).certainly_less(two));
}
