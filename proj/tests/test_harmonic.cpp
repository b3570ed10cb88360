#include <doctest.h>

#include "oracles.hpp"
#include "sigmacheck/error.hpp"
#include "sigmacheck/harmonic.hpp"
#include "support.hpp"

using namespace sigmacheck;

TEST_CASE("exact harmonic numbers")
{
    CHECK(harmonic_exact(1).exact() == 1);
    CHECK(harmonic_exact(2).exact() == mpq_class(3, 2));
    CHECK(harmonic_exact(4).exact() == mpq_class(25, 12));
    for (unsigned long n : {1UL, 7UL, 100UL, 1234UL, 100000UL}) {
        CHECK(harmonic_exact(n).exact() == oracle::harmonic(n));
    }
    CHECK(support::near(IntervalReal::from_rational(harmonic_exact(100).exact(), 128), oracle::kHarmonic100,
                        support::pow10(-19)));
    CHECK_THROWS_AS(harmonic_exact(0), InputError);
    CHECK_THROWS_AS(harmonic_exact(100001), CutoffExceeded);
    CHECK(harmonic_exact(200, 500).exact() == oracle::harmonic(200));
}

TEST_CASE("tail enclosure contains the exact value")
{
    for (unsigned long n : {2UL, 10UL, 1000UL, 100000UL}) {
        const HarmonicValue v = harmonic_enclosure(n, 128);
        CHECK_FALSE(v.is_exact());
        CHECK(v.enclosure().interval.contains(oracle::harmonic(n)));
        CHECK(v.enclosure().tail_hi == mpq_class(1, n));
        CHECK(harmonic_tail_expr(n).eval(128).contains(oracle::harmonic(n)));
    }
    CHECK_THROWS_AS(harmonic_enclosure(1, 64), InputError);
}

TEST_CASE("harmonic_expr switches at the cutoff")
{
    CHECK(harmonic_expr(50, 100).exact_value() == oracle::harmonic(50));
    CHECK_FALSE(harmonic_expr(101, 100).exact_value().has_value());
    CHECK(harmonic_expr(101, 100).eval(128).contains(oracle::harmonic(101)));
}

TEST_CASE("running bracket")
{
    HarmonicBracket b(64);
    CHECK(b.n() == 0);
    for (unsigned long n = 1; n <= 2000; ++n) {
        b.advance();
        REQUIRE(b.n() == n);
        if (n % 97 == 0 || n <= 5) {
            CHECK(b.interval().contains(oracle::harmonic(n)));
        }
    }
    CHECK(support::width(b.interval()) < support::pow10(-14));
    const auto jumped = HarmonicBracket::at(3000, 128, 1000);
    CHECK(jumped.n() == 3000);
    CHECK(jumped.interval().contains(oracle::harmonic(3000)));
    const auto direct = HarmonicBracket::at(3000, 128);
    CHECK(direct.interval().contains(oracle::harmonic(3000)));
    CHECK(direct.interval().width() < jumped.interval().width());
}
