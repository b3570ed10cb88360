#include <doctest.h>

#include <mpfr.h>

#include <sstream>

#include "oracles.hpp"
#include "random_tree.hpp"
#include "sigmacheck/error.hpp"
#include "sigmacheck/realnum.hpp"
#include "support.hpp"

using namespace sigmacheck;
using support::dec;
using support::near;
using support::pow10;

TEST_CASE("dyadic canonical form")
{
    const Dyadic a(mpz_class(12), 0);
    CHECK(a.mantissa() == 3);
    CHECK(a.exponent() == 2);
    CHECK(a == Dyadic(12));
    CHECK(Dyadic(mpz_class(0), 17) == Dyadic());
    CHECK(Dyadic(mpz_class(-6), -3).to_rational() == mpq_class(-3, 4));
    CHECK(Dyadic(mpz_class(5), -1).floor() == 2);
    CHECK(Dyadic(mpz_class(5), -1).ceil() == 3);
    CHECK(Dyadic(mpz_class(-5), -1).floor() == -3);
    CHECK(Dyadic::from_rational(mpq_class(3, 8)).has_value());
    CHECK_FALSE(Dyadic::from_rational(mpq_class(1, 3)).has_value());
}

TEST_CASE("dyadic rounding is directed")
{
    const Dyadic x(mpz_class(0b1011011), 0);  // 91
    const Dyadic down = x.rounded(3, Rounding::Down);
    const Dyadic up = x.rounded(3, Rounding::Up);
    CHECK(down == Dyadic(80));
    CHECK(up == Dyadic(96));
    CHECK(Dyadic(-91).rounded(3, Rounding::Down) == Dyadic(-96));
    CHECK(Dyadic(-91).rounded(3, Rounding::Up) == Dyadic(-80));
    CHECK(down.precision() <= 3);
}

TEST_CASE("division brackets the quotient")
{
    for (long bits : {2L, 10L, 64L, 300L}) {
        const Dyadic lo = divide(Dyadic(1), Dyadic(3), bits, Rounding::Down);
        const Dyadic hi = divide(Dyadic(1), Dyadic(3), bits, Rounding::Up);
        CHECK(compare(lo, mpq_class(1, 3)) < 0);
        CHECK(compare(hi, mpq_class(1, 3)) > 0);
    }
    CHECK(divide(Dyadic(6), Dyadic(3), 8, Rounding::Down) == Dyadic(2));
    CHECK_THROWS_AS(divide(Dyadic(1), Dyadic(), 8, Rounding::Down), DomainError);
}

TEST_CASE("decimal rendering")
{
    CHECK(to_decimal(Dyadic(19344), 20, Rounding::Down) == "1.9344000000000000000e+04");
    CHECK(to_decimal(Dyadic(), 20, Rounding::Up) == "0");
    const Dyadic third = divide(Dyadic(1), Dyadic(3), 80, Rounding::Down);
    CHECK(to_decimal(third, 5, Rounding::Down) == "3.3333e-01");
    CHECK(to_decimal(third, 5, Rounding::Up) == "3.3334e-01");
    CHECK(to_decimal(-third, 5, Rounding::Down) == "-3.3334e-01");
    CHECK(decimal_to_rational("1.5e+01") == 15);
    CHECK(decimal_to_rational("-2.5e-01") == mpq_class(-1, 4));
    CHECK(decimal_to_rational("0") == 0);
    CHECK_THROWS_AS(decimal_to_rational("1.2.3"), InputError);
    CHECK_THROWS_AS(decimal_to_rational(""), InputError);
}

TEST_CASE("decimal parsing brackets the value")
{
    const Dyadic lo = parse_decimal("0.1", 64, Rounding::Down);
    const Dyadic hi = parse_decimal("0.1", 64, Rounding::Up);
    CHECK(compare(lo, mpq_class(1, 10)) < 0);
    CHECK(compare(hi, mpq_class(1, 10)) > 0);
    CHECK(parse_decimal("2.5", 64, Rounding::Down) == Dyadic(mpz_class(5), -1));
}

TEST_CASE("interval construction and errors")
{
    CHECK_THROWS_AS(IntervalReal(Dyadic(2), Dyadic(1), 64), InputError);
    CHECK_THROWS_AS(IntervalReal::point(Dyadic(1), 1), InputError);
    CHECK_THROWS_AS(RealExpr(2).eval(kMaxPrecisionBits + 1), PrecisionOverflow);
    const auto third = IntervalReal::from_rational(mpq_class(1, 3), 64);
    CHECK(third.contains(mpq_class(1, 3)));
    CHECK_FALSE(third.is_point());
    CHECK(IntervalReal::from_rational(mpq_class(3, 4), 64).is_point());
    const auto zero_wide = IntervalReal(Dyadic(-1), Dyadic(1), 64);
    CHECK_THROWS_AS(IntervalReal::point(Dyadic(1), 64) / zero_wide, DomainError);
    CHECK_THROWS_AS(log(zero_wide), DomainError);
    CHECK_THROWS_AS(log(IntervalReal::point(Dyadic(), 64)), DomainError);
}

TEST_CASE("interval arithmetic contains exact results")
{
    const auto a = IntervalReal::from_rational(mpq_class(1, 3), 64);
    const auto b = IntervalReal::from_rational(mpq_class(-2, 7), 64);
    CHECK((a + b).contains(mpq_class(1, 3) + mpq_class(-2, 7)));
    CHECK((a - b).contains(mpq_class(1, 3) - mpq_class(-2, 7)));
    CHECK((a * b).contains(mpq_class(1, 3) * mpq_class(-2, 7)));
    CHECK((a / b).contains(mpq_class(1, 3) / mpq_class(-2, 7)));
    CHECK((-a).contains(mpq_class(-1, 3)));
    const auto wide = IntervalReal(Dyadic(-2), Dyadic(3), 64);
    const auto sq = wide * wide;
    CHECK(sq.lo() == Dyadic(-6));
    CHECK(sq.hi() == Dyadic(9));
}

TEST_CASE("elementary functions against reference digits")
{
    const mpq_class tol = pow10(-40);
    CHECK(near(log(IntervalReal::point(Dyadic(2), 200)),
               "0.69314718055994530941723212145817656807550013436025525412068", tol));
    CHECK(near(exp(IntervalReal::point(Dyadic(1), 200)),
               "2.71828182845904523536028747135266249775724709369995957496697", tol));
    CHECK(near(pi_enclosure(200), "3.14159265358979323846264338327950288419716939937510582097494", tol));
    CHECK(near(euler_gamma(200), oracle::kEulerGamma, tol));
    CHECK(near(exp(euler_gamma(200)), oracle::kExpGamma, tol));
    CHECK(log(IntervalReal::point(Dyadic(1), 64)).is_point());
    CHECK(exp(IntervalReal::point(Dyadic(), 64)).is_point());
    CHECK(support::width(log(IntervalReal::point(Dyadic(3), 256))) < support::pow10(-70));
}

TEST_CASE("gamma literal agrees with MPFR at the precision cap")
{
    constexpr long bits = kMaxPrecisionBits;
    const IntervalReal g = euler_gamma(bits);
    mpfr_t lo;
    mpfr_t hi;
    mpfr_init2(lo, bits);
    mpfr_init2(hi, bits);
    mpfr_const_euler(lo, MPFR_RNDD);
    mpfr_const_euler(hi, MPFR_RNDU);
    mpz_class m;
    const long elo = mpfr_get_z_2exp(m.get_mpz_t(), lo);
    const Dyadic mlo(m, elo);
    const long ehi = mpfr_get_z_2exp(m.get_mpz_t(), hi);
    const Dyadic mhi(m, ehi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    const IntervalReal reference(mlo, mhi, bits);
    CHECK(g.overlaps(reference));
    CHECK(support::width(g) < support::pow10(-4900));
}

TEST_CASE("gamma lies in the harmonic bracket at 10^6")
{
    const mpq_class h = oracle::harmonic(1'000'000);
    const RealExpr upper = RealExpr::rational(h) - log(RealExpr(1'000'000));
    const RealExpr lower = upper - RealExpr::rational(mpq_class(1, 1'000'000));
    CHECK(compare_adaptive(RealExpr::gamma(), upper).ordering == Ordering::Less);
    CHECK(compare_adaptive(lower, RealExpr::gamma()).ordering == Ordering::Less);
}

TEST_CASE("exact subexpressions")
{
    CHECK(log(RealExpr(1)).exact_value() == mpq_class(0));
    CHECK(exp(RealExpr(0)).exact_value() == mpq_class(1));
    CHECK((RealExpr(0) * RealExpr::gamma()).exact_value() == mpq_class(0));
    CHECK_FALSE(log(RealExpr(2)).exact_value().has_value());
    CHECK((RealExpr(1) / RealExpr(3) + RealExpr(2) / RealExpr(3)).exact_value() == mpq_class(1));
}

TEST_CASE("adaptive comparison")
{
    CHECK(compare_adaptive(RealExpr(1) / RealExpr(3), RealExpr::rational(mpq_class(1, 3))).ordering ==
          Ordering::ProvenEqual);
    CHECK(compare_adaptive(log(RealExpr(2)), RealExpr::rational(mpq_class(7, 10))).ordering == Ordering::Less);
    CHECK(compare_adaptive(exp(RealExpr(1)), RealExpr::pi()).ordering == Ordering::Less);

    // exp(log 2) equals 2 but is not exact: never ProvenEqual.
    const PrecisionBudget small{64, 256, 2};
    const ComparisonResult r = compare_adaptive(exp(log(RealExpr(2))), RealExpr(2), small);
    CHECK(r.ordering == Ordering::Undecided);
    CHECK(r.bits_exhausted == 256);

    CHECK_THROWS_AS((PrecisionBudget{64, kMaxPrecisionBits * 2, 2}.validate()), PrecisionOverflow);
    CHECK_THROWS_AS((PrecisionBudget{64, 128, 1}.validate()), InputError);
}

TEST_CASE("bracket leaves")
{
    const RealExpr b = RealExpr::bracket(mpq_class(1), mpq_class(2));
    const IntervalReal x = b.eval(64);
    CHECK(x.lo() == Dyadic(1));
    CHECK(x.hi() == Dyadic(2));
    CHECK(compare_adaptive(b, RealExpr(3)).ordering == Ordering::Less);
    CHECK(compare_adaptive(b, RealExpr::rational(mpq_class(3, 2))).ordering == Ordering::Undecided);
}

TEST_CASE("printing")
{
    std::ostringstream os;
    os << IntervalReal::point(Dyadic(3), 64);
    CHECK(os.str().find("3.") != std::string::npos);
    CHECK_FALSE(log(RealExpr(2) + RealExpr::gamma()).to_string().empty());
}

// Properties over random trees.

TEST_CASE("random rational trees: exact value always contained")
{
    support::TreeGen gen(20261016);
    for (int i = 0; i < 1000; ++i) {
        const support::Tree t = gen.rational_tree(4);
        REQUIRE(t.exact.has_value());
        CHECK(t.expr.exact_value() == t.exact);
        for (long bits : {16L, 64L, 256L}) {
            CHECK(t.expr.eval(bits).contains(*t.exact));
        }
    }
}

TEST_CASE("random trees: refinement does not widen")
{
    support::TreeGen gen(7);
    for (int i = 0; i < 300; ++i) {
        const support::Tree t = gen.transcendental_tree(4);
        const IntervalReal coarse = t.expr.eval(64);
        const IntervalReal fine = t.expr.eval(256);
        CHECK(coarse.overlaps(fine));
        CHECK(fine.width() <= coarse.width());
    }
}

TEST_CASE("random trees: comparison is antisymmetric")
{
    support::TreeGen gen(99);
    const PrecisionBudget budget{64, 1024, 2};
    for (int i = 0; i < 300; ++i) {
        const support::Tree a = gen.transcendental_tree(3);
        const support::Tree b = gen.transcendental_tree(3);
        const Ordering ab = compare_adaptive(a.expr, b.expr, budget).ordering;
        const Ordering ba = compare_adaptive(b.expr, a.expr, budget).ordering;
        switch (ab) {
        case Ordering::Less:
            CHECK(ba == Ordering::Greater);
            break;
        case Ordering::Greater:
            CHECK(ba == Ordering::Less);
            break;
        default:
            CHECK(ba == ab);
        }
        const Ordering self = compare_adaptive(a.expr, a.expr, budget).ordering;
        CHECK(self == (a.expr.exact_value() ? Ordering::ProvenEqual : Ordering::Undecided));
    }
}
