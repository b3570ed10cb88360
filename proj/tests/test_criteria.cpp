#include <doctest.h>

#include "oracles.hpp"
#include "sigmacheck/criteria.hpp"
#include "sigmacheck/error.hpp"
#include "support.hpp"

using namespace sigmacheck;
using support::near;
using support::pow10;

namespace {

IntervalReal robin_unconditional_rhs(long n, const mpq_class& c, long bits)
{
    const RealExpr nn(n);
    const RealExpr ll = log(log(nn));
    return (exp(RealExpr::gamma()) * nn * ll + RealExpr::rational(c) * nn / ll).eval(bits);
}

}  // namespace

TEST_CASE("names round trip")
{
    for (auto k : kAllCriteria) {
        CHECK(parse_criterion(to_string(k)) == k);
    }
    CHECK_FALSE(parse_criterion("nope").has_value());
    for (auto v : {Verdict::StrictHolds, Verdict::Equality, Verdict::Violated, Verdict::Undecided}) {
        CHECK(parse_verdict(to_string(v)) == v);
    }
    CHECK(to_string(CriterionKind::RobinUnconditional202a) == "robin-unconditional");
    CHECK(valid_from(CriterionKind::Robin102) == 5041);
    CHECK(valid_from(CriterionKind::Lemma206) == 20);
}

TEST_CASE("lagarias: equality only at 1")
{
    const CheckReport one = check(CriterionKind::Lagarias101, 1);
    CHECK(one.verdict == Verdict::Equality);
    CHECK(one.lhs.is_point());
    for (long n = 2; n <= 300; ++n) {
        CHECK(check(CriterionKind::Lagarias101, n).verdict == Verdict::StrictHolds);
    }
    CHECK(near(lagarias_rhs(6, 128), oracle::kLagariasRhs6, pow10(-18)));
    CHECK(near(lagarias_rhs(5040, 128), oracle::kLagariasRhs5040, pow10(-16)));
    CHECK(lagarias_rhs(1, 64).is_point());
}

TEST_CASE("lagarias beyond the exact cutoff")
{
    const CheckReport r = check(CriterionKind::Lagarias101, mpz_class("224403121196654400"));
    CHECK(r.verdict == Verdict::StrictHolds);
    const CheckReport small = check(CriterionKind::Lagarias101, 5040, {}, 100);
    CHECK(small.verdict == Verdict::StrictHolds);
}

TEST_CASE("robin around its threshold")
{
    const CheckReport r = check(CriterionKind::Robin102, 5040);
    CHECK(r.verdict == Verdict::Violated);
    CHECK_FALSE(r.in_range);
    CHECK(r.lhs.contains(mpq_class(19344)));
    CHECK(near(r.rhs, oracle::kRobinRhs5040, pow10(-14)));
    const CheckReport next = check(CriterionKind::Robin102, 5041);
    CHECK(next.verdict == Verdict::StrictHolds);
    CHECK(next.in_range);
    CHECK(check(CriterionKind::Robin102, 55440).verdict == Verdict::StrictHolds);
    CHECK_THROWS_AS(check(CriterionKind::Robin102, 1), DomainError);
    CHECK_THROWS_AS(check(CriterionKind::Robin102, 0), InputError);
}

TEST_CASE("unconditional constant is truncated below the exact value at 12")
{
    // sigma(12) = 28 sits between the bound with the printed constant and
    // the bound with the next larger four-digit constant.
    CHECK(robin_unconditional_rhs(12, kRobinUnconditionalConstant, 128).certainly_less(
        IntervalReal::point(Dyadic(28), 128)));
    CHECK(robin_unconditional_rhs(12, mpq_class(6483, 10000), 128)
              .certainly_greater(IntervalReal::point(Dyadic(28), 128)));
    CHECK(near(robin_unconditional_rhs(12, support::dec(oracle::kRobinExactConstant), 128), "28", pow10(-17)));
    CHECK(check(CriterionKind::RobinUnconditional202a, 12).verdict == Verdict::Violated);
    CHECK(check(CriterionKind::RobinUnconditional202a, 13).verdict == Verdict::StrictHolds);
    CHECK(check(CriterionKind::RobinUnconditional202a, 5040).verdict == Verdict::StrictHolds);
}

TEST_CASE("lemma terms at frozen points")
{
    const CheckReport l203 = check(CriterionKind::Lemma203, 3);
    CHECK(l203.verdict == Verdict::StrictHolds);
    CHECK(near(l203.lhs, oracle::kLemma203Lhs3, pow10(-18)));
    CHECK(near(l203.rhs, oracle::kLemma203Rhs3, pow10(-18)));
    const CheckReport l206 = check(CriterionKind::Lemma206, 20);
    CHECK(l206.verdict == Verdict::StrictHolds);
    CHECK(near(l206.lhs, oracle::kLemma206Lhs20, pow10(-17)));
    CHECK(near(l206.rhs, oracle::kLemma206Rhs20, pow10(-17)));
    CHECK(check(CriterionKind::Bound204, 1).verdict == Verdict::StrictHolds);
    CHECK(check(CriterionKind::Bound207, 3).verdict == Verdict::StrictHolds);
    CHECK(check(CriterionKind::Bound210, 1).verdict == Verdict::StrictHolds);
    CHECK(lemma206_combined_bound(20, 128).certainly_greater(l206.lhs));
    CHECK_THROWS_AS(lemma206_combined_bound(2, 64), DomainError);
}

TEST_CASE("lemma kinds hold on small ranges")
{
    for (auto kind : kLemmaCriteria) {
        for (unsigned long n = valid_from(kind); n <= 400; ++n) {
            CHECK(check(kind, n).verdict == Verdict::StrictHolds);
        }
    }
}

TEST_CASE("gronwall ratio")
{
    CHECK(near(gronwall_ratio(factorize(5040), 128), oracle::kGronwall5040, pow10(-18)));
    CHECK(near(gronwall_ratio(factorize(55440), 128), oracle::kGronwall55440, pow10(-18)));
    CHECK(near(gronwall_ratio(factorize(3), 128), oracle::kGronwall3, pow10(-18)));
    CHECK_THROWS_AS(gronwall_ratio(factorize(2), 64), DomainError);
}

TEST_CASE("interval and expression terms agree")
{
    for (auto kind : kAllCriteria) {
        for (long n : {30L, 1000L, 99991L}) {
            const mpz_class nz(n);
            const mpz_class s = sigma(factorize(nz));
            const mpq_class h = oracle::harmonic(static_cast<unsigned long>(n));
            const CriterionInputs<IntervalReal> iv{
                IntervalReal::from_integer(nz, 128), IntervalReal::from_integer(s, 128),
                IntervalReal::from_rational(h, 128), exp(euler_gamma(128)), IntervalReal::point(Dyadic(1), 128)};
            const CriterionInputs<RealExpr> ex{RealExpr::integer(nz), RealExpr::integer(s), RealExpr::rational(h),
                                               exp(RealExpr::gamma()), RealExpr(1)};
            const auto a = criterion_terms(kind, iv, [](const mpq_class& q) {
                return IntervalReal::from_rational(q, 128);
            });
            const auto b = criterion_terms(kind, ex, [](const mpq_class& q) { return RealExpr::rational(q); });
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i].overlaps(b[i].eval(128)));
            }
        }
    }
}

TEST_CASE("csv rows round trip")
{
    for (auto kind : kAllCriteria) {
        for (long n : {3L, 12L, 20L, 5040L, 5041L, 123456L}) {
            const CheckReport report = check(kind, n);
            const CheckRow row = to_row(report);
            const std::string line = to_csv_row(row);
            CHECK(line == to_csv_row(report));
            const CheckRow back = parse_check_csv_row(line);
            CHECK(back == row);
            CHECK(compare(report.lhs.lo(), back.endpoint_value(0)) >= 0);
            CHECK(compare(report.lhs.hi(), back.endpoint_value(1)) <= 0);
            CHECK(compare(report.rhs.lo(), back.endpoint_value(2)) >= 0);
            CHECK(compare(report.rhs.hi(), back.endpoint_value(3)) <= 0);
        }
    }
    CHECK(check_csv_header() == "n,kind,verdict,lhs_lo,lhs_hi,rhs_lo,rhs_hi,bits");
    CHECK_THROWS_AS(parse_check_csv_row("1,lagarias,equality"), InputError);
    CHECK_THROWS_AS(parse_check_csv_row("1,bogus,equality,1,1,1,1,64"), InputError);
    CHECK_THROWS_AS(parse_check_csv_row("0,lagarias,equality,1,1,1,1,64"), InputError);
    CHECK_THROWS_AS(parse_check_csv_row("1,lagarias,equality,1,x,1,1,64"), InputError);
}

TEST_CASE("json report")
{
    const auto j = to_json(check(CriterionKind::Robin102, 5040));
    CHECK(j["n"] == "5040");
    CHECK(j["kind"] == "robin");
    CHECK(j["verdict"] == "violated");
    CHECK(j["lhs"].size() == 2);
    CHECK(j["in_range"] == false);
}
