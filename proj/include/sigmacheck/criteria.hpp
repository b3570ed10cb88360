#pragma once

// The inequality checks: the harmonic-number bound on sigma(n), Robin's
// criterion, Robin's unconditional bound and the effective lemma bounds that
// connect them.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sigmacheck/divisor.hpp"
#include "sigmacheck/harmonic.hpp"
#include "sigmacheck/realnum.hpp"

namespace sigmacheck {

enum class CriterionKind {
    Lagarias101,             // sigma(n) <= H_n + exp(H_n) log H_n
    Robin102,                // sigma(n) < e^gamma n log log n
    RobinUnconditional202a,  // sigma(n) < e^gamma n log log n + 0.6482 n / log log n
    Lemma203,                // exp(H_n) log H_n >= e^gamma n log log n
    Bound204,                // exp(H_n) >= e^gamma n
    Lemma206,                // H_n + exp(H_n) log H_n <= e^gamma n log log n + 7n / log n
    Bound207,                // log H_n <= log(log n + 1) <= log log n + 1 / log(n + 1)
    Bound210,                // exp(H_n) <= e^gamma n exp(1/n) <= e^gamma n (1 + 2/n)
};

inline constexpr std::array<CriterionKind, 8> kAllCriteria = {
    CriterionKind::Lagarias101, CriterionKind::Robin102, CriterionKind::RobinUnconditional202a,
    CriterionKind::Lemma203,    CriterionKind::Bound204, CriterionKind::Lemma206,
    CriterionKind::Bound207,    CriterionKind::Bound210};

inline constexpr std::array<CriterionKind, 5> kLemmaCriteria = {
    CriterionKind::Lemma203, CriterionKind::Bound204, CriterionKind::Lemma206, CriterionKind::Bound207,
    CriterionKind::Bound210};

/// CLI spelling: lagarias, robin, robin-unconditional, lemma203, ...
std::string_view to_string(CriterionKind kind);
std::optional<CriterionKind> parse_criterion(std::string_view name);

/// Smallest n for which the inequality is asserted.
unsigned long valid_from(CriterionKind kind);
bool needs_sigma(CriterionKind kind);
bool needs_harmonic(CriterionKind kind);

/// Robin's unconditional constant as printed with the bound.
inline const mpq_class kRobinUnconditionalConstant{6482, 10000};

enum class Relation { AtMost, AtLeast };

/// Direction of every link in the kind's chain: AtMost means each term is
/// bounded above by the next one.
Relation relation(CriterionKind kind);

/// Values the criterion formulas are built from.
template <typename Real>
struct CriterionInputs {
    Real n;
    Real sigma;      // unused by the harmonic-only kinds
    Real harmonic;   // unused by the sigma-only kinds
    Real exp_gamma;
    Real one;
};

/// The chain of terms t0 R t1 R ... for a kind, written once for both
/// RealExpr (adaptive checks) and IntervalReal (fixed-precision fast paths).
/// `constant` builds an exact rational in the Real domain.
template <typename Real, typename MakeConstant>
std::vector<Real> criterion_terms(CriterionKind kind, const CriterionInputs<Real>& in, MakeConstant constant)
{
    const Real& n = in.n;
    const Real& h = in.harmonic;
    auto loglog = [&] { return log(log(n)); };
    auto harmonic_side = [&] { return h + exp(h) * log(h); };
    switch (kind) {
    case CriterionKind::Lagarias101:
        return {in.sigma, harmonic_side()};
    case CriterionKind::Robin102:
        return {in.sigma, in.exp_gamma * n * loglog()};
    case CriterionKind::RobinUnconditional202a: {
        const Real ll = loglog();
        return {in.sigma, in.exp_gamma * n * ll + constant(kRobinUnconditionalConstant) * n / ll};
    }
    case CriterionKind::Lemma203:
        return {exp(h) * log(h), in.exp_gamma * n * loglog()};
    case CriterionKind::Bound204:
        return {exp(h), in.exp_gamma * n};
    case CriterionKind::Lemma206:
        return {harmonic_side(), in.exp_gamma * n * loglog() + constant(mpq_class(7)) * n / log(n)};
    case CriterionKind::Bound207:
        return {log(h), log(log(n) + in.one), loglog() + in.one / log(n + in.one)};
    case CriterionKind::Bound210:
        return {exp(h), in.exp_gamma * n * exp(in.one / n),
                in.exp_gamma * n * (in.one + constant(mpq_class(2)) / n)};
    }
    return {};
}

enum class Verdict { StrictHolds, Equality, Violated, Undecided };

std::string_view to_string(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view name);

struct CheckReport {
    mpz_class n;
    CriterionKind kind = CriterionKind::Lagarias101;
    Verdict verdict = Verdict::Undecided;
    /// Enclosures of the first and last term of the chain.
    IntervalReal lhs = IntervalReal::point(Dyadic(), 2);
    IntervalReal rhs = IntervalReal::point(Dyadic(), 2);
    long precision_used = 0;
    /// False when n lies below the kind's asserted range.
    bool in_range = true;
};

/// Check one n. Computes sigma by factorization when the kind needs it.
/// InputError for n = 0; DomainError when the formulas are undefined at n
/// (for example log log 1).
CheckReport check(CriterionKind kind, const mpz_class& n, const PrecisionBudget& budget = {},
                  unsigned long harmonic_cutoff = kDefaultExactCutoff);
CheckReport check(CriterionKind kind, const Factorization& f, const PrecisionBudget& budget = {},
                  unsigned long harmonic_cutoff = kDefaultExactCutoff);
/// Check one n with sigma(n) already known.
CheckReport check_with_sigma(CriterionKind kind, const mpz_class& n, const mpz_class& sigma_n,
                             const PrecisionBudget& budget = {},
                             unsigned long harmonic_cutoff = kDefaultExactCutoff);

/// Enclosure of H_n + exp(H_n) log H_n; exactly 1 for n = 1.
IntervalReal lagarias_rhs(const mpz_class& n, long bits, unsigned long harmonic_cutoff = kDefaultExactCutoff);

/// sigma(n) / (n log log n). DomainError for n <= 2.
IntervalReal gronwall_ratio(const Factorization& f, long bits);

/// (log n + 1) + e^gamma n (1 + 2/n) (log log n + 1/log(n + 1)): the bound on
/// the left side of Lemma206 obtained by combining Bound207 and Bound210.
IntervalReal lemma206_combined_bound(const mpz_class& n, long bits);

// Serialization. Interval endpoints render with 20 significant digits,
// rounded outward.

/// One CSV row: `n,kind,verdict,lhs_lo,lhs_hi,rhs_lo,rhs_hi,bits`.
struct CheckRow {
    mpz_class n;
    CriterionKind kind = CriterionKind::Lagarias101;
    Verdict verdict = Verdict::Undecided;
    /// lhs_lo, lhs_hi, rhs_lo, rhs_hi as rendered decimals.
    std::array<std::string, 4> endpoints;
    long bits = 0;

    /// Exact rational value of endpoint i.
    mpq_class endpoint_value(std::size_t i) const;

    friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

CheckRow to_row(const CheckReport& report);
std::string check_csv_header();
std::string to_csv_row(const CheckRow& row);
inline std::string to_csv_row(const CheckReport& report) { return to_csv_row(to_row(report)); }
/// InputError on malformed rows.
CheckRow parse_check_csv_row(std::string_view line);
nlohmann::json to_json(const CheckReport& report);

}  // namespace sigmacheck
