#pragma once

// Colossally abundant numbers: n maximizing sigma(k) / k^(1 + eps) for some
// eps > 0. Exponents come from the Alaoglu-Erdos formula
//
//     a_p(eps) = floor(log((p^(1+eps) - 1) / (p^eps - 1)) / log p) - 1,
//
// and the full sequence is produced greedily: each step multiplies by the
// prime whose benefit log(sigma(p^(a+1)) / sigma(p^a)) / log p is largest.
// The benefit of a step, minus one, is the critical eps at which it occurs.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sigmacheck/divisor.hpp"
#include "sigmacheck/realnum.hpp"

namespace sigmacheck {

/// An exact positive rational u / v in lowest terms.
class Epsilon {
public:
    /// InputError unless u >= 1 and v >= 1.
    Epsilon(const mpz_class& u, const mpz_class& v);
    explicit Epsilon(const mpq_class& value);
    /// Parses "u/v" (or a bare positive integer).
    static Epsilon parse(std::string_view text);

    const mpz_class& u() const noexcept { return u_; }
    const mpz_class& v() const noexcept { return v_; }
    mpq_class value() const { return mpq_class(u_, v_); }
    std::string to_string() const { return u_.get_str() + "/" + v_.get_str(); }

private:
    mpz_class u_;
    mpz_class v_;
};

/// Exact a_p(eps): the largest a >= 0 such that every step up to a satisfies
/// (sigma(p^j) / sigma(p^(j-1)))^v >= p^(u+v). InputError for nonprime p.
unsigned long ca_exponent(const mpz_class& p, const Epsilon& eps);

/// a_p(eps) from the floor formula, evaluated with interval arithmetic.
/// nullopt when the floor cannot be decided within the budget (eps critical).
std::optional<unsigned long> ca_exponent_formula(const mpz_class& p, const Epsilon& eps,
                                                 const PrecisionBudget& budget = {});

/// The colossally abundant number for eps: exponent ca_exponent(p, eps) for
/// each prime in turn until the first zero.
Factorization ca_for_epsilon(const Epsilon& eps);

struct CaEntry {
    /// 1 for n = 2.
    std::size_t index = 0;
    Factorization factorization;
    mpz_class value;
    SigmaRatio sigma_ratio{mpq_class(1)};
    /// value / previous value; absent for the first entry.
    std::optional<mpz_class> multiplied_prime;
    /// n maximizes sigma(k)/k^(1+eps) for eps between these two critical
    /// values; each is an enclosure of an irrational number.
    IntervalReal eps_lower = IntervalReal::point(Dyadic(), 2);
    IntervalReal eps_upper = IntervalReal::point(Dyadic(), 2);
};

/// Produces colossally abundant numbers in increasing order. Benefits of
/// different primes are compared with compare_adaptive; a comparison that
/// stays undecided at the budget cap raises FourExponentialsTie.
class CaGenerator {
public:
    explicit CaGenerator(const PrecisionBudget& budget = {}, long eps_bits = 128);

    CaEntry next();

private:
    struct Step {
        std::size_t prime_index;
        RealExpr benefit;
    };

    Step best_step() const;
    void apply(const Step& step);
    const mpz_class& prime(std::size_t i);

    PrecisionBudget budget_;
    long eps_bits_;
    std::vector<mpz_class> primes_;
    std::vector<unsigned long> exponents_;
    Factorization current_;
    std::optional<Step> pending_;
    std::size_t emitted_ = 0;
};

/// All entries with value <= limit (limit >= 2).
std::vector<CaEntry> ca_sequence(const mpz_class& limit, const PrecisionBudget& budget = {});
/// The first `count` entries.
std::vector<CaEntry> ca_sequence_count(std::size_t count, const PrecisionBudget& budget = {});

/// The simplest rational strictly inside (lo, hi), 0 <= lo < hi.
mpq_class simplest_rational_between(const mpq_class& lo, const mpq_class& hi);
/// A rational eps strictly inside the entry's critical interval.
Epsilon interior_epsilon(const CaEntry& entry);

/// Exhaustive maximizer of sigma(k) / k^(1+eps) over 1 <= k <= search_limit,
/// decided with exact integer comparisons; the smallest k wins ties.
mpz_class brute_force_ca_oracle(const Epsilon& eps, unsigned long search_limit);

std::string ca_csv_header();
std::string to_csv_row(const CaEntry& entry);
nlohmann::json to_json(const CaEntry& entry);

}  // namespace sigmacheck
