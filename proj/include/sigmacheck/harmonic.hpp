#pragma once

// Harmonic numbers H_n = 1 + 1/2 + ... + 1/n: exact rationals for moderate n,
// and for large n the enclosure log n + gamma + T_n with the tail
// T_n = integral_n^inf {t}/t^2 dt bounded by 0 <= T_n <= 1/n.

#include <gmpxx.h>

#include <variant>

#include "sigmacheck/realnum.hpp"

namespace sigmacheck {

inline constexpr unsigned long kDefaultExactCutoff = 100000;

class HarmonicValue {
public:
    struct Enclosure {
        IntervalReal interval;
        /// Upper bound 1/n on the tail term.
        mpq_class tail_hi;
    };

    HarmonicValue(mpz_class n, mpq_class exact);
    HarmonicValue(mpz_class n, Enclosure enclosure);

    const mpz_class& n() const noexcept { return n_; }
    bool is_exact() const noexcept { return std::holds_alternative<mpq_class>(form_); }
    /// Precondition: is_exact().
    const mpq_class& exact() const { return std::get<mpq_class>(form_); }
    /// Precondition: !is_exact().
    const Enclosure& enclosure() const { return std::get<Enclosure>(form_); }

    /// The exact rational as a leaf, or log n + gamma + [0, 1/n].
    RealExpr as_expr() const;
    IntervalReal enclose(long bits) const;

private:
    mpz_class n_;
    std::variant<mpq_class, Enclosure> form_;
};

/// Exact reduced H_n. InputError for n = 0, CutoffExceeded above `cutoff`.
HarmonicValue harmonic_exact(unsigned long n, unsigned long cutoff = kDefaultExactCutoff);

/// [log n + gamma, log n + gamma + 1/n], outward rounded at `bits`.
/// InputError for n < 2.
HarmonicValue harmonic_enclosure(const mpz_class& n, long bits);

/// log n + gamma + [0, 1/n] as an expression (n >= 2).
RealExpr harmonic_tail_expr(const mpz_class& n);

/// Exact H_n when n <= cutoff, otherwise the tail-bounded expression.
RealExpr harmonic_expr(const mpz_class& n, unsigned long cutoff = kDefaultExactCutoff);

/// Incrementally maintained pair of fixed-precision sums bracketing H_n.
/// The lower sum is accumulated with downward rounding, the upper with
/// upward rounding, so [lower, upper] always contains H_n.
class HarmonicBracket {
public:
    explicit HarmonicBracket(long bits = 128);

    /// Bracket for H_n. Sums directly for n up to `direct_limit`, otherwise
    /// starts from the tail-bounded enclosure.
    static HarmonicBracket at(unsigned long n, long bits = 128, unsigned long direct_limit = 50'000'000);

    unsigned long n() const noexcept { return n_; }
    /// Advance from H_n to H_{n+1}.
    void advance();
    IntervalReal interval() const { return IntervalReal(lower_, upper_, bits_); }

private:
    long bits_;
    unsigned long n_ = 0;
    Dyadic lower_;
    Dyadic upper_;
};

}  // namespace sigmacheck
