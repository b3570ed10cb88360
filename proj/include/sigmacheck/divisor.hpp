#pragma once

// Exact divisor-sum arithmetic over big integers.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sigmacheck {

struct PrimePower {
    mpz_class prime;
    unsigned long exponent = 1;

    friend bool operator==(const PrimePower& a, const PrimePower& b)
    {
        return a.exponent == b.exponent && a.prime == b.prime;
    }
};

/// Deterministic primality by trial division.
bool is_prime(const mpz_class& n);

/// Canonical prime-power decomposition. The empty factorization is 1.
class Factorization {
public:
    Factorization() = default;

    /// Validates the list: primes strictly increasing and certified prime,
    /// exponents positive. InputError otherwise.
    static Factorization from_prime_powers(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }

    /// Exponent of p (zero when p does not divide the value).
    unsigned long exponent_of(const mpz_class& p) const;

    mpz_class value() const;

    /// "2^4 * 3^2 * 5 * 7"; "1" for the empty factorization.
    std::string to_string() const;

    /// Multiplies the value by the prime p. p must be prime and no smaller
    /// than the largest prime already present, or already present.
    Factorization times_prime(const mpz_class& p) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

/// InputError for n < 1.
Factorization factorize(const mpz_class& n);

mpz_class sigma(const Factorization& f);

/// Exact sigma(n) / n in lowest terms.
class SigmaRatio {
public:
    explicit SigmaRatio(mpq_class value);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const noexcept { return value_; }

    /// Rounded half-up to `places` decimal places, e.g. 7/3 -> "2.333".
    std::string to_fixed(unsigned places) const;
    double to_double() const { return value_.get_d(); }

    friend bool operator==(const SigmaRatio& a, const SigmaRatio& b) { return a.value_ == b.value_; }
    friend bool operator<(const SigmaRatio& a, const SigmaRatio& b) { return a.value_ < b.value_; }

private:
    mpq_class value_;
};

SigmaRatio sigma_ratio(const Factorization& f);

/// Number of divisors d(n).
mpz_class divisor_count(const Factorization& f);

}  // namespace sigmacheck
