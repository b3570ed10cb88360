#include "sigmacheck/divisor.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <utility>

#include "sigmacheck/error.hpp"

namespace sigmacheck {

namespace {

// Gaps between consecutive integers coprime to 30, starting from 7.
constexpr std::array<unsigned, 8> kWheelGaps = {4, 2, 4, 2, 4, 6, 2, 6};

bool fits_u64(const mpz_class& z) { return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const mpz_class& z)
{
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
}

mpz_class from_u64(std::uint64_t v)
{
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return z;
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2u, 3u, 5u}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::size_t i = 0;
    for (std::uint64_t d = 7; d <= n / d; d += kWheelGaps[i++ & 7]) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(const mpz_class& n)
{
    if (fits_u64(n)) {
        return is_prime_u64(to_u64(n));
    }
    if (sgn(n) < 0) {
        return false;
    }
    // Beyond 64 bits: trial division by every wheel candidate up to sqrt(n).
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            return false;
        }
    }
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::size_t i = 0;
    for (mpz_class d = 7; d <= root; d += kWheelGaps[i++ & 7]) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

Factorization Factorization::from_prime_powers(std::vector<PrimePower> factors)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].exponent == 0) {
            throw InputError("zero exponent in factorization");
        }
        if (i > 0 && factors[i].prime <= factors[i - 1].prime) {
            throw InputError("factorization primes must be strictly increasing");
        }
        if (!is_prime(factors[i].prime)) {
            throw InputError(factors[i].prime.get_str() + " is not prime");
        }
    }
    Factorization f;
    f.factors_ = std::move(factors);
    return f;
}

unsigned long Factorization::exponent_of(const mpz_class& p) const
{
    for (const auto& pp : factors_) {
        if (pp.prime == p) {
            return pp.exponent;
        }
    }
    return 0;
}

mpz_class Factorization::value() const
{
    mpz_class n = 1;
    mpz_class power;
    for (const auto& [p, a] : factors_) {
        mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), a);
        n *= power;
    }
    return n;
}

std::string Factorization::to_string() const
{
    if (factors_.empty()) {
        return "1";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) {
            os << " * ";
        }
        os << factors_[i].prime.get_str();
        if (factors_[i].exponent > 1) {
            os << '^' << factors_[i].exponent;
        }
    }
    return os.str();
}

Factorization Factorization::times_prime(const mpz_class& p) const
{
    Factorization out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), p,
                               [](const PrimePower& pp, const mpz_class& q) { return pp.prime < q; });
    if (it != out.factors_.end() && it->prime == p) {
        ++it->exponent;
        return out;
    }
    if (!is_prime(p)) {
        throw InputError(p.get_str() + " is not prime");
    }
    out.factors_.insert(it, PrimePower{p, 1});
    return out;
}

Factorization factorize(const mpz_class& n)
{
    if (sgn(n) < 1) {
        throw InputError("factorize requires n >= 1, got " + n.get_str());
    }
    std::vector<PrimePower> factors;
    mpz_class rem = n;

    auto take = [&](unsigned long p) {
        unsigned long a = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++a;
        }
        if (a > 0) {
            factors.push_back({mpz_class(p), a});
        }
    };
    take(2);
    take(3);
    take(5);

    std::size_t i = 0;
    std::uint64_t d = 7;
    // Big-integer phase: only while the cofactor exceeds 64 bits.
    while (!fits_u64(rem)) {
        if (mpz_cmp_ui(rem.get_mpz_t(), 1) == 0) {
            break;
        }
        mpz_class square = from_u64(d);
        square *= square;
        if (square > rem) {
            break;
        }
        take(d);
        d += kWheelGaps[i++ & 7];
    }
    if (fits_u64(rem)) {
        std::uint64_t r = to_u64(rem);
        for (; d <= r / d; d += kWheelGaps[i++ & 7]) {
            unsigned long a = 0;
            while (r % d == 0) {
                r /= d;
                ++a;
            }
            if (a > 0) {
                factors.push_back({from_u64(d), a});
            }
        }
        rem = from_u64(r);
    }
    if (rem > 1) {
        factors.push_back({rem, 1});
    }
    // Primes found by ascending trial division are prime and increasing.
    return Factorization::from_prime_powers(std::move(factors));
}

mpz_class sigma(const Factorization& f)
{
    mpz_class s = 1;
    mpz_class term;
    for (const auto& [p, a] : f.factors()) {
        mpz_pow_ui(term.get_mpz_t(), p.get_mpz_t(), a + 1);
        term -= 1;
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), mpz_class(p - 1).get_mpz_t());
        s *= term;
    }
    return s;
}

mpz_class divisor_count(const Factorization& f)
{
    mpz_class d = 1;
    for (const auto& pp : f.factors()) {
        d *= pp.exponent + 1;
    }
    return d;
}

SigmaRatio::SigmaRatio(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::string SigmaRatio::to_fixed(unsigned places) const
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    mpz_class scaled = (2 * value_.get_num() * scale + value_.get_den()) / (2 * value_.get_den());
    std::string digits = scaled.get_str();
    if (places == 0) {
        return digits;
    }
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
    return digits;
}

SigmaRatio sigma_ratio(const Factorization& f) { return SigmaRatio(mpq_class(sigma(f), f.value())); }

}  // namespace sigmacheck
