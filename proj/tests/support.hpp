#pragma once

#include <gmpxx.h>

#include <string>

#include "sigmacheck/realnum.hpp"

namespace support {

inline mpq_class dec(const std::string& text) { return sigmacheck::decimal_to_rational(text); }

// True when x meets [ref - tol, ref + tol]; `ref` is a truncated reference
// decimal, so exact containment cannot be asked of it.
inline bool near(const sigmacheck::IntervalReal& x, const std::string& ref, const mpq_class& tol)
{
    const mpq_class r = dec(ref);
    return sigmacheck::compare(x.lo(), r + tol) <= 0 && sigmacheck::compare(x.hi(), r - tol) >= 0;
}

inline mpq_class width(const sigmacheck::IntervalReal& x) { return x.width().to_rational(); }

inline mpq_class pow10(int e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

}  // namespace support
