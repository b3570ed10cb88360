#include "sigmacheck/harmonic.hpp"

#include <utility>

#include "sigmacheck/error.hpp"

namespace sigmacheck {

namespace {

// sum_{j=lo}^{hi} 1/j as p/q with q = lo * (lo+1) * ... * hi.
void split_sum(unsigned long lo, unsigned long hi, mpz_class& p, mpz_class& q)
{
    if (lo == hi) {
        p = 1;
        q = lo;
        return;
    }
    const unsigned long mid = lo + (hi - lo) / 2;
    mpz_class p2;
    mpz_class q2;
    split_sum(lo, mid, p, q);
    split_sum(mid + 1, hi, p2, q2);
    p = p * q2 + p2 * q;
    q *= q2;
}

}  // namespace

HarmonicValue::HarmonicValue(mpz_class n, mpq_class exact) : n_(std::move(n)), form_(std::move(exact)) {}

HarmonicValue::HarmonicValue(mpz_class n, Enclosure enclosure) : n_(std::move(n)), form_(std::move(enclosure)) {}

RealExpr HarmonicValue::as_expr() const
{
    return is_exact() ? RealExpr::rational(exact()) : harmonic_tail_expr(n_);
}

IntervalReal HarmonicValue::enclose(long bits) const
{
    return is_exact() ? IntervalReal::from_rational(exact(), bits) : harmonic_tail_expr(n_).eval(bits);
}

HarmonicValue harmonic_exact(unsigned long n, unsigned long cutoff)
{
    if (n == 0) {
        throw InputError("harmonic number requires n >= 1");
    }
    if (n > cutoff) {
        throw CutoffExceeded("exact H_n limited to n <= " + std::to_string(cutoff) + ", got " + std::to_string(n));
    }
    mpq_class h;
    split_sum(1, n, h.get_num(), h.get_den());
    h.canonicalize();
    return HarmonicValue(mpz_class(n), std::move(h));
}

RealExpr harmonic_tail_expr(const mpz_class& n)
{
    if (n < 2) {
        throw InputError("harmonic enclosure requires n >= 2");
    }
    return log(RealExpr::integer(n)) + RealExpr::gamma() + RealExpr::bracket(0, mpq_class(1, n));
}

HarmonicValue harmonic_enclosure(const mpz_class& n, long bits)
{
    RealExpr expr = harmonic_tail_expr(n);
    return HarmonicValue(n, HarmonicValue::Enclosure{expr.eval(bits), mpq_class(1, n)});
}

RealExpr harmonic_expr(const mpz_class& n, unsigned long cutoff)
{
    if (n <= cutoff) {
        return harmonic_exact(n.get_ui(), cutoff).as_expr();
    }
    return harmonic_tail_expr(n);
}

HarmonicBracket::HarmonicBracket(long bits) : bits_(bits) {}

HarmonicBracket HarmonicBracket::at(unsigned long n, long bits, unsigned long direct_limit)
{
    HarmonicBracket b(bits);
    if (n <= direct_limit || n < 2) {
        while (b.n_ < n) {
            b.advance();
        }
        return b;
    }
    const IntervalReal start = harmonic_enclosure(mpz_class(n), bits).enclosure().interval;
    b.n_ = n;
    b.lower_ = start.lo();
    b.upper_ = start.hi();
    return b;
}

void HarmonicBracket::advance()
{
    ++n_;
    const Dyadic one(1);
    const auto j = Dyadic(static_cast<long>(n_));
    lower_ = (lower_ + divide(one, j, bits_, Rounding::Down)).rounded(bits_, Rounding::Down);
    upper_ = (upper_ + divide(one, j, bits_, Rounding::Up)).rounded(bits_, Rounding::Up);
}

}  // namespace sigmacheck
