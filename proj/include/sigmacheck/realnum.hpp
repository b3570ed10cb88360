#pragma once

// Adaptive-precision rigorous real arithmetic.
//
// Values are enclosed in intervals whose endpoints are dyadic rationals
// (big-integer mantissa times a power of two). Every operation rounds its
// endpoints outward, so the exact value of an expression always lies inside
// the interval computed for it. Strict inequalities are decided by
// re-evaluating both sides at increasing precision until the enclosures
// separate.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace sigmacheck {

enum class Rounding { Down, Up };

/// Hard ceiling on working precision. The embedded Euler constant supports it.
inline constexpr long kMaxPrecisionBits = 16384;

/// mantissa * 2^exponent, kept canonical: the mantissa is odd, or zero with
/// exponent zero.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(mpz_class mantissa, long exponent);
    explicit Dyadic(long value);

    static Dyadic from_integer(const mpz_class& value);
    /// Succeeds only when the reduced denominator is a power of two.
    static std::optional<Dyadic> from_rational(const mpq_class& value);

    const mpz_class& mantissa() const noexcept { return mantissa_; }
    long exponent() const noexcept { return exponent_; }
    int sign() const noexcept { return sgn(mantissa_); }
    bool is_zero() const noexcept { return sign() == 0; }
    /// Significant bits in the mantissa (0 for zero).
    std::size_t precision() const;

    mpq_class to_rational() const;
    double to_double() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    /// Round to at most `bits` significant bits in the given direction.
    Dyadic rounded(long bits, Rounding dir) const;
    Dyadic scaled(long power_of_two) const { return Dyadic(mantissa_, exponent_ + power_of_two); }

    Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    friend bool operator==(const Dyadic& a, const Dyadic& b)
    {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    void canonicalize();

    mpz_class mantissa_;
    long exponent_ = 0;
};

/// Sign of (a - b).
int compare(const Dyadic& a, const mpq_class& b);

/// a / b rounded to `bits` significant bits. DomainError when b is zero.
Dyadic divide(const Dyadic& a, const Dyadic& b, long bits, Rounding dir);

/// Scientific decimal rendering with `digits` significant digits, rounded in
/// the given direction, e.g. "1.9344000000000000000e+04".
std::string to_decimal(const Dyadic& value, int digits, Rounding dir);

/// Parse a decimal literal into a dyadic with `bits` significant bits,
/// rounded in the given direction. InputError on malformed text.
Dyadic parse_decimal(std::string_view text, long bits, Rounding dir);

/// Exact value of a decimal literal such as "-1.25e+03". InputError on
/// malformed text.
mpq_class decimal_to_rational(std::string_view text);

class IntervalReal {
public:
    /// Throws InputError when lo > hi or bits < 2.
    IntervalReal(Dyadic lo, Dyadic hi, long bits);

    static IntervalReal point(Dyadic value, long bits);
    /// Zero width when the value is dyadic; otherwise rounded outward at `bits`.
    static IntervalReal from_rational(const mpq_class& value, long bits);
    static IntervalReal from_integer(const mpz_class& value, long bits);

    const Dyadic& lo() const noexcept { return lo_; }
    const Dyadic& hi() const noexcept { return hi_; }
    long bits() const noexcept { return bits_; }

    Dyadic width() const { return hi_ - lo_; }
    /// Exact (lo + hi) / 2.
    Dyadic midpoint() const { return (lo_ + hi_).scaled(-1); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const mpq_class& value) const;
    bool contains(const Dyadic& value) const { return lo_ <= value && value <= hi_; }
    bool contains(const IntervalReal& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool overlaps(const IntervalReal& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    bool certainly_less(const IntervalReal& other) const { return hi_ < other.lo_; }
    bool certainly_greater(const IntervalReal& other) const { return lo_ > other.hi_; }

private:
    Dyadic lo_;
    Dyadic hi_;
    long bits_;
};

// Arithmetic rounds outward to the larger of the operands' precisions.
IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
/// DomainError when the divisor contains zero.
IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);
IntervalReal operator-(const IntervalReal& a);
/// DomainError unless the argument is strictly positive.
IntervalReal log(const IntervalReal& x);
IntervalReal exp(const IntervalReal& x);

/// Euler's constant, width at most 2^(2 - bits). PrecisionOverflow above
/// kMaxPrecisionBits.
IntervalReal euler_gamma(long bits);
/// pi, correctly rounded outward at `bits`.
IntervalReal pi_enclosure(long bits);

std::ostream& operator<<(std::ostream& os, const IntervalReal& x);

struct PrecisionBudget {
    long initial_bits = 64;
    long max_bits = kMaxPrecisionBits;
    long growth_factor = 2;

    /// InputError unless 2 <= initial_bits <= max_bits <= kMaxPrecisionBits
    /// and growth_factor >= 2.
    void validate() const;
};

/// An immutable expression over exact rationals and the constants gamma and
/// pi. Evaluation at a precision returns a sound enclosure; evaluation is
/// deterministic and re-entrant.
class RealExpr {
public:
    RealExpr();  // zero
    RealExpr(long value);  // NOLINT(google-explicit-constructor)

    static RealExpr rational(mpq_class value);
    static RealExpr integer(const mpz_class& value);
    static RealExpr gamma();
    static RealExpr pi();
    /// Some unknown value known only to lie in [lo, hi].
    static RealExpr bracket(mpq_class lo, mpq_class hi);

    friend RealExpr operator+(const RealExpr& a, const RealExpr& b);
    friend RealExpr operator-(const RealExpr& a, const RealExpr& b);
    friend RealExpr operator*(const RealExpr& a, const RealExpr& b);
    friend RealExpr operator/(const RealExpr& a, const RealExpr& b);
    friend RealExpr operator-(const RealExpr& a);
    friend RealExpr log(const RealExpr& x);
    friend RealExpr exp(const RealExpr& x);

    /// Throws InputError for bits < 2, PrecisionOverflow above the cap and
    /// DomainError when a log or division is applied outside its domain.
    IntervalReal eval(long bits) const;

    /// The value, when the expression reduces to a rational through the
    /// rational operations alone (plus log 1 = 0, exp 0 = 1, 0 * x = 0).
    const std::optional<mpq_class>& exact_value() const;

    std::string to_string() const;

    struct Node;

private:
    explicit RealExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

inline IntervalReal eval(const RealExpr& expr, long bits) { return expr.eval(bits); }

enum class Ordering { Less, Greater, ProvenEqual, Undecided };

struct ComparisonResult {
    Ordering ordering = Ordering::Undecided;
    /// Precision at which the search gave up; zero unless Undecided.
    long bits_exhausted = 0;

    friend bool operator==(const ComparisonResult&, const ComparisonResult&) = default;
};

/// The result together with the final enclosures of both sides.
struct ComparisonTrace {
    ComparisonResult result;
    IntervalReal lhs;
    IntervalReal rhs;
    long bits;
};

ComparisonTrace compare_adaptive_traced(const RealExpr& lhs, const RealExpr& rhs,
                                        const PrecisionBudget& budget = {});

inline ComparisonResult compare_adaptive(const RealExpr& lhs, const RealExpr& rhs,
                                         const PrecisionBudget& budget = {})
{
    return compare_adaptive_traced(lhs, rhs, budget).result;
}

std::string_view to_string(Ordering ordering);

}  // namespace sigmacheck
