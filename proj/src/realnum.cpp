#include "sigmacheck/realnum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "gamma_digits.hpp"
#include "sigmacheck/error.hpp"

namespace sigmacheck {

namespace {

std::size_t bit_length(const mpz_class& z)
{
    return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

mpfr_rnd_t to_mpfr(Rounding dir) { return dir == Rounding::Down ? MPFR_RNDD : MPFR_RNDU; }

class Mpfr {
public:
    explicit Mpfr(long precision) { mpfr_init2(value_, std::max<long>(precision, MPFR_PREC_MIN)); }
    explicit Mpfr(const Dyadic& exact) : Mpfr(static_cast<long>(exact.precision()))
    {
        mpfr_set_z_2exp(value_, exact.mantissa().get_mpz_t(), exact.exponent(), MPFR_RNDN);
    }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    ~Mpfr() { mpfr_clear(value_); }

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    Dyadic to_dyadic() const
    {
        if (mpfr_zero_p(value_)) {
            return {};
        }
        if (!mpfr_number_p(value_)) {
            throw DomainError("non-finite intermediate value");
        }
        mpz_class mantissa;
        const long exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
        return Dyadic(std::move(mantissa), exponent);
    }

private:
    mpfr_t value_;
};

void check_bits(long bits)
{
    if (bits < 2) {
        throw InputError("precision must be at least 2 bits, got " + std::to_string(bits));
    }
    if (bits > kMaxPrecisionBits) {
        throw PrecisionOverflow("precision " + std::to_string(bits) + " exceeds cap " +
                                std::to_string(kMaxPrecisionBits));
    }
}

IntervalReal outward(const Dyadic& lo, const Dyadic& hi, long bits)
{
    return IntervalReal(lo.rounded(bits, Rounding::Down), hi.rounded(bits, Rounding::Up), bits);
}

}  // namespace

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(mpz_class mantissa, long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent)
{
    canonicalize();
}

Dyadic::Dyadic(long value) : Dyadic(mpz_class(value), 0) {}

Dyadic Dyadic::from_integer(const mpz_class& value) { return Dyadic(value, 0); }

std::optional<Dyadic> Dyadic::from_rational(const mpq_class& value)
{
    const mpz_class& den = value.get_den();
    const auto shift = mpz_scan1(den.get_mpz_t(), 0);
    if (mpz_popcount(den.get_mpz_t()) != 1) {
        return std::nullopt;
    }
    return Dyadic(value.get_num(), -static_cast<long>(shift));
}

void Dyadic::canonicalize()
{
    if (sgn(mantissa_) == 0) {
        exponent_ = 0;
        return;
    }
    const auto zeros = mpz_scan1(mantissa_.get_mpz_t(), 0);
    if (zeros > 0) {
        mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), zeros);
        exponent_ += static_cast<long>(zeros);
    }
}

std::size_t Dyadic::precision() const { return bit_length(mantissa_); }

mpq_class Dyadic::to_rational() const
{
    mpq_class q;
    if (exponent_ >= 0) {
        mpz_mul_2exp(q.get_num_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent_));
    } else {
        q.get_num() = mantissa_;
        mpz_setbit(q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_));
        mpz_clrbit(q.get_den_mpz_t(), 0);
    }
    return q;
}

double Dyadic::to_double() const
{
    if (is_zero()) {
        return 0.0;
    }
    long shift = 0;
    const double fraction = mpz_get_d_2exp(&shift, mantissa_.get_mpz_t());
    return std::ldexp(fraction, static_cast<int>(std::clamp<long>(shift + exponent_, -100000, 100000)));
}

mpz_class Dyadic::floor() const
{
    mpz_class r;
    if (exponent_ >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent_));
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_));
    }
    return r;
}

mpz_class Dyadic::ceil() const
{
    mpz_class r;
    if (exponent_ >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent_));
    } else {
        mpz_cdiv_q_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_));
    }
    return r;
}

Dyadic Dyadic::rounded(long bits, Rounding dir) const
{
    const auto have = static_cast<long>(precision());
    if (have <= bits) {
        return *this;
    }
    const auto drop = static_cast<mp_bitcnt_t>(have - bits);
    mpz_class m;
    if (dir == Rounding::Down) {
        mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), drop);
    } else {
        mpz_cdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), drop);
    }
    return Dyadic(std::move(m), exponent_ + static_cast<long>(drop));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const Dyadic& low = a.exponent_ <= b.exponent_ ? a : b;
    const Dyadic& high = a.exponent_ <= b.exponent_ ? b : a;
    mpz_class m;
    mpz_mul_2exp(m.get_mpz_t(), high.mantissa_.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(high.exponent_ - low.exponent_));
    m += low.mantissa_;
    return Dyadic(std::move(m), low.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b)
{
    return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b)
{
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) {
        return sa <=> sb;
    }
    if (sa == 0) {
        return std::strong_ordering::equal;
    }
    // Same nonzero sign: compare magnitudes by leading-bit position first.
    const long top_a = static_cast<long>(a.precision()) + a.exponent_;
    const long top_b = static_cast<long>(b.precision()) + b.exponent_;
    if (top_a != top_b) {
        return sa > 0 ? top_a <=> top_b : top_b <=> top_a;
    }
    const int diff = (a - b).sign();
    return diff <=> 0;
}

int compare(const Dyadic& a, const mpq_class& b)
{
    const int c = cmp(a.to_rational(), b);
    return (c > 0) - (c < 0);
}

Dyadic divide(const Dyadic& a, const Dyadic& b, long bits, Rounding dir)
{
    if (b.is_zero()) {
        throw DomainError("division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    long shift = bits + static_cast<long>(b.precision()) - static_cast<long>(a.precision()) + 1;
    shift = std::max(shift, 0L);
    mpz_class numerator;
    mpz_mul_2exp(numerator.get_mpz_t(), a.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_class q;
    if (dir == Rounding::Down) {
        mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), b.mantissa().get_mpz_t());
    } else {
        mpz_cdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), b.mantissa().get_mpz_t());
    }
    return Dyadic(std::move(q), a.exponent() - b.exponent() - shift).rounded(bits, dir);
}

std::string to_decimal(const Dyadic& value, int digits, Rounding dir)
{
    if (value.is_zero()) {
        return "0";
    }
    const Mpfr x(value);
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), x.get(), to_mpfr(dir));
    std::string body(raw);
    mpfr_free_str(raw);

    std::string out;
    std::size_t pos = 0;
    if (body[0] == '-') {
        out.push_back('-');
        pos = 1;
    }
    out.push_back(body[pos]);
    if (body.size() > pos + 1) {
        out.push_back('.');
        out.append(body, pos + 1);
    }
    const long e = exp10 - 1;
    std::ostringstream tail;
    tail << 'e' << (e < 0 ? '-' : '+');
    const long mag = e < 0 ? -e : e;
    if (mag < 10) {
        tail << '0';
    }
    tail << mag;
    return out + tail.str();
}

Dyadic parse_decimal(std::string_view text, long bits, Rounding dir)
{
    const std::string s(text);
    Mpfr x(bits);
    char* end = nullptr;
    mpfr_strtofr(x.get(), s.c_str(), &end, 10, to_mpfr(dir));
    if (s.empty() || end != s.c_str() + s.size() || !mpfr_number_p(x.get())) {
        throw InputError("malformed decimal '" + s + "'");
    }
    return x.to_dyadic();
}

// ---------------------------------------------------------------- IntervalReal

IntervalReal::IntervalReal(Dyadic lo, Dyadic hi, long bits) : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits)
{
    if (bits < 2) {
        throw InputError("interval precision must be at least 2 bits");
    }
    if (lo_ > hi_) {
        throw InputError("interval with lo > hi");
    }
}

IntervalReal IntervalReal::point(Dyadic value, long bits)
{
    Dyadic copy = value;
    return IntervalReal(std::move(value), std::move(copy), bits);
}

IntervalReal IntervalReal::from_rational(const mpq_class& value, long bits)
{
    if (auto exact = Dyadic::from_rational(value)) {
        return point(std::move(*exact), bits);
    }
    const Dyadic num = Dyadic::from_integer(value.get_num());
    const Dyadic den = Dyadic::from_integer(value.get_den());
    return IntervalReal(divide(num, den, bits, Rounding::Down), divide(num, den, bits, Rounding::Up), bits);
}

IntervalReal IntervalReal::from_integer(const mpz_class& value, long bits)
{
    return point(Dyadic::from_integer(value), bits);
}

bool IntervalReal::contains(const mpq_class& value) const
{
    return compare(lo_, value) <= 0 && compare(hi_, value) >= 0;
}

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b)
{
    return outward(a.lo() + b.lo(), a.hi() + b.hi(), std::max(a.bits(), b.bits()));
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b)
{
    return outward(a.lo() - b.hi(), a.hi() - b.lo(), std::max(a.bits(), b.bits()));
}

IntervalReal operator-(const IntervalReal& a) { return IntervalReal(-a.hi(), -a.lo(), a.bits()); }

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b)
{
    const long bits = std::max(a.bits(), b.bits());
    if (a.is_point() && b.is_point()) {
        const Dyadic p = a.lo() * b.lo();
        return outward(p, p, bits);
    }
    const Dyadic p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
    return outward(*lo, *hi, bits);
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b)
{
    if (b.lo().sign() <= 0 && b.hi().sign() >= 0) {
        throw DomainError("division by an interval containing zero");
    }
    const long bits = std::max(a.bits(), b.bits());
    if (a.is_point() && b.is_point()) {
        return IntervalReal(divide(a.lo(), b.lo(), bits, Rounding::Down),
                            divide(a.lo(), b.lo(), bits, Rounding::Up), bits);
    }
    const Dyadic* num[2] = {&a.lo(), &a.hi()};
    const Dyadic* den[2] = {&b.lo(), &b.hi()};
    std::optional<Dyadic> lo;
    std::optional<Dyadic> hi;
    for (const Dyadic* n : num) {
        for (const Dyadic* d : den) {
            Dyadic down = divide(*n, *d, bits, Rounding::Down);
            Dyadic up = divide(*n, *d, bits, Rounding::Up);
            if (!lo || down < *lo) {
                lo = std::move(down);
            }
            if (!hi || up > *hi) {
                hi = std::move(up);
            }
        }
    }
    return IntervalReal(std::move(*lo), std::move(*hi), bits);
}

IntervalReal log(const IntervalReal& x)
{
    if (x.lo().sign() <= 0) {
        throw DomainError("log of an enclosure that is not strictly positive");
    }
    const long bits = x.bits();
    Mpfr lo(bits);
    Mpfr hi(bits);
    mpfr_log(lo.get(), Mpfr(x.lo()).get(), MPFR_RNDD);
    mpfr_log(hi.get(), Mpfr(x.hi()).get(), MPFR_RNDU);
    return IntervalReal(lo.to_dyadic(), hi.to_dyadic(), bits);
}

IntervalReal exp(const IntervalReal& x)
{
    const long bits = x.bits();
    Mpfr lo(bits);
    Mpfr hi(bits);
    mpfr_exp(lo.get(), Mpfr(x.lo()).get(), MPFR_RNDD);
    mpfr_exp(hi.get(), Mpfr(x.hi()).get(), MPFR_RNDU);
    return IntervalReal(lo.to_dyadic(), hi.to_dyadic(), bits);
}

IntervalReal euler_gamma(long bits)
{
    check_bits(bits);
    struct Literal {
        Dyadic digits;
        Dyadic digits_plus_one;
        Dyadic scale;
    };
    static const Literal literal = [] {
        const mpz_class digits(detail::kEulerGammaDigits, 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(detail::kEulerGammaDigitCount));
        return Literal{Dyadic::from_integer(digits), Dyadic::from_integer(digits + 1),
                       Dyadic::from_integer(scale)};
    }();
    return IntervalReal(divide(literal.digits, literal.scale, bits, Rounding::Down),
                        divide(literal.digits_plus_one, literal.scale, bits, Rounding::Up), bits);
}

IntervalReal pi_enclosure(long bits)
{
    check_bits(bits);
    Mpfr lo(bits);
    Mpfr hi(bits);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return IntervalReal(lo.to_dyadic(), hi.to_dyadic(), bits);
}

std::ostream& operator<<(std::ostream& os, const IntervalReal& x)
{
    return os << '[' << to_decimal(x.lo(), 20, Rounding::Down) << ", " << to_decimal(x.hi(), 20, Rounding::Up)
              << ']';
}

void PrecisionBudget::validate() const
{
    if (max_bits > kMaxPrecisionBits) {
        throw PrecisionOverflow("precision cap " + std::to_string(max_bits) + " exceeds " +
                                std::to_string(kMaxPrecisionBits) + " bits");
    }
    if (initial_bits < 2 || initial_bits > max_bits || growth_factor < 2) {
        throw InputError("invalid precision budget: initial " + std::to_string(initial_bits) + ", max " +
                         std::to_string(max_bits) + ", growth " + std::to_string(growth_factor));
    }
}

// ---------------------------------------------------------------- RealExpr

struct RealExpr::Node {
    enum class Kind { Rational, Gamma, Pi, Bracket, Add, Sub, Mul, Div, Neg, Log, Exp };

    Kind kind;
    mpq_class a;
    mpq_class b;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::optional<mpq_class> exact;
};

namespace {

using Node = RealExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_leaf(Node::Kind kind, mpq_class a = 0, mpq_class b = 0)
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->a = std::move(a);
    node->b = std::move(b);
    if (kind == Node::Kind::Rational) {
        node->exact = node->a;
    } else if (kind == Node::Kind::Bracket && node->a == node->b) {
        node->exact = node->a;
    }
    return node;
}

bool is_exact_zero(const NodePtr& n) { return n->exact && sgn(*n->exact) == 0; }

NodePtr make_op(Node::Kind kind, NodePtr left, NodePtr right = nullptr)
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    const auto& x = left->exact;
    const std::optional<mpq_class> none;
    const auto& y = right ? right->exact : none;
    switch (kind) {
    case Node::Kind::Add:
        if (x && y) node->exact = mpq_class(*x + *y);
        break;
    case Node::Kind::Sub:
        if (x && y) node->exact = mpq_class(*x - *y);
        break;
    case Node::Kind::Mul:
        if (is_exact_zero(left) || is_exact_zero(right)) {
            node->exact = mpq_class(0);
        } else if (x && y) {
            node->exact = mpq_class(*x * *y);
        }
        break;
    case Node::Kind::Div:
        if (x && y && sgn(*y) != 0) node->exact = mpq_class(*x / *y);
        break;
    case Node::Kind::Neg:
        if (x) node->exact = mpq_class(-*x);
        break;
    case Node::Kind::Log:
        if (x && *x == 1) node->exact = mpq_class(0);
        break;
    case Node::Kind::Exp:
        if (x && sgn(*x) == 0) node->exact = mpq_class(1);
        break;
    default:
        break;
    }
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

using Memo = std::unordered_map<const Node*, IntervalReal>;

IntervalReal eval_node(const Node& node, long bits, Memo& memo)
{
    if (node.exact) {
        return IntervalReal::from_rational(*node.exact, bits);
    }
    if (auto it = memo.find(&node); it != memo.end()) {
        return it->second;
    }
    auto child = [&](const NodePtr& n) { return eval_node(*n, bits, memo); };
    IntervalReal result = [&]() -> IntervalReal {
        switch (node.kind) {
        case Node::Kind::Rational:
            return IntervalReal::from_rational(node.a, bits);
        case Node::Kind::Gamma:
            return euler_gamma(bits);
        case Node::Kind::Pi:
            return pi_enclosure(bits);
        case Node::Kind::Bracket:
            return IntervalReal(IntervalReal::from_rational(node.a, bits).lo(),
                                IntervalReal::from_rational(node.b, bits).hi(), bits);
        case Node::Kind::Add:
            return child(node.left) + child(node.right);
        case Node::Kind::Sub:
            return child(node.left) - child(node.right);
        case Node::Kind::Mul:
            return child(node.left) * child(node.right);
        case Node::Kind::Div:
            return child(node.left) / child(node.right);
        case Node::Kind::Neg:
            return -child(node.left);
        case Node::Kind::Log:
            return log(child(node.left));
        case Node::Kind::Exp:
            return exp(child(node.left));
        }
        throw Error("corrupt expression node");
    }();
    memo.emplace(&node, result);
    return result;
}

void print_node(std::ostream& os, const Node& node)
{
    auto binary = [&](const char* op) {
        os << '(';
        print_node(os, *node.left);
        os << ' ' << op << ' ';
        print_node(os, *node.right);
        os << ')';
    };
    switch (node.kind) {
    case Node::Kind::Rational:
        os << node.a.get_str();
        break;
    case Node::Kind::Gamma:
        os << "gamma";
        break;
    case Node::Kind::Pi:
        os << "pi";
        break;
    case Node::Kind::Bracket:
        os << "bracket[" << node.a.get_str() << ", " << node.b.get_str() << ']';
        break;
    case Node::Kind::Add:
        binary("+");
        break;
    case Node::Kind::Sub:
        binary("-");
        break;
    case Node::Kind::Mul:
        binary("*");
        break;
    case Node::Kind::Div:
        binary("/");
        break;
    case Node::Kind::Neg:
        os << "-(";
        print_node(os, *node.left);
        os << ')';
        break;
    case Node::Kind::Log:
        os << "log(";
        print_node(os, *node.left);
        os << ')';
        break;
    case Node::Kind::Exp:
        os << "exp(";
        print_node(os, *node.left);
        os << ')';
        break;
    }
}

}  // namespace

RealExpr::RealExpr() : RealExpr(0L) {}

RealExpr::RealExpr(long value) : node_(make_leaf(Node::Kind::Rational, mpq_class(value))) {}

RealExpr RealExpr::rational(mpq_class value)
{
    value.canonicalize();
    return RealExpr(make_leaf(Node::Kind::Rational, std::move(value)));
}

RealExpr RealExpr::integer(const mpz_class& value) { return RealExpr(make_leaf(Node::Kind::Rational, mpq_class(value))); }

RealExpr RealExpr::gamma() { return RealExpr(make_leaf(Node::Kind::Gamma)); }

RealExpr RealExpr::pi() { return RealExpr(make_leaf(Node::Kind::Pi)); }

RealExpr RealExpr::bracket(mpq_class lo, mpq_class hi)
{
    lo.canonicalize();
    hi.canonicalize();
    if (lo > hi) {
        throw InputError("bracket with lo > hi");
    }
    return RealExpr(make_leaf(Node::Kind::Bracket, std::move(lo), std::move(hi)));
}

RealExpr operator+(const RealExpr& a, const RealExpr& b) { return RealExpr(make_op(Node::Kind::Add, a.node_, b.node_)); }
RealExpr operator-(const RealExpr& a, const RealExpr& b) { return RealExpr(make_op(Node::Kind::Sub, a.node_, b.node_)); }
RealExpr operator*(const RealExpr& a, const RealExpr& b) { return RealExpr(make_op(Node::Kind::Mul, a.node_, b.node_)); }
RealExpr operator/(const RealExpr& a, const RealExpr& b) { return RealExpr(make_op(Node::Kind::Div, a.node_, b.node_)); }
RealExpr operator-(const RealExpr& a) { return RealExpr(make_op(Node::Kind::Neg, a.node_)); }
RealExpr log(const RealExpr& x) { return RealExpr(make_op(Node::Kind::Log, x.node_)); }
RealExpr exp(const RealExpr& x) { return RealExpr(make_op(Node::Kind::Exp, x.node_)); }

IntervalReal RealExpr::eval(long bits) const
{
    check_bits(bits);
    Memo memo;
    return eval_node(*node_, bits, memo);
}

const std::optional<mpq_class>& RealExpr::exact_value() const { return node_->exact; }

std::string RealExpr::to_string() const
{
    std::ostringstream os;
    print_node(os, *node_);
    return os.str();
}

// ---------------------------------------------------------------- comparison

ComparisonTrace compare_adaptive_traced(const RealExpr& lhs, const RealExpr& rhs, const PrecisionBudget& budget)
{
    budget.validate();
    const auto& exact_l = lhs.exact_value();
    const auto& exact_r = rhs.exact_value();
    if (exact_l && exact_r) {
        const int c = cmp(*exact_l, *exact_r);
        const Ordering ord = c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::ProvenEqual;
        return {{ord, 0},
                IntervalReal::from_rational(*exact_l, budget.initial_bits),
                IntervalReal::from_rational(*exact_r, budget.initial_bits),
                budget.initial_bits};
    }

    long bits = budget.initial_bits;
    for (;;) {
        IntervalReal a = lhs.eval(bits);
        IntervalReal b = rhs.eval(bits);
        if (a.certainly_less(b)) {
            return {{Ordering::Less, 0}, std::move(a), std::move(b), bits};
        }
        if (a.certainly_greater(b)) {
            return {{Ordering::Greater, 0}, std::move(a), std::move(b), bits};
        }
        if (bits >= budget.max_bits) {
            return {{Ordering::Undecided, bits}, std::move(a), std::move(b), bits};
        }
        bits = std::min(bits * budget.growth_factor, budget.max_bits);
    }
}

std::string_view to_string(Ordering ordering)
{
    switch (ordering) {
    case Ordering::Less:
        return "Less";
    case Ordering::Greater:
        return "Greater";
    case Ordering::ProvenEqual:
        return "ProvenEqual";
    case Ordering::Undecided:
        return "Undecided";
    }
    return "?";
}

}  // namespace sigmacheck

namespace sigmacheck {

mpq_class decimal_to_rational(std::string_view text)
{
    std::string s(text);
    auto fail = [&] { return InputError("malformed decimal '" + s + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long exp10 = 0;
    bool seen_point = false;
    for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
        const char c = s[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) {
                --exp10;
            }
        } else {
            throw fail();
        }
    }
    if (digits.empty()) {
        throw fail();
    }
    if (pos < s.size()) {
        const std::string tail = s.substr(pos + 1);
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(tail, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != tail.size()) {
            throw fail();
        }
        exp10 += e;
    }
    mpz_class mantissa(digits, 10);
    if (negative) {
        mantissa = -mantissa;
    }
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    mpq_class q = exp10 < 0 ? mpq_class(mantissa, power) : mpq_class(mantissa * power);
    q.canonicalize();
    return q;
}

}  // namespace sigmacheck
