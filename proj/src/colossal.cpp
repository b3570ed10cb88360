#include "sigmacheck/colossal.hpp"

#include <cstdint>
#include <sstream>
#include <utility>

#include "sigmacheck/error.hpp"

namespace sigmacheck {

namespace {

mpz_class power(const mpz_class& base, const mpz_class& exponent)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return r;
}

mpz_class power(const mpz_class& base, unsigned long exponent)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

// sigma(p^(a+1)) / sigma(p^a) = (p^(a+2) - 1) / (p^(a+1) - 1).
mpq_class step_ratio(const mpz_class& p, unsigned long a)
{
    mpq_class q(power(p, a + 2) - 1, power(p, a + 1) - 1);
    q.canonicalize();
    return q;
}

RealExpr benefit(const mpz_class& p, unsigned long a)
{
    return log(RealExpr::rational(step_ratio(p, a))) / log(RealExpr::integer(p));
}

mpz_class next_prime_after(const mpz_class& p)
{
    mpz_class q = p + 1;
    while (!is_prime(q)) {
        ++q;
    }
    return q;
}

}  // namespace

Epsilon::Epsilon(const mpz_class& u, const mpz_class& v) : Epsilon(mpq_class(u, v == 0 ? mpz_class(1) : v))
{
    if (u < 1 || v < 1) {
        throw InputError("epsilon must be u/v with u, v >= 1");
    }
}

Epsilon::Epsilon(const mpq_class& value)
{
    mpq_class q = value;
    q.canonicalize();
    if (sgn(q) <= 0) {
        throw InputError("epsilon must be positive");
    }
    u_ = q.get_num();
    v_ = q.get_den();
}

Epsilon Epsilon::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    mpz_class u;
    mpz_class v = 1;
    const bool ok = slash == std::string::npos
                        ? u.set_str(s, 10) == 0
                        : u.set_str(s.substr(0, slash), 10) == 0 && v.set_str(s.substr(slash + 1), 10) == 0;
    if (!ok || s.empty()) {
        throw InputError("malformed epsilon '" + s + "', expected U/V");
    }
    return Epsilon(u, v);
}

unsigned long ca_exponent(const mpz_class& p, const Epsilon& eps)
{
    if (!is_prime(p)) {
        throw InputError(p.get_str() + " is not prime");
    }
    const mpz_class threshold = power(p, eps.u() + eps.v());
    unsigned long a = 0;
    // Step to a + 1 pays off while (p^(a+2) - 1)^v >= p^(u+v) (p^(a+1) - 1)^v.
    for (;;) {
        const mpz_class lhs = power(mpz_class(power(p, a + 2) - 1), eps.v());
        const mpz_class rhs = threshold * power(mpz_class(power(p, a + 1) - 1), eps.v());
        if (lhs < rhs) {
            return a;
        }
        ++a;
    }
}

std::optional<unsigned long> ca_exponent_formula(const mpz_class& p, const Epsilon& eps,
                                                 const PrecisionBudget& budget)
{
    if (!is_prime(p)) {
        throw InputError(p.get_str() + " is not prime");
    }
    budget.validate();
    const RealExpr log_p = log(RealExpr::integer(p));
    const RealExpr e = RealExpr::rational(eps.value());
    const RealExpr p_eps = exp(e * log_p);
    const RealExpr one(1);
    const RealExpr quotient = log((RealExpr::integer(p) * p_eps - one) / (p_eps - one)) / log_p;
    for (long bits = budget.initial_bits;; bits = std::min(bits * budget.growth_factor, budget.max_bits)) {
        const IntervalReal x = quotient.eval(bits);
        const mpz_class lo = x.lo().floor();
        if (lo == x.hi().floor()) {
            return lo.get_ui() - 1;
        }
        if (bits >= budget.max_bits) {
            return std::nullopt;
        }
    }
}

Factorization ca_for_epsilon(const Epsilon& eps)
{
    std::vector<PrimePower> factors;
    for (mpz_class p = 2;; p = next_prime_after(p)) {
        const unsigned long a = ca_exponent(p, eps);
        if (a == 0) {
            break;
        }
        factors.push_back({p, a});
    }
    return Factorization::from_prime_powers(std::move(factors));
}

// ---------------------------------------------------------------- generator

CaGenerator::CaGenerator(const PrecisionBudget& budget, long eps_bits) : budget_(budget), eps_bits_(eps_bits)
{
    budget_.validate();
}

const mpz_class& CaGenerator::prime(std::size_t i)
{
    while (primes_.size() <= i) {
        primes_.push_back(primes_.empty() ? mpz_class(2) : next_prime_after(primes_.back()));
        exponents_.push_back(0);
    }
    return primes_[i];
}

CaGenerator::Step CaGenerator::best_step() const
{
    // Candidates: every prime already present plus the first absent one.
    // primes_ always holds one prime beyond the last used.
    std::optional<Step> best;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        Step candidate{i, benefit(primes_[i], exponents_[i])};
        if (!best) {
            best = std::move(candidate);
        } else {
            const ComparisonResult r = compare_adaptive(candidate.benefit, best->benefit, budget_);
            if (r.ordering == Ordering::Undecided || r.ordering == Ordering::ProvenEqual) {
                throw FourExponentialsTie("benefits of primes " + primes_[i].get_str() + " (exponent " +
                                          std::to_string(exponents_[i]) + ") and " +
                                          primes_[best->prime_index].get_str() + " (exponent " +
                                          std::to_string(exponents_[best->prime_index]) +
                                          ") not separated at " + std::to_string(r.bits_exhausted) + " bits");
            }
            if (r.ordering == Ordering::Greater) {
                best = std::move(candidate);
            }
        }
        if (exponents_[i] == 0) {
            break;
        }
    }
    return *best;
}

void CaGenerator::apply(const Step& step)
{
    ++exponents_[step.prime_index];
    current_ = current_.times_prime(primes_[step.prime_index]);
    if (step.prime_index + 1 == primes_.size()) {
        prime(step.prime_index + 1);
    }
}

CaEntry CaGenerator::next()
{
    if (primes_.empty()) {
        prime(0);
    }
    const Step taken = pending_ ? std::move(*pending_) : best_step();
    apply(taken);
    pending_ = best_step();

    CaEntry entry;
    entry.index = ++emitted_;
    entry.factorization = current_;
    entry.value = current_.value();
    entry.sigma_ratio = sigma_ratio(current_);
    if (entry.index > 1) {
        entry.multiplied_prime = primes_[taken.prime_index];
    }
    const RealExpr one(1);
    entry.eps_lower = (pending_->benefit - one).eval(eps_bits_);
    entry.eps_upper = (taken.benefit - one).eval(eps_bits_);
    return entry;
}

std::vector<CaEntry> ca_sequence(const mpz_class& limit, const PrecisionBudget& budget)
{
    if (limit < 2) {
        throw InputError("ca_sequence requires limit >= 2");
    }
    std::vector<CaEntry> out;
    CaGenerator gen(budget);
    for (;;) {
        CaEntry e = gen.next();
        if (e.value > limit) {
            return out;
        }
        out.push_back(std::move(e));
    }
}

std::vector<CaEntry> ca_sequence_count(std::size_t count, const PrecisionBudget& budget)
{
    std::vector<CaEntry> out;
    CaGenerator gen(budget);
    while (out.size() < count) {
        out.push_back(gen.next());
    }
    return out;
}

mpq_class simplest_rational_between(const mpq_class& lo, const mpq_class& hi)
{
    if (sgn(lo) < 0 || lo >= hi) {
        throw InputError("simplest_rational_between needs 0 <= lo < hi");
    }
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (whole + 1 < hi) {
        return mpq_class(whole + 1);
    }
    const mpq_class frac_lo = lo - whole;
    const mpq_class frac_hi = hi - whole;
    mpq_class y;
    if (sgn(frac_lo) == 0) {
        // (1/frac_hi, infinity): the smallest integer above 1/frac_hi.
        const mpq_class inv = 1 / frac_hi;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        y = f + 1;
    } else {
        y = simplest_rational_between(1 / frac_hi, 1 / frac_lo);
    }
    mpq_class out = whole + 1 / y;
    out.canonicalize();
    return out;
}

Epsilon interior_epsilon(const CaEntry& entry)
{
    return Epsilon(simplest_rational_between(entry.eps_lower.hi().to_rational(), entry.eps_upper.lo().to_rational()));
}

mpz_class brute_force_ca_oracle(const Epsilon& eps, unsigned long search_limit)
{
    if (search_limit < 2) {
        throw InputError("search limit must be at least 2");
    }
    // Plain divisor-sum sieve, independent of the segmented sieve module.
    std::vector<std::uint64_t> sig(search_limit + 1, 0);
    for (unsigned long d = 1; d <= search_limit; ++d) {
        for (unsigned long m = d; m <= search_limit; m += d) {
            sig[m] += d;
        }
    }
    const unsigned long v = eps.v().get_ui();
    const unsigned long uv = mpz_class(eps.u() + eps.v()).get_ui();

    // Only strict sigma(k)/k records can maximize sigma(k)/k^(1+eps): an
    // earlier j with sigma(j)/j >= sigma(k)/k beats k since j^eps < k^eps.
    std::uint64_t record_sigma = 1;
    std::uint64_t record_k = 1;
    unsigned long best = 1;
    mpz_class best_sigma_pow = 1;  // sigma(best)^v
    mpz_class best_k_pow = 1;      // best^(u+v)
    for (unsigned long k = 2; k <= search_limit; ++k) {
        const auto lhs = static_cast<unsigned __int128>(sig[k]) * record_k;
        const auto rhs = static_cast<unsigned __int128>(record_sigma) * k;
        if (lhs <= rhs) {
            continue;
        }
        record_sigma = sig[k];
        record_k = k;
        // sigma(k)/k^(1+eps) > sigma(b)/b^(1+eps)
        //   <=> sigma(k)^v * b^(u+v) > sigma(b)^v * k^(u+v)
        const mpz_class sk_pow = power(mpz_class(static_cast<unsigned long>(sig[k])), v);
        const mpz_class k_pow = power(mpz_class(k), uv);
        if (sk_pow * best_k_pow > best_sigma_pow * k_pow) {
            best = k;
            best_sigma_pow = sk_pow;
            best_k_pow = k_pow;
        }
    }
    return mpz_class(best);
}

std::string ca_csv_header() { return "index,n,factorization,sigma_ratio,eps_lo,eps_hi,multiplied_prime"; }

std::string to_csv_row(const CaEntry& entry)
{
    std::ostringstream os;
    os << entry.index << ',' << entry.value.get_str() << ',' << entry.factorization.to_string() << ','
       << entry.sigma_ratio.to_fixed(3) << ',' << to_decimal(entry.eps_lower.lo(), 20, Rounding::Down) << ','
       << to_decimal(entry.eps_upper.hi(), 20, Rounding::Up) << ','
       << (entry.multiplied_prime ? entry.multiplied_prime->get_str() : std::string());
    return os.str();
}

nlohmann::json to_json(const CaEntry& entry)
{
    nlohmann::json j = {
        {"index", entry.index},
        {"n", entry.value.get_str()},
        {"factorization", entry.factorization.to_string()},
        {"sigma_ratio", entry.sigma_ratio.to_fixed(3)},
        {"sigma_ratio_exact", entry.sigma_ratio.value().get_str()},
        {"eps_lo", to_decimal(entry.eps_lower.lo(), 20, Rounding::Down)},
        {"eps_hi", to_decimal(entry.eps_upper.hi(), 20, Rounding::Up)},
    };
    j["multiplied_prime"] = entry.multiplied_prime ? nlohmann::json(entry.multiplied_prime->get_str()) : nullptr;
    return j;
}

}  // namespace sigmacheck
