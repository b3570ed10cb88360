#include "sigmacheck/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include "sigmacheck/error.hpp"
#include "sigmacheck/harmonic.hpp"

namespace sigmacheck {

namespace {

std::uint32_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return static_cast<std::uint32_t>(r);
}

mpz_class to_mpz(std::uint64_t v)
{
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return z;
}

Dyadic dyadic_from_double(double x)
{
    int e = 0;
    const double m = std::frexp(x, &e);
    return Dyadic(mpz_class(std::ldexp(m, 53)), e - 53);
}

std::string decimal_down(double x, int digits) { return to_decimal(dyadic_from_double(x), digits, Rounding::Down); }

std::string decimal_near(double x)
{
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

SegmentValues sieve_with_primes(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes)
{
    const std::size_t len = hi - lo + 1;
    SegmentValues out;
    out.sigma.assign(len, 1);
    out.divisor_count.assign(len, 1);
    std::vector<std::uint64_t> rem(len);
    for (std::size_t i = 0; i < len; ++i) {
        rem[i] = lo + i;
    }
    for (const std::uint32_t p32 : primes) {
        const std::uint64_t p = p32;
        if (p * p > hi) {
            break;
        }
        for (std::uint64_t m = (lo + p - 1) / p * p; m <= hi; m += p) {
            const std::size_t i = m - lo;
            std::uint64_t r = rem[i];
            std::uint64_t pk = 1;
            std::uint64_t sum = 1;
            std::uint32_t a = 0;
            do {
                r /= p;
                pk *= p;
                sum += pk;
                ++a;
            } while (r % p == 0);
            rem[i] = r;
            if (__builtin_mul_overflow(out.sigma[i], sum, &out.sigma[i])) {
                throw OverflowError("sigma(" + std::to_string(m) + ") exceeds 64 bits");
            }
            out.divisor_count[i] *= a + 1;
        }
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (rem[i] > 1) {
            if (__builtin_mul_overflow(out.sigma[i], rem[i] + 1, &out.sigma[i])) {
                throw OverflowError("sigma(" + std::to_string(lo + i) + ") exceeds 64 bits");
            }
            out.divisor_count[i] *= 2;
        }
    }
    return out;
}

void check_segment_args(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config)
{
    config.validate();
    if (lo < 1 || lo > hi || hi > config.limit) {
        throw InputError("segment [" + std::to_string(lo) + ", " + std::to_string(hi) + "] outside [1, " +
                         std::to_string(config.limit) + "]");
    }
    if (hi - lo >= config.segment_size) {
        throw InputError("segment longer than segment_size");
    }
}

// Relative margin by which `upper` exceeds `lower`; negative when it does not.
double relative_margin(const IntervalReal& lower, const IntervalReal& upper)
{
    const double top = upper.lo().to_double();
    const double gap = (upper.lo() - lower.hi()).to_double();
    const double scale = std::max(std::abs(top), std::abs(lower.hi().to_double()));
    return scale == 0.0 ? gap : gap / scale;
}

// lower.hi + margin * max(|lower.hi|, |upper.lo|) < upper.lo, exactly.
bool separated_with_margin(const IntervalReal& lower, const IntervalReal& upper)
{
    const Dyadic& a = lower.hi();
    const Dyadic& b = upper.lo();
    const Dyadic abs_a = a.sign() < 0 ? -a : a;
    const Dyadic abs_b = b.sign() < 0 ? -b : b;
    const Dyadic& scale = abs_a < abs_b ? abs_b : abs_a;
    // Multiply through by the margin's denominator.
    const Dyadic den = Dyadic::from_integer(kFastPathMargin.get_den());
    const Dyadic num = Dyadic::from_integer(kFastPathMargin.get_num());
    return a * den + scale * num < b * den;
}

struct Chunk {
    std::uint64_t lo;
    std::uint64_t hi;
    HarmonicBracket harmonic;  // at lo - 1
};

struct ChunkResult {
    RangeReport partial;
    std::vector<CheckReport> reports;
};

class RangeVerifier {
public:
    RangeVerifier(CriterionKind kind, const std::vector<std::uint32_t>& primes, const PrecisionBudget& budget,
                  bool keep_reports)
        : kind_(kind), primes_(primes), budget_(budget), keep_reports_(keep_reports),
          exp_gamma_(exp(euler_gamma(kFastPathBits)))
    {
    }

    ChunkResult run(Chunk chunk) const
    {
        ChunkResult result;
        RangeReport& rep = result.partial;
        rep.kind = kind_;
        rep.lo = chunk.lo;
        rep.hi = chunk.hi;
        rep.worst_margin = std::numeric_limits<double>::infinity();

        SegmentValues values;
        if (needs_sigma(kind_)) {
            values = sieve_with_primes(chunk.lo, chunk.hi, primes_);
        }
        for (std::uint64_t n = chunk.lo; n <= chunk.hi; ++n) {
            if (needs_harmonic(kind_)) {
                chunk.harmonic.advance();
            }
            const std::uint64_t sigma_n = needs_sigma(kind_) ? values.sigma[n - chunk.lo] : 0;
            CheckReport report = check_one(n, sigma_n, chunk.harmonic, rep);
            ++rep.counts[static_cast<std::size_t>(report.verdict)];
            if (report.verdict == Verdict::Violated && rep.violations.size() < RangeReport::kMaxListed) {
                rep.violations.push_back(n);
            }
            if (report.verdict == Verdict::Undecided && rep.undecided.size() < RangeReport::kMaxListed) {
                rep.undecided.push_back(n);
            }
            if (keep_reports_) {
                result.reports.push_back(std::move(report));
            }
        }
        return result;
    }

private:
    CheckReport check_one(std::uint64_t n, std::uint64_t sigma_n, const HarmonicBracket& harmonic,
                          RangeReport& rep) const
    {
        const mpz_class nz = to_mpz(n);
        std::optional<CheckReport> fast;
        try {
            fast = fast_path(nz, sigma_n, harmonic, rep);
        } catch (const DomainError&) {
            // Formulas undefined at this n for fixed precision: let the full
            // check decide (and report) it.
        }
        if (fast) {
            return std::move(*fast);
        }
        ++rep.fallbacks;
        CheckReport full = check_with_sigma(kind_, nz, to_mpz(sigma_n), budget_);
        const bool at_most = relation(kind_) == Relation::AtMost;
        track(rep, n, at_most ? relative_margin(full.lhs, full.rhs) : relative_margin(full.rhs, full.lhs));
        return full;
    }

    std::optional<CheckReport> fast_path(const mpz_class& n, std::uint64_t sigma_n, const HarmonicBracket& harmonic,
                                         RangeReport& rep) const
    {
        const CriterionInputs<IntervalReal> inputs{
            IntervalReal::from_integer(n, kFastPathBits),
            IntervalReal::from_integer(to_mpz(sigma_n), kFastPathBits),
            needs_harmonic(kind_) ? harmonic.interval() : IntervalReal::point(Dyadic(1), kFastPathBits),
            exp_gamma_,
            IntervalReal::point(Dyadic(1), kFastPathBits),
        };
        const std::vector<IntervalReal> terms = criterion_terms(
            kind_, inputs, [](const mpq_class& q) { return IntervalReal::from_rational(q, kFastPathBits); });
        const bool at_most = relation(kind_) == Relation::AtMost;
        double margin = std::numeric_limits<double>::infinity();
        long bits = kFastPathBits;
        for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
            const IntervalReal& lower = at_most ? terms[i] : terms[i + 1];
            const IntervalReal& upper = at_most ? terms[i + 1] : terms[i];
            if (!separated_with_margin(lower, upper)) {
                return std::nullopt;
            }
            margin = std::min(margin, relative_margin(lower, upper));
            bits = std::max({bits, lower.bits(), upper.bits()});
        }
        track(rep, n.get_ui(), margin);
        CheckReport report;
        report.n = n;
        report.kind = kind_;
        report.verdict = Verdict::StrictHolds;
        report.lhs = terms.front();
        report.rhs = terms.back();
        report.precision_used = bits;
        report.in_range = n >= valid_from(kind_);
        return report;
    }

    static void track(RangeReport& rep, std::uint64_t n, double margin)
    {
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_margin_n = n;
        }
    }

    CriterionKind kind_;
    const std::vector<std::uint32_t>& primes_;
    PrecisionBudget budget_;
    bool keep_reports_;
    IntervalReal exp_gamma_;
};

void merge_into(RangeReport& total, const RangeReport& part)
{
    for (std::size_t i = 0; i < 4; ++i) {
        total.counts[i] += part.counts[i];
    }
    total.fallbacks += part.fallbacks;
    if (part.worst_margin < total.worst_margin) {
        total.worst_margin = part.worst_margin;
        total.worst_margin_n = part.worst_margin_n;
    }
    for (auto n : part.violations) {
        if (total.violations.size() < RangeReport::kMaxListed) {
            total.violations.push_back(n);
        }
    }
    for (auto n : part.undecided) {
        if (total.undecided.size() < RangeReport::kMaxListed) {
            total.undecided.push_back(n);
        }
    }
}

template <typename Visit>
void for_each_segment(std::uint64_t limit, const SieveConfig& config, Visit visit)
{
    const auto primes = primes_up_to(isqrt(limit));
    for (std::uint64_t lo = 1; lo <= limit; lo += config.segment_size) {
        const std::uint64_t hi = std::min(limit, lo + config.segment_size - 1);
        visit(lo, sieve_with_primes(lo, hi, primes));
    }
}

}  // namespace

void SieveConfig::validate() const
{
    if (limit < 1 || limit > kSieveMaxLimit) {
        throw InputError("sieve limit must lie in [1, 10^12]");
    }
    if (segment_size < 2) {
        throw InputError("segment size must be at least 2");
    }
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound)
{
    std::vector<std::uint32_t> primes;
    if (bound < 2) {
        return primes;
    }
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

SegmentValues sieve_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config)
{
    check_segment_args(lo, hi, config);
    return sieve_with_primes(lo, hi, primes_up_to(isqrt(hi)));
}

std::vector<std::uint64_t> sigma_sieve(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config)
{
    return sieve_segment(lo, hi, config).sigma;
}

RangeReport verify_range(CriterionKind kind, std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                         const CheckSink& sink, const PrecisionBudget& budget)
{
    config.validate();
    budget.validate();
    if (lo < 1 || lo > hi || hi > config.limit) {
        throw InputError("range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] outside [1, " +
                         std::to_string(config.limit) + "]");
    }
    const unsigned workers = config.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.workers;
    const std::uint64_t span = hi - lo + 1;
    const std::uint64_t chunk_len =
        std::min<std::uint64_t>(config.segment_size, std::max<std::uint64_t>(4096, span / (4 * workers) + 1));

    const auto primes = needs_sigma(kind) ? primes_up_to(isqrt(hi)) : std::vector<std::uint32_t>{};
    const RangeVerifier verifier(kind, primes, budget, static_cast<bool>(sink));

    RangeReport total;
    total.kind = kind;
    total.lo = lo;
    total.hi = hi;
    total.worst_margin = std::numeric_limits<double>::infinity();

    // Running bracket for H_{start - 1}; handed to each chunk before the
    // wave is dispatched so chunks are independent.
    HarmonicBracket harmonic =
        needs_harmonic(kind) ? HarmonicBracket::at(lo - 1) : HarmonicBracket(kFastPathBits);
    std::uint64_t next = lo;
    while (next <= hi) {
        std::vector<Chunk> wave;
        while (wave.size() < workers && next <= hi) {
            const std::uint64_t end = std::min(hi, next + chunk_len - 1);
            wave.push_back({next, end, harmonic});
            if (needs_harmonic(kind) && end < hi) {
                while (harmonic.n() < end) {
                    harmonic.advance();
                }
            }
            next = end + 1;
        }
        std::vector<ChunkResult> results(wave.size());
        if (wave.size() == 1) {
            results[0] = verifier.run(std::move(wave[0]));
        } else {
            std::vector<std::exception_ptr> errors(wave.size());
            {
                std::vector<std::jthread> threads;
                for (std::size_t i = 0; i < wave.size(); ++i) {
                    threads.emplace_back([&, i] {
                        try {
                            results[i] = verifier.run(std::move(wave[i]));
                        } catch (...) {
                            errors[i] = std::current_exception();
                        }
                    });
                }
            }
            for (const auto& e : errors) {
                if (e) {
                    std::rethrow_exception(e);
                }
            }
        }
        for (auto& r : results) {
            merge_into(total, r.partial);
            if (sink) {
                for (const auto& report : r.reports) {
                    sink(report);
                }
            }
        }
    }
    return total;
}

std::vector<RecordEntry> records(RecordKind kind, std::uint64_t limit, const SieveConfig& config)
{
    SieveConfig cfg = config;
    cfg.limit = std::max<std::uint64_t>(limit, 1);
    cfg.validate();
    std::vector<RecordEntry> out;
    std::uint64_t best_sigma = 0;
    std::uint64_t best_n = 1;
    std::uint64_t best_count = 0;
    for_each_segment(limit, cfg, [&](std::uint64_t lo, const SegmentValues& v) {
        for (std::size_t i = 0; i < v.sigma.size(); ++i) {
            const std::uint64_t n = lo + i;
            if (kind == RecordKind::Superabundant) {
                const auto lhs = static_cast<unsigned __int128>(v.sigma[i]) * best_n;
                const auto rhs = static_cast<unsigned __int128>(best_sigma) * n;
                if (lhs > rhs) {
                    best_sigma = v.sigma[i];
                    best_n = n;
                    mpq_class ratio(to_mpz(v.sigma[i]), to_mpz(n));
                    ratio.canonicalize();
                    out.push_back({n, kind, std::move(ratio)});
                }
            } else if (v.divisor_count[i] > best_count) {
                best_count = v.divisor_count[i];
                out.push_back({n, kind, best_count});
            }
        }
    });
    return out;
}

double bachmann_residual(std::uint64_t n)
{
    if (n < 10) {
        throw InputError("bachmann_residual requires n >= 10");
    }
    SieveConfig cfg;
    cfg.limit = n;
    cfg.validate();
    unsigned __int128 sum = 0;
    for_each_segment(n, cfg, [&](std::uint64_t, const SegmentValues& v) {
        for (auto s : v.sigma) {
            sum += s;
        }
    });
    mpz_class total = to_mpz(static_cast<std::uint64_t>(sum >> 64));
    total <<= 64;
    total += to_mpz(static_cast<std::uint64_t>(sum));

    const RealExpr nn = RealExpr::integer(to_mpz(n));
    const RealExpr pi = RealExpr::pi();
    const RealExpr residual = (RealExpr::integer(total) - pi * pi * nn * nn / RealExpr(12)) / (nn * log(nn));
    const IntervalReal r = residual.eval(128);
    if (r.width().to_double() >= 1e-6) {
        throw Error("bachmann residual enclosure unexpectedly wide");
    }
    return r.midpoint().to_double();
}

double mertens_ratio(std::uint64_t x)
{
    if (x < 2) {
        throw InputError("mertens_ratio requires x >= 2");
    }
    if (x > std::numeric_limits<std::uint32_t>::max()) {
        throw InputError("mertens_ratio supports x < 2^32");
    }
    constexpr long bits = 128;
    IntervalReal product = IntervalReal::point(Dyadic(1), bits);
    for (const std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(x))) {
        product = product * IntervalReal::from_rational(mpq_class(p - 1, p), bits);
    }
    const IntervalReal ratio = product * log(IntervalReal::from_integer(to_mpz(x), bits)) * exp(euler_gamma(bits));
    return ratio.midpoint().to_double();
}

StatsReport stats(const std::vector<std::uint64_t>& bachmann_n, const std::vector<std::uint64_t>& mertens_x)
{
    StatsReport report;
    for (auto n : bachmann_n) {
        report.bachmann_residuals.emplace_back(n, bachmann_residual(n));
    }
    for (auto x : mertens_x) {
        report.mertens_ratios.emplace_back(x, mertens_ratio(x));
    }
    return report;
}

// ---------------------------------------------------------------- serialization

std::string range_csv_header()
{
    return "kind,lo,hi,strict_holds,equality,violated,undecided,fallbacks,worst_margin_n,worst_margin";
}

std::string to_csv_row(const RangeReport& r)
{
    std::ostringstream os;
    os << to_string(r.kind) << ',' << r.lo << ',' << r.hi;
    for (auto c : r.counts) {
        os << ',' << c;
    }
    os << ',' << r.fallbacks << ',' << r.worst_margin_n << ','
       << (std::isfinite(r.worst_margin) ? decimal_down(r.worst_margin, 6) : std::string("inf"));
    return os.str();
}

nlohmann::json to_json(const RangeReport& r)
{
    return {
        {"kind", std::string(to_string(r.kind))},
        {"lo", r.lo},
        {"hi", r.hi},
        {"strict_holds", r.count(Verdict::StrictHolds)},
        {"equality", r.count(Verdict::Equality)},
        {"violated", r.count(Verdict::Violated)},
        {"undecided", r.count(Verdict::Undecided)},
        {"fallbacks", r.fallbacks},
        {"worst_margin_n", r.worst_margin_n},
        {"worst_margin", std::isfinite(r.worst_margin) ? decimal_down(r.worst_margin, 6) : std::string("inf")},
        {"violations", r.violations},
        {"undecided_n", r.undecided},
    };
}

std::string_view to_string(RecordKind kind) { return kind == RecordKind::Superabundant ? "sa" : "hc"; }

std::string record_csv_header() { return "n,kind,measure,factorization"; }

namespace {

std::string measure_text(const RecordEntry& e)
{
    if (const auto* q = std::get_if<mpq_class>(&e.measure)) {
        return q->get_str();
    }
    return std::to_string(std::get<std::uint64_t>(e.measure));
}

}  // namespace

std::string to_csv_row(const RecordEntry& e)
{
    return std::to_string(e.n) + ',' + std::string(to_string(e.kind)) + ',' + measure_text(e) + ',' +
           factorize(to_mpz(e.n)).to_string();
}

nlohmann::json to_json(const RecordEntry& e)
{
    return {{"n", e.n},
            {"kind", std::string(to_string(e.kind))},
            {"measure", measure_text(e)},
            {"factorization", factorize(to_mpz(e.n)).to_string()}};
}

std::string stats_csv_header() { return "series,arg,value"; }

std::vector<std::string> to_csv_rows(const StatsReport& report)
{
    std::vector<std::string> rows;
    for (const auto& [n, r] : report.bachmann_residuals) {
        rows.push_back("bachmann," + std::to_string(n) + ',' + decimal_near(r));
    }
    for (const auto& [x, r] : report.mertens_ratios) {
        rows.push_back("mertens," + std::to_string(x) + ',' + decimal_near(r));
    }
    return rows;
}

nlohmann::json to_json(const StatsReport& report)
{
    nlohmann::json j = {{"bachmann", nlohmann::json::array()}, {"mertens", nlohmann::json::array()}};
    for (const auto& [n, r] : report.bachmann_residuals) {
        j["bachmann"].push_back({{"n", n}, {"residual", r}});
    }
    for (const auto& [x, r] : report.mertens_ratios) {
        j["mertens"].push_back({{"x", x}, {"ratio", r}});
    }
    return j;
}

}  // namespace sigmacheck
