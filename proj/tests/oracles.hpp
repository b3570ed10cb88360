#pragma once

// Independent reference computations and frozen data for the tests. Nothing
// here calls into the library.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>

namespace oracle {

// H over [a, b) as p/q, by binary splitting.
inline std::pair<mpz_class, mpz_class> harmonic_split(unsigned long a, unsigned long b)
{
    if (b - a == 1) {
        return {1, a};
    }
    const unsigned long m = a + (b - a) / 2;
    auto [p1, q1] = harmonic_split(a, m);
    auto [p2, q2] = harmonic_split(m, b);
    return {p1 * q2 + p2 * q1, q1 * q2};
}

inline mpq_class harmonic(unsigned long n)
{
    auto [p, q] = harmonic_split(1, n + 1);
    mpq_class h(p, q);
    h.canonicalize();
    return h;
}

// Sum of divisors by pairing d with n / d.
inline std::uint64_t sigma(std::uint64_t n)
{
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d * d != n) {
                s += n / d;
            }
        }
    }
    return s;
}

inline std::uint64_t divisor_count(std::uint64_t n)
{
    std::uint64_t c = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            c += d * d == n ? 1 : 2;
        }
    }
    return c;
}

struct CaRow {
    const char* value;
    const char* factorization;
    const char* ratio;       // as printed, three decimals
    const char* multiplied;  // "" for the first row
};

// Colossally abundant numbers up to 10^18 as published.
inline constexpr std::array<CaRow, 22> kTable1 = {{
    {"2", "2", "1.500", ""},
    {"6", "2 * 3", "2.000", "3"},
    {"12", "2^2 * 3", "2.333", "2"},
    {"60", "2^2 * 3 * 5", "2.800", "5"},
    {"120", "2^3 * 3 * 5", "3.000", "2"},
    {"360", "2^3 * 3^2 * 5", "3.250", "3"},
    {"2520", "2^3 * 3^2 * 5 * 7", "3.714", "7"},
    {"5040", "2^4 * 3^2 * 5 * 7", "3.838", "2"},
    {"55440", "2^4 * 3^2 * 5 * 7 * 11", "4.187", "11"},
    {"720720", "2^4 * 3^2 * 5 * 7 * 11 * 13", "4.509", "13"},
    {"1441440", "2^5 * 3^2 * 5 * 7 * 11 * 13", "4.581", "2"},
    {"4324320", "2^5 * 3^3 * 5 * 7 * 11 * 13", "4.699", "3"},
    {"21621600", "2^5 * 3^3 * 5^2 * 7 * 11 * 13", "4.855", "5"},
    {"367567200", "2^5 * 3^3 * 5^2 * 7 * 11 * 13 * 17", "5.141", "17"},
    {"6983776800", "2^5 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19", "5.412", "19"},
    {"160626866400", "2^5 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19 * 23", "5.647", "23"},
    {"321253732800", "2^6 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19 * 23", "5.692", "2"},
    {"9316358251200", "2^6 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19 * 23 * 29", "5.888", "29"},
    {"288807105787200", "2^6 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31", "6.078", "31"},
    {"2021649740510400", "2^6 * 3^3 * 5^2 * 7^2 * 11 * 13 * 17 * 19 * 23 * 29 * 31", "6.187", "7"},
    {"6064949221531200", "2^6 * 3^4 * 5^2 * 7^2 * 11 * 13 * 17 * 19 * 23 * 29 * 31", "6.238", "3"},
    {"224403121196654400", "2^6 * 3^4 * 5^2 * 7^2 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37", "6.407", "37"},
}};

// Product of a rendering like "2^4 * 3^2 * 5", computed by hand-rolled parsing.
inline mpz_class expand(const std::string& text)
{
    mpz_class result = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(" * ", pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string term = text.substr(pos, end - pos);
        const auto caret = term.find('^');
        const mpz_class base(term.substr(0, caret));
        const unsigned long e = caret == std::string::npos ? 1 : std::stoul(term.substr(caret + 1));
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e);
        result *= power;
        pos = end == text.size() ? end : end + 3;
    }
    return result;
}

// High-precision reference values (60-digit evaluations, frozen).
inline constexpr const char* kEulerGamma = "0.577215664901532860606512090082402431042159335939923598805767";
inline constexpr const char* kExpGamma = "1.78107241799019798523650410310717954916964521430343";
inline constexpr const char* kLagariasRhs6 = "12.83417871950625604538";
inline constexpr const char* kLagariasRhs5040 = "19836.31873108944797731";
inline constexpr const char* kRobinRhs5040 = "19237.06153166369786864";
inline constexpr const char* kLemma203Lhs3 = "3.79119818759394418265";
inline constexpr const char* kLemma203Rhs3 = "0.50251797521999830716";
inline constexpr const char* kLemma206Lhs20 = "50.34887745972186164809";
inline constexpr const char* kLemma206Rhs20 = "85.81659872835720760821";
inline constexpr const char* kGronwall5040 = "1.79097336653488113336";
inline constexpr const char* kGronwall55440 = "1.75124651488749424693";
inline constexpr const char* kGronwall3 = "14.17718374918197804921";
inline constexpr const char* kHarmonic100 = "5.18737751763962026081";
// Exact constant in Robin's unconditional bound: (7/3 - e^gamma log log 12) log log 12.
inline constexpr const char* kRobinExactConstant = "0.6482136494217997627";

// sum_{j <= n} sigma(j), exact.
struct SigmaSum {
    std::uint64_t n;
    const char* sum;
    double residual;
};
inline constexpr std::array<SigmaSum, 4> kSigmaSums = {{
    {1000, "823081", 0.0888807653},
    {10000, "82256014", 0.1010891803},
    {100000, "8224740835", 0.0612361811},
    {1000000, "822468118437", 0.0785358516},
}};

// Frozen bound on |bachmann_residual| over the sampled n.
inline constexpr double kBachmannBound = 2.0;

inline constexpr std::array<std::pair<std::uint64_t, double>, 7> kMertensRatios = {{
    {2, 0.61727266245},
    {10, 0.93738761125},
    {100, 0.98685945321},
    {1000, 0.99613283375},
    {10000, 0.99876973740},
    {100000, 0.99969583887},
    {1000000, 0.99996106240},
}};

}  // namespace oracle
