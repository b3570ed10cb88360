#pragma once

// Segmented divisor-sum sieve and the bulk checks built on it: range
// verification of the criteria, superabundant / highly composite records,
// and the empirical average-order and Mertens-product statistics.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sigmacheck/criteria.hpp"

namespace sigmacheck {

inline constexpr std::uint64_t kSieveMaxLimit = 1'000'000'000'000ULL;

struct SieveConfig {
    std::uint64_t limit = kSieveMaxLimit;
    std::uint64_t segment_size = std::uint64_t{1} << 22;
    /// Worker threads for range verification; 0 picks the hardware count.
    unsigned workers = 0;

    /// InputError unless 1 <= limit <= 10^12 and segment_size >= 2.
    void validate() const;
};

/// Primes up to and including `bound` (plain Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// sigma(n) for each n in [lo, hi]. Requires 1 <= lo <= hi <= limit and
/// hi - lo < segment_size. OverflowError if a value would not fit in 64 bits.
std::vector<std::uint64_t> sigma_sieve(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

/// sigma(n) and d(n) for each n in [lo, hi], same preconditions.
struct SegmentValues {
    std::vector<std::uint64_t> sigma;
    std::vector<std::uint32_t> divisor_count;
};
SegmentValues sieve_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

struct RangeReport {
    CriterionKind kind = CriterionKind::Lagarias101;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    /// Indexed by Verdict.
    std::array<std::uint64_t, 4> counts{};
    /// n whose fixed-precision margin was below the safety threshold and that
    /// were re-checked with the adaptive procedure.
    std::uint64_t fallbacks = 0;
    /// Smallest relative margin (upper - lower) / upper over all links.
    double worst_margin = 0.0;
    std::uint64_t worst_margin_n = 0;
    /// Violated n (first kMaxListed).
    std::vector<std::uint64_t> violations;
    std::vector<std::uint64_t> undecided;

    static constexpr std::size_t kMaxListed = 1000;

    std::uint64_t count(Verdict v) const { return counts[static_cast<std::size_t>(v)]; }
    std::uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

/// Fast path: a link t_i <= t_j is accepted without the adaptive procedure
/// when hi(t_i) * (1 + kFastPathMargin) < lo(t_j).
inline const mpq_class kFastPathMargin{1, 1'000'000};
inline constexpr long kFastPathBits = 64;

using CheckSink = std::function<void(const CheckReport&)>;

/// Check every n in [lo, hi]. Harmonic kinds use a directed-rounded pair of
/// running sums bracketing H_n; sigma kinds use the segmented sieve. Any n
/// whose fast-path margin is too small is re-checked with `check`.
/// Reports reach `sink` in increasing n.
RangeReport verify_range(CriterionKind kind, std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {},
                         const CheckSink& sink = {}, const PrecisionBudget& budget = {});

enum class RecordKind { Superabundant, HighlyComposite };

struct RecordEntry {
    std::uint64_t n = 0;
    RecordKind kind = RecordKind::Superabundant;
    /// sigma(n)/n for superabundant records, d(n) for highly composite ones.
    std::variant<mpq_class, std::uint64_t> measure;
};

/// Every n <= limit whose measure exceeds that of all smaller k.
std::vector<RecordEntry> records(RecordKind kind, std::uint64_t limit, const SieveConfig& config = {});

/// (sum_{j<=n} sigma(j) - pi^2 n^2 / 12) / (n log n), n >= 10. The sum is
/// exact; the result is the midpoint of an enclosure narrower than 1e-6.
double bachmann_residual(std::uint64_t n);

/// prod_{p<=x} (1 - 1/p) * log x * e^gamma, x >= 2 (tends to 1).
double mertens_ratio(std::uint64_t x);

struct StatsReport {
    std::vector<std::pair<std::uint64_t, double>> bachmann_residuals;
    std::vector<std::pair<std::uint64_t, double>> mertens_ratios;
};

StatsReport stats(const std::vector<std::uint64_t>& bachmann_n, const std::vector<std::uint64_t>& mertens_x);

// Serialization.
std::string range_csv_header();
std::string to_csv_row(const RangeReport& report);
nlohmann::json to_json(const RangeReport& report);

std::string_view to_string(RecordKind kind);
std::string record_csv_header();
std::string to_csv_row(const RecordEntry& entry);
nlohmann::json to_json(const RecordEntry& entry);

std::string stats_csv_header();
/// One row per statistic: `series,arg,value`.
std::vector<std::string> to_csv_rows(const StatsReport& report);
nlohmann::json to_json(const StatsReport& report);

}  // namespace sigmacheck
