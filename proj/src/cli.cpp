#include "sigmacheck/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigmacheck/colossal.hpp"
#include "sigmacheck/criteria.hpp"
#include "sigmacheck/error.hpp"
#include "sigmacheck/sieve.hpp"

namespace sigmacheck::cli {

namespace {

enum class Format { Csv, Json, Table };

// Accepts plain decimal integers and powers written as `b^e`.
mpz_class parse_number(const std::string& text)
{
    const auto caret = text.find('^');
    auto digits = [&](const std::string& s) {
        mpz_class z;
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            z.set_str(s, 10) != 0) {
            throw InputError("not a nonnegative integer: '" + text + "'");
        }
        return z;
    };
    if (caret == std::string::npos) {
        return digits(text);
    }
    const mpz_class base = digits(text.substr(0, caret));
    const mpz_class exponent = digits(text.substr(caret + 1));
    if (exponent > 4096) {
        throw InputError("exponent too large in '" + text + "'");
    }
    mpz_class result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return result;
}

std::uint64_t parse_u64(const std::string& text)
{
    const mpz_class z = parse_number(text);
    if (z > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
        throw InputError("value out of range: '" + text + "'");
    }
    return std::stoull(z.get_str());
}

std::vector<std::string> split(const std::string& row)
{
    std::vector<std::string> fields;
    std::stringstream ss(row);
    std::string f;
    while (std::getline(ss, f, ',')) {
        fields.push_back(f);
    }
    if (!row.empty() && row.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

// Streams rows in the chosen format; the header is written before the first
// row (or on finish when there were none).
class Emitter {
public:
    Emitter(std::ostream& out, Format format, std::string header)
        : out_(out), format_(format), header_(std::move(header))
    {
    }

    void row(const std::string& csv, const nlohmann::json& json)
    {
        start();
        switch (format_) {
        case Format::Csv:
            out_ << csv << '\n';
            break;
        case Format::Json:
            out_ << json.dump() << '\n';
            break;
        case Format::Table:
            out_ << tabulate(csv) << '\n';
            break;
        }
        out_.flush();
    }

    void finish() { start(); }

private:
    void start()
    {
        if (started_) {
            return;
        }
        started_ = true;
        if (format_ == Format::Csv) {
            out_ << header_ << '\n';
        } else if (format_ == Format::Table) {
            out_ << tabulate(header_) << '\n';
        }
    }

    static std::string tabulate(const std::string& csv)
    {
        std::ostringstream os;
        bool first = true;
        for (const auto& f : split(csv)) {
            if (!first) {
                os << "  ";
            }
            first = false;
            os << std::left << std::setw(12) << f;
        }
        std::string s = os.str();
        s.erase(s.find_last_not_of(' ') + 1);
        return s;
    }

    std::ostream& out_;
    Format format_;
    std::string header_;
    bool started_ = false;
};

struct Outcome {
    bool violated = false;
    bool undecided = false;

    void note(Verdict v)
    {
        violated = violated || v == Verdict::Violated;
        undecided = undecided || v == Verdict::Undecided;
    }
    int code() const { return violated ? kExitViolated : undecided ? kExitUndecided : kExitOk; }
};

PrecisionBudget make_budget(std::optional<long> initial, std::optional<long> max_bits)
{
    PrecisionBudget budget;
    if (const char* env = std::getenv(kMaxBitsEnv); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            budget.max_bits = std::stol(env, &used);
            if (used != std::string(env).size()) {
                throw InputError("trailing characters");
            }
        } catch (const std::exception&) {
            throw InputError(std::string(kMaxBitsEnv) + " must be an integer, got '" + env + "'");
        }
    }
    if (initial) {
        budget.initial_bits = *initial;
    }
    if (max_bits) {
        budget.max_bits = *max_bits;
    }
    budget.initial_bits = std::min(budget.initial_bits, budget.max_bits);
    budget.validate();
    return budget;
}

void add_format(CLI::App* app, std::string& format)
{
    app->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
}

Format to_format(const std::string& s)
{
    return s == "csv" ? Format::Csv : s == "json" ? Format::Json : Format::Table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rigorous checks of divisor-sum inequalities", "sigmacheck"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Check one criterion for every n in a range");
    std::string criterion;
    std::string from_text;
    std::string to_text;
    std::string format = "table";
    unsigned workers = 0;
    std::optional<long> initial_bits;
    std::optional<long> max_bits;
    std::vector<std::string> criterion_names;
    for (auto k : kAllCriteria) {
        criterion_names.emplace_back(to_string(k));
    }
    verify->add_option("--criterion", criterion, "Criterion")->required()->check(CLI::IsMember(criterion_names));
    verify->add_option("--from", from_text, "First n")->required();
    verify->add_option("--to", to_text, "Last n")->required();
    verify->add_option("--workers", workers, "Worker threads (0: available parallelism)");
    verify->add_option("--initial-bits", initial_bits, "Initial working precision");
    verify->add_option("--max-bits", max_bits, "Precision cap");
    add_format(verify, format);

    // ca
    auto* ca = app.add_subcommand("ca", "Colossally abundant numbers");
    std::string ca_limit;
    std::size_t ca_count = 0;
    auto* limit_opt = ca->add_option("--limit", ca_limit, "Largest value");
    auto* count_opt = ca->add_option("--count", ca_count, "Number of entries");
    limit_opt->excludes(count_opt);
    ca->add_option("--initial-bits", initial_bits, "Initial working precision");
    ca->add_option("--max-bits", max_bits, "Precision cap");
    add_format(ca, format);

    // records
    auto* rec = app.add_subcommand("records", "Superabundant or highly composite records");
    std::string rec_kind;
    std::string rec_limit;
    rec->add_option("--kind", rec_kind, "sa or hc")->required()->check(CLI::IsMember({"sa", "hc"}));
    rec->add_option("--limit", rec_limit, "Largest n")->required();
    add_format(rec, format);

    // lemmas
    auto* lemmas = app.add_subcommand("lemmas", "Check every lemma bound over its range");
    bool all = false;
    std::string lemmas_to;
    lemmas->add_flag("--all", all, "Every lemma")->required();
    lemmas->add_option("--to", lemmas_to, "Last n")->required();
    lemmas->add_option("--workers", workers, "Worker threads (0: available parallelism)");
    lemmas->add_option("--initial-bits", initial_bits, "Initial working precision");
    lemmas->add_option("--max-bits", max_bits, "Precision cap");
    add_format(lemmas, format);

    // stats
    auto* st = app.add_subcommand("stats", "Average-order and Mertens statistics");
    std::vector<std::string> bachmann;
    std::vector<std::string> mertens;
    st->add_option("--bachmann", bachmann, "n values for the divisor-sum average");
    st->add_option("--mertens", mertens, "x values for the Mertens product");
    add_format(st, format);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Compare the exponent formula with exhaustive search");
    std::string eps_text;
    std::string search_limit;
    oracle->add_option("--epsilon", eps_text, "u/v")->required();
    oracle->add_option("--search-limit", search_limit, "Largest k searched")->required();
    add_format(oracle, format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kExitUsage;
    }

    const Format fmt = to_format(format);
    try {
        if (*verify) {
            const std::uint64_t lo = parse_u64(from_text);
            const std::uint64_t hi = parse_u64(to_text);
            if (lo < 1 || lo > hi) {
                throw InputError("range must satisfy 1 <= from <= to");
            }
            const auto kind = *parse_criterion(criterion);
            const PrecisionBudget budget = make_budget(initial_bits, max_bits);
            SieveConfig config;
            config.workers = workers;
            Emitter emit(out, fmt, check_csv_header());
            const RangeReport report = verify_range(
                kind, lo, hi, config, [&](const CheckReport& r) { emit.row(to_csv_row(r), to_json(r)); }, budget);
            emit.finish();
            err << range_csv_header() << '\n' << to_csv_row(report) << '\n';
            Outcome outcome;
            outcome.violated = report.count(Verdict::Violated) > 0;
            outcome.undecided = report.count(Verdict::Undecided) > 0;
            return outcome.code();
        }
        if (*ca) {
            if (ca_limit.empty() && ca_count == 0) {
                throw InputError("ca needs --limit N or --count K");
            }
            const PrecisionBudget budget = make_budget(initial_bits, max_bits);
            Emitter emit(out, fmt, ca_csv_header());
            CaGenerator gen(budget);
            const mpz_class limit = ca_limit.empty() ? mpz_class(0) : parse_number(ca_limit);
            if (!ca_limit.empty() && limit < 2) {
                throw InputError("ca --limit must be at least 2");
            }
            std::size_t emitted = 0;
            while (true) {
                if (ca_limit.empty() && emitted >= ca_count) {
                    break;
                }
                CaEntry entry = gen.next();
                if (!ca_limit.empty() && entry.value > limit) {
                    break;
                }
                emit.row(to_csv_row(entry), to_json(entry));
                ++emitted;
            }
            emit.finish();
            err << "ca entries: " << emitted << '\n';
            return kExitOk;
        }
        if (*rec) {
            const std::uint64_t limit = parse_u64(rec_limit);
            const RecordKind kind = rec_kind == "sa" ? RecordKind::Superabundant : RecordKind::HighlyComposite;
            Emitter emit(out, fmt, record_csv_header());
            const auto entries = records(kind, limit);
            for (const auto& e : entries) {
                emit.row(to_csv_row(e), to_json(e));
            }
            emit.finish();
            err << "records: " << entries.size() << '\n';
            return kExitOk;
        }
        if (*lemmas) {
            const std::uint64_t hi = parse_u64(lemmas_to);
            const PrecisionBudget budget = make_budget(initial_bits, max_bits);
            SieveConfig config;
            config.workers = workers;
            Emitter emit(out, fmt, range_csv_header());
            Outcome outcome;
            for (const auto kind : kLemmaCriteria) {
                const std::uint64_t lo = valid_from(kind);
                if (hi < lo) {
                    err << to_string(kind) << ": range starts at " << lo << ", skipped\n";
                    continue;
                }
                const RangeReport report = verify_range(kind, lo, hi, config, {}, budget);
                emit.row(to_csv_row(report), to_json(report));
                outcome.violated = outcome.violated || report.count(Verdict::Violated) > 0;
                outcome.undecided = outcome.undecided || report.count(Verdict::Undecided) > 0;
            }
            emit.finish();
            return outcome.code();
        }
        if (*st) {
            if (bachmann.empty() && mertens.empty()) {
                throw InputError("stats needs --bachmann and/or --mertens values");
            }
            std::vector<std::uint64_t> ns;
            std::vector<std::uint64_t> xs;
            for (const auto& s : bachmann) {
                ns.push_back(parse_u64(s));
            }
            for (const auto& s : mertens) {
                xs.push_back(parse_u64(s));
            }
            const StatsReport report = stats(ns, xs);
            const auto rows = to_csv_rows(report);
            const auto json = to_json(report);
            Emitter emit(out, fmt, stats_csv_header());
            std::size_t i = 0;
            for (const auto& row : rows) {
                const auto& j = i < json["bachmann"].size() ? json["bachmann"][i]
                                                            : json["mertens"][i - json["bachmann"].size()];
                emit.row(row, j);
                ++i;
            }
            emit.finish();
            return kExitOk;
        }
        if (*oracle) {
            const Epsilon eps = Epsilon::parse(eps_text);
            const std::uint64_t limit = parse_u64(search_limit);
            if (limit < 1 || limit > std::numeric_limits<unsigned long>::max()) {
                throw InputError("search limit must be at least 1");
            }
            const Factorization formula = ca_for_epsilon(eps);
            const mpz_class found = brute_force_ca_oracle(eps, limit);
            const bool beyond = formula.value() > limit;
            const bool match = beyond || found == formula.value();
            Emitter emit(out, fmt, "epsilon,search_limit,formula_n,formula_factorization,oracle_n,match");
            std::ostringstream row;
            row << eps.to_string() << ',' << limit << ',' << formula.value().get_str() << ','
                << formula.to_string() << ',' << found.get_str() << ','
                << (beyond ? "beyond-limit" : match ? "yes" : "no");
            emit.row(row.str(), {{"epsilon", eps.to_string()},
                                 {"search_limit", limit},
                                 {"formula_n", formula.value().get_str()},
                                 {"formula_factorization", formula.to_string()},
                                 {"oracle_n", found.get_str()},
                                 {"match", beyond ? "beyond-limit" : match ? "yes" : "no"}});
            emit.finish();
            return match ? kExitOk : kExitViolated;
        }
    } catch (const FourExponentialsTie& e) {
        err << "undecided: " << e.what() << '\n';
        return kExitUndecided;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sigmacheck::cli
