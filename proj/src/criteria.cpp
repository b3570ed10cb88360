#include "sigmacheck/criteria.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sigmacheck/error.hpp"

namespace sigmacheck {

namespace {

struct KindInfo {
    CriterionKind kind;
    std::string_view name;
    unsigned long valid_from;
    bool sigma;
    bool harmonic;
};

constexpr KindInfo kKinds[] = {
    {CriterionKind::Lagarias101, "lagarias", 1, true, true},
    {CriterionKind::Robin102, "robin", 5041, true, false},
    {CriterionKind::RobinUnconditional202a, "robin-unconditional", 3, true, false},
    {CriterionKind::Lemma203, "lemma203", 3, false, true},
    {CriterionKind::Bound204, "bound204", 1, false, true},
    {CriterionKind::Lemma206, "lemma206", 20, false, true},
    {CriterionKind::Bound207, "bound207", 3, false, true},
    {CriterionKind::Bound210, "bound210", 1, false, true},
};

const KindInfo& info(CriterionKind kind)
{
    for (const auto& k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw InputError("unknown criterion kind");
}

constexpr std::pair<Verdict, std::string_view> kVerdictNames[] = {
    {Verdict::StrictHolds, "strict-holds"},
    {Verdict::Equality, "equality"},
    {Verdict::Violated, "violated"},
    {Verdict::Undecided, "undecided"},
};

IntervalReal enclose(const RealExpr& e, long bits)
{
    if (const auto& exact = e.exact_value()) {
        return IntervalReal::from_rational(*exact, bits);
    }
    return e.eval(bits);
}

std::vector<std::string> split_csv(std::string_view line)
{
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r' && c != '\n') {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

}  // namespace

std::string_view to_string(CriterionKind kind) { return info(kind).name; }

std::optional<CriterionKind> parse_criterion(std::string_view name)
{
    for (const auto& k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    return std::nullopt;
}

unsigned long valid_from(CriterionKind kind) { return info(kind).valid_from; }
bool needs_sigma(CriterionKind kind) { return info(kind).sigma; }
bool needs_harmonic(CriterionKind kind) { return info(kind).harmonic; }

Relation relation(CriterionKind kind)
{
    return kind == CriterionKind::Lemma203 || kind == CriterionKind::Bound204 ? Relation::AtLeast
                                                                               : Relation::AtMost;
}

std::string_view to_string(Verdict verdict)
{
    for (const auto& [v, name] : kVerdictNames) {
        if (v == verdict) {
            return name;
        }
    }
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view name)
{
    for (const auto& [v, text] : kVerdictNames) {
        if (text == name) {
            return v;
        }
    }
    return std::nullopt;
}

CheckReport check_with_sigma(CriterionKind kind, const mpz_class& n, const mpz_class& sigma_n,
                             const PrecisionBudget& budget, unsigned long harmonic_cutoff)
{
    if (sgn(n) <= 0) {
        throw InputError("criteria are defined for n >= 1, got " + n.get_str());
    }
    budget.validate();

    const CriterionInputs<RealExpr> inputs{
        RealExpr::integer(n),
        RealExpr::integer(sigma_n),
        needs_harmonic(kind) ? harmonic_expr(n, harmonic_cutoff) : RealExpr(0),
        exp(RealExpr::gamma()),
        RealExpr(1),
    };
    const std::vector<RealExpr> terms =
        criterion_terms(kind, inputs, [](const mpq_class& q) { return RealExpr::rational(q); });

    // Every link t[i] R t[i+1] must hold; the weakest link decides the verdict.
    const Ordering holds = relation(kind) == Relation::AtMost ? Ordering::Less : Ordering::Greater;
    Verdict verdict = Verdict::StrictHolds;
    std::size_t reported_link = terms.size();
    long bits_used = budget.initial_bits;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        const ComparisonTrace trace = compare_adaptive_traced(terms[i], terms[i + 1], budget);
        bits_used = std::max(bits_used, trace.bits);
        const Ordering ord = trace.result.ordering;
        if (ord == holds) {
            continue;
        }
        if (ord == Ordering::ProvenEqual) {
            if (verdict == Verdict::StrictHolds) {
                verdict = Verdict::Equality;
            }
        } else if (ord == Ordering::Undecided) {
            if (verdict != Verdict::Violated) {
                verdict = Verdict::Undecided;
                reported_link = i;
            }
        } else {
            verdict = Verdict::Violated;
            reported_link = i;
            break;
        }
    }

    const RealExpr& left = reported_link < terms.size() ? terms[reported_link] : terms.front();
    const RealExpr& right = reported_link < terms.size() ? terms[reported_link + 1] : terms.back();
    CheckReport report;
    report.n = n;
    report.kind = kind;
    report.verdict = verdict;
    report.lhs = enclose(left, bits_used);
    report.rhs = enclose(right, bits_used);
    report.precision_used = bits_used;
    report.in_range = n >= valid_from(kind);
    return report;
}

CheckReport check(CriterionKind kind, const Factorization& f, const PrecisionBudget& budget,
                  unsigned long harmonic_cutoff)
{
    return check_with_sigma(kind, f.value(), needs_sigma(kind) ? sigma(f) : mpz_class(0), budget,
                            harmonic_cutoff);
}

CheckReport check(CriterionKind kind, const mpz_class& n, const PrecisionBudget& budget,
                  unsigned long harmonic_cutoff)
{
    if (sgn(n) <= 0) {
        throw InputError("criteria are defined for n >= 1, got " + n.get_str());
    }
    if (!needs_sigma(kind)) {
        return check_with_sigma(kind, n, 0, budget, harmonic_cutoff);
    }
    return check(kind, factorize(n), budget, harmonic_cutoff);
}

IntervalReal lagarias_rhs(const mpz_class& n, long bits, unsigned long harmonic_cutoff)
{
    if (sgn(n) <= 0) {
        throw InputError("lagarias_rhs requires n >= 1");
    }
    const RealExpr h = harmonic_expr(n, harmonic_cutoff);
    return enclose(h + exp(h) * log(h), bits);
}

IntervalReal gronwall_ratio(const Factorization& f, long bits)
{
    const mpz_class n = f.value();
    if (n <= 2) {
        throw DomainError("gronwall_ratio requires n >= 3 so that log log n > 0");
    }
    const RealExpr nn = RealExpr::integer(n);
    return (RealExpr::integer(sigma(f)) / (nn * log(log(nn)))).eval(bits);
}

IntervalReal lemma206_combined_bound(const mpz_class& n, long bits)
{
    if (n < 3) {
        throw DomainError("combined bound requires n >= 3");
    }
    const RealExpr nn = RealExpr::integer(n);
    const RealExpr one(1);
    const RealExpr h_upper = log(nn) + one;
    const RealExpr exp_h_upper = exp(RealExpr::gamma()) * nn * (one + RealExpr(2) / nn);
    const RealExpr log_h_upper = log(log(nn)) + one / log(nn + one);
    return (h_upper + exp_h_upper * log_h_upper).eval(bits);
}

mpq_class CheckRow::endpoint_value(std::size_t i) const { return decimal_to_rational(endpoints.at(i)); }

CheckRow to_row(const CheckReport& report)
{
    return CheckRow{report.n,
                    report.kind,
                    report.verdict,
                    {to_decimal(report.lhs.lo(), 20, Rounding::Down), to_decimal(report.lhs.hi(), 20, Rounding::Up),
                     to_decimal(report.rhs.lo(), 20, Rounding::Down), to_decimal(report.rhs.hi(), 20, Rounding::Up)},
                    report.precision_used};
}

std::string check_csv_header() { return "n,kind,verdict,lhs_lo,lhs_hi,rhs_lo,rhs_hi,bits"; }

std::string to_csv_row(const CheckRow& row)
{
    std::ostringstream os;
    os << row.n.get_str() << ',' << to_string(row.kind) << ',' << to_string(row.verdict);
    for (const auto& e : row.endpoints) {
        os << ',' << e;
    }
    os << ',' << row.bits;
    return os.str();
}

CheckRow parse_check_csv_row(std::string_view line)
{
    const auto fields = split_csv(line);
    if (fields.size() != 8) {
        throw InputError("check row needs 8 fields, got " + std::to_string(fields.size()));
    }
    CheckRow row;
    if (row.n.set_str(fields[0], 10) != 0 || sgn(row.n) <= 0) {
        throw InputError("bad n field '" + fields[0] + "'");
    }
    const auto kind = parse_criterion(fields[1]);
    const auto verdict = parse_verdict(fields[2]);
    if (!kind || !verdict) {
        throw InputError("bad kind or verdict in row");
    }
    row.kind = *kind;
    row.verdict = *verdict;
    for (std::size_t i = 0; i < 4; ++i) {
        decimal_to_rational(fields[3 + i]);  // validates
        row.endpoints[i] = fields[3 + i];
    }
    try {
        std::size_t used = 0;
        row.bits = std::stol(fields[7], &used);
        if (used != fields[7].size()) {
            throw InputError("trailing characters");
        }
    } catch (const std::exception&) {
        throw InputError("bad bits field '" + fields[7] + "'");
    }
    return row;
}

nlohmann::json to_json(const CheckReport& report)
{
    const CheckRow row = to_row(report);
    return {
        {"n", row.n.get_str()},
        {"kind", std::string(to_string(row.kind))},
        {"verdict", std::string(to_string(row.verdict))},
        {"lhs", {row.endpoints[0], row.endpoints[1]}},
        {"rhs", {row.endpoints[2], row.endpoints[3]}},
        {"bits", row.bits},
        {"in_range", report.in_range},
    };
}

}  // namespace sigmacheck
