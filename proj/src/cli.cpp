#include "anomalous/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "anomalous/export.hpp"
#include "anomalous/oracle.hpp"
#include "anomalous/solver.hpp"
#include "anomalous/survey.hpp"

namespace anomalous::cli {

namespace {

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Every numeric flag is a plain base-ten integer, whatever --base says.
std::uint64_t to_u64(const std::string& flag, const std::string& text) {
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw UsageError(flag + ": expected a nonnegative base-ten integer, got '" + text + "'");
    }
    return value;
}

BigInt to_big(const std::string& flag, const std::string& text) {
    auto parsed = parse_decimal(text);
    if (!parsed) throw UsageError(flag + ": expected a base-ten integer, got '" + text + "'");
    return *parsed;
}

unsigned to_jobs(const std::string& text) {
    const auto jobs = to_u64("--jobs", text);
    if (jobs == 0 || jobs > 1024) throw UsageError("--jobs: expected 1..1024, got " + text);
    return static_cast<unsigned>(jobs);
}

ExportFormat to_format(const std::string& text) {
    auto f = parse_format(text);
    if (!f) throw UsageError("--format: expected jsonl, csv or text, got '" + text + "'");
    return *f;
}

RecordFilter make_filter(bool proper_only, bool nontrivial_only) {
    RecordFilter filter;
    filter.proper_only = proper_only;
    if (nontrivial_only) filter.trivial_equal = filter.trivial_zero = false;
    return filter;
}

struct Options {
    std::string base = "10", den, num, num_pos, den_pos;
    std::string num_digits, den_digits, den_min, den_max, num_pos_max;
    std::string base_min, base_max, digits;
    std::string format = "jsonl", check_format = "text", out_path;
    std::string jobs = "1", max_work = std::to_string(kDefaultWorkCap);
    bool include_trivial = false, proper_only = false, nontrivial_only = false;
    bool include_infinite = false;
};

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const CancellationQuery q{Radix(to_u64("--base", o.base)), to_big("--den", o.den),
                              DigitPosition(to_u64("--num-pos", o.num_pos)),
                              DigitPosition(to_u64("--den-pos", o.den_pos))};
    const auto format = to_format(o.format);
    SolutionSet result = solve_fixed_denominator(q);

    Catalog catalog;
    catalog.header.radix = q.radix;
    catalog.header.den_min = catalog.header.den_max = q.denominator;
    catalog.header.num_pos_max = q.num_pos.index;
    catalog.header.filter = o.include_trivial ? RecordFilter::all()
                                              : RecordFilter::nontrivial_only(false);
    if (auto* finite = std::get_if<FiniteSolutions>(&result)) {
        for (auto& rec : finite->records) {
            if (catalog.header.filter.admits(rec)) catalog.records.push_back(std::move(rec));
        }
    } else if (o.include_trivial) {
        catalog.families.push_back(std::get<InfiniteFamily>(std::move(result)));
    } else {
        err << "note: every numerator k*" << to_decimal(std::get<InfiniteFamily>(result).stride)
            << " works (trivial_zero family); pass --include-trivial to emit it\n";
    }
    export_catalog(catalog, format, out);
    return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Radix radix(to_u64("--base", o.base));
    const BigInt m = to_big("--num", o.num);
    const BigInt n = to_big("--den", o.den);
    const Verdict v = verify_cancellation(radix, m, n, DigitPosition(to_u64("--num-pos", o.num_pos)),
                                          DigitPosition(to_u64("--den-pos", o.den_pos)));
    if (o.check_format == "jsonl") {
        if (v.valid) {
            out << to_jsonl(*v.record) << '\n';
        } else {
            out << nlohmann::json{{"valid", false}, {"reason", v.reason}}.dump() << '\n';
        }
    } else if (o.check_format == "text") {
        if (v.valid) {
            out << "valid: " << to_string(v.record->cls) << '\n';
        } else {
            out << "invalid: " << v.reason << '\n';
        }
    } else {
        throw UsageError("--format: check supports text or jsonl");
    }
    return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    OracleScope scope;
    scope.radix = Radix(to_u64("--base", o.base));
    scope.num_digits = to_u64("--num-digits", o.num_digits);
    scope.den_digits = to_u64("--den-digits", o.den_digits);
    if (scope.num_digits == 0 || scope.den_digits == 0) {
        throw UsageError("--num-digits/--den-digits must be at least 1");
    }
    scope.filter = make_filter(o.proper_only, o.nontrivial_only);
    scope.jobs = to_jobs(o.jobs);
    scope.work_cap = to_u64("--max-work", o.max_work);
    const auto format = to_format(o.format);

    Catalog catalog;
    catalog.header.radix = scope.radix;
    catalog.header.filter = scope.filter;
    catalog.records = enumerate_all(scope);
    export_catalog(catalog, format, out);
    return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    SweepPlan plan;
    plan.radix = Radix(to_u64("--base", o.base));
    plan.den_min = to_big("--den-min", o.den_min);
    plan.den_max = to_big("--den-max", o.den_max);
    if (!o.num_pos_max.empty()) plan.num_pos_max = to_u64("--num-pos-max", o.num_pos_max);
    plan.filter = make_filter(o.proper_only, o.nontrivial_only);
    plan.include_infinite = o.include_infinite;
    plan.jobs = to_jobs(o.jobs);
    const auto format = to_format(o.format);

    const Catalog catalog = sweep(plan);
    if (o.out_path.empty()) {
        export_catalog(catalog, format, out);
    } else {
        std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("--out: cannot open '" + o.out_path + "' for writing");
        export_catalog(catalog, format, file);
    }
    return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Radix lo(to_u64("--base-min", o.base_min));
    const Radix hi(to_u64("--base-max", o.base_max));
    const auto digits = to_u64("--digits", o.digits);
    const auto tables =
        boas_table(lo, hi, digits, to_u64("--max-work", o.max_work), to_jobs(o.jobs));
    for (std::size_t k = 0; k < tables.size(); ++k) {
        if (k) out << '\n';
        export_catalog(tables[k], ExportFormat::text, out);
    }
    return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    const Radix b_max(to_u64("--base-max", o.base_max));
    const auto digits = to_u64("--den-digits", o.den_digits);
    if (digits == 0) throw UsageError("--den-digits must be at least 1");
    const auto report = selftest(b_max, digits, to_jobs(o.jobs), to_u64("--max-work", o.max_work));
    out << "scopes checked: " << report.scopes_checked << '\n';
    out << "mismatches: " << report.mismatches << '\n';
    for (const auto& line : report.details) out << "  " << line << '\n';
    return report.mismatches == 0 ? kOk : kVerificationFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Find, verify and catalog anomalous cancellations in any radix", "anomalous"};
    app.require_subcommand(1);
    Options o;

    auto jobs_option = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "Worker threads (default from AC_JOBS, else 1)")
            ->envname("AC_JOBS");
    };

    auto* solve = app.add_subcommand("solve", "All numerators for a fixed denominator and positions");
    solve->add_option("--base", o.base, "Radix (default 10)");
    solve->add_option("--den", o.den, "Denominator, base ten")->required();
    solve->add_option("--num-pos", o.num_pos, "Numerator digit position (0 = units)")->required();
    solve->add_option("--den-pos", o.den_pos, "Denominator digit position (0 = units)")->required();
    solve->add_flag("--include-trivial", o.include_trivial, "Keep trivial_equal/trivial_zero results");
    solve->add_option("--format", o.format, "jsonl | csv | text");

    auto* check = app.add_subcommand("check", "Verify one cancellation");
    check->add_option("--base", o.base, "Radix (default 10)");
    check->add_option("--num", o.num, "Numerator, base ten")->required();
    check->add_option("--den", o.den, "Denominator, base ten")->required();
    check->add_option("--num-pos", o.num_pos, "Numerator digit position")->required();
    check->add_option("--den-pos", o.den_pos, "Denominator digit position")->required();
    check->add_option("--format", o.check_format, "text | jsonl");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search over d1-digit/d2-digit fractions");
    oracle->add_option("--base", o.base, "Radix (default 10)");
    oracle->add_option("--num-digits", o.num_digits, "Numerator digit count")->required();
    oracle->add_option("--den-digits", o.den_digits, "Denominator digit count")->required();
    oracle->add_flag("--proper-only", o.proper_only, "Only m < n");
    oracle->add_flag("--nontrivial-only", o.nontrivial_only, "Only nontrivial records");
    oracle->add_option("--format", o.format, "jsonl | csv | text");
    oracle->add_option("--max-work", o.max_work, "Refuse above this many position checks");
    jobs_option(oracle);

    auto* sweep_cmd = app.add_subcommand("sweep", "Catalog every denominator in a range");
    sweep_cmd->add_option("--base", o.base, "Radix (default 10)");
    sweep_cmd->add_option("--den-min", o.den_min, "Smallest denominator, base ten")->required();
    sweep_cmd->add_option("--den-max", o.den_max, "Largest denominator, base ten")->required();
    sweep_cmd->add_option("--num-pos-max", o.num_pos_max,
                          "Highest numerator position (default: digits of den-max minus 1)");
    sweep_cmd->add_flag("--proper-only", o.proper_only, "Only m < n");
    sweep_cmd->add_flag("--nontrivial-only", o.nontrivial_only, "Only nontrivial records");
    sweep_cmd->add_flag("--include-infinite", o.include_infinite, "Emit infinite families");
    sweep_cmd->add_option("--format", o.format, "jsonl | csv | text");
    sweep_cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
    jobs_option(sweep_cmd);

    auto* table = app.add_subcommand("table", "Proper nontrivial d-digit tables for a range of bases");
    table->add_option("--base-min", o.base_min, "First base")->required();
    table->add_option("--base-max", o.base_max, "Last base")->required();
    table->add_option("--digits", o.digits, "Digits in numerator and denominator")->required();
    table->add_option("--max-work", o.max_work, "Refuse above this many solver queries");
    jobs_option(table);

    auto* self = app.add_subcommand("selftest", "Cross-check the solver against the oracle");
    self->add_option("--base-max", o.base_max, "Check bases 2..B")->required();
    self->add_option("--den-digits", o.den_digits, "Digit counts 1..D")->required();
    self->add_option("--max-work", o.max_work, "Oracle work cap per scope");
    jobs_option(self);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kInvalidArguments;
    }

    try {
        if (*solve) return cmd_solve(o, out, err);
        if (*check) return cmd_check(o, out);
        if (*oracle) return cmd_oracle(o, out);
        if (*sweep_cmd) return cmd_sweep(o, out);
        if (*table) return cmd_table(o, out);
        if (*self) return cmd_selftest(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const QueryError& e) {
        err << "invalid query: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const DomainError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const PositionError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const VerificationFailure& e) {
        err << "internal verification failure: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const ContractViolation& e) {
        err << "internal verification failure: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const WorkEstimateExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kWorkRefused;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    }
    return kInvalidArguments;
}

}  // namespace anomalous::cli
