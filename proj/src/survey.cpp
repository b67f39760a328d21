#include "anomalous/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace anomalous {

namespace {

struct SweepChunkResult {
    std::vector<CancellationRecord> records;
    std::vector<InfiniteFamily> families;
    std::uint64_t skipped = 0;
};

void sweep_denominator(const SweepPlan& plan, std::size_t num_pos_max, const BigInt& n,
                       SweepChunkResult& out) {
    const std::size_t width = digit_count(n, plan.radix);
    for (std::size_t i2 = 0; i2 < width; ++i2) {
        const DigitPosition den_pos(i2);
        if (remove_digit(n, plan.radix, den_pos) == 0) {
            out.skipped += num_pos_max + 1;
            continue;
        }
        for (std::size_t i1 = 0; i1 <= num_pos_max; ++i1) {
            const CancellationQuery q{plan.radix, n, DigitPosition(i1), den_pos};
            SolutionSet result = solve_fixed_denominator(q);
            if (auto* finite = std::get_if<FiniteSolutions>(&result)) {
                for (auto& rec : finite->records) {
                    if (plan.filter.admits(rec)) out.records.push_back(std::move(rec));
                }
            } else if (plan.include_infinite) {
                out.families.push_back(std::get<InfiniteFamily>(std::move(result)));
            }
        }
    }
}

}  // namespace

Catalog sweep(const SweepPlan& plan) {
    if (plan.den_min < 1) throw QueryError("sweep: den_min must be at least 1");
    if (plan.den_min > plan.den_max) throw QueryError("sweep: den_min exceeds den_max");
    const BigInt span = plan.den_max - plan.den_min + 1;
    if (span > std::numeric_limits<std::uint64_t>::max()) {
        throw QueryError("sweep: denominator range too large");
    }
    const auto count = static_cast<std::uint64_t>(span);
    const std::size_t num_pos_max =
        plan.num_pos_max.value_or(digit_count(plan.den_max, plan.radix) - 1);

    Catalog catalog;
    catalog.header = CatalogHeader{plan.radix,        plan.den_min,         plan.den_max,
                                   num_pos_max,       plan.filter,          plan.include_infinite,
                                   kToolVersion};

    constexpr std::uint64_t kChunk = 32;
    std::atomic<std::uint64_t> next{0};
    std::mutex merge_mutex;
    SweepChunkResult merged;
    std::exception_ptr failure;

    auto worker = [&] {
        SweepChunkResult local;
        try {
            for (;;) {
                const std::uint64_t start = next.fetch_add(kChunk);
                if (start >= count) break;
                const std::uint64_t stop = std::min(count, start + kChunk);
                for (std::uint64_t k = start; k < stop; ++k) {
                    sweep_denominator(plan, num_pos_max, plan.den_min + k, local);
                }
            }
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
            return;
        }
        std::lock_guard lock(merge_mutex);
        std::move(local.records.begin(), local.records.end(), std::back_inserter(merged.records));
        std::move(local.families.begin(), local.families.end(),
                  std::back_inserter(merged.families));
        merged.skipped += local.skipped;
    };

    const unsigned jobs = std::max(1u, plan.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    auto by_catalog = [](const auto& a, const auto& b) { return catalog_less(a, b); };
    std::sort(merged.records.begin(), merged.records.end(), by_catalog);
    merged.records.erase(std::unique(merged.records.begin(), merged.records.end()),
                         merged.records.end());
    std::sort(merged.families.begin(), merged.families.end(), by_catalog);

    catalog.records = std::move(merged.records);
    catalog.families = std::move(merged.families);
    catalog.skipped_queries = merged.skipped;
    return catalog;
}

std::vector<Catalog> boas_table(Radix b_min, Radix b_max, std::size_t digits,
                                std::uint64_t work_cap, unsigned jobs) {
    if (b_min > b_max) throw QueryError("boas_table: base range is empty");
    if (digits < 2) throw QueryError("boas_table: digit count must be at least 2");

    BigInt queries = 0;
    for (std::uint64_t b = b_min.value(); b <= b_max.value(); ++b) {
        const Radix r(b);
        queries += (power(r, digits) - power(r, digits - 1)) * digits * digits;
    }
    if (queries > work_cap) {
        throw WorkEstimateExceeded("table needs " + to_decimal(queries) +
                                       " solver queries, cap is " + std::to_string(work_cap),
                                   queries, BigInt(work_cap));
    }

    std::vector<Catalog> out;
    for (std::uint64_t b = b_min.value(); b <= b_max.value(); ++b) {
        const Radix r(b);
        SweepPlan plan;
        plan.radix = r;
        plan.den_min = power(r, digits - 1);
        plan.den_max = power(r, digits) - 1;
        plan.num_pos_max = digits - 1;
        plan.filter = RecordFilter::nontrivial_only(true);
        plan.jobs = jobs;
        Catalog cat = sweep(plan);
        std::erase_if(cat.records, [&](const CancellationRecord& rec) {
            return digit_count(rec.numerator, r) != digits;
        });
        out.push_back(std::move(cat));
    }
    return out;
}

namespace {

std::string describe_record(const CancellationRecord& r) {
    return "base " + std::to_string(r.radix.value()) + " m=" + to_decimal(r.numerator) +
           " n=" + to_decimal(r.denominator) + " i1=" + std::to_string(r.num_pos.index) +
           " i2=" + std::to_string(r.den_pos.index);
}

}  // namespace

SelftestReport selftest(Radix b_max, std::size_t den_digit_max, unsigned jobs,
                        std::uint64_t work_cap) {
    SelftestReport report;
    for (std::uint64_t b = 2; b <= b_max.value(); ++b) {
        const Radix r(b);
        for (std::size_t d2 = 1; d2 <= den_digit_max; ++d2) {
            SweepPlan plan;
            plan.radix = r;
            plan.den_min = power(r, d2 - 1);
            plan.den_max = power(r, d2) - 1;
            plan.num_pos_max = den_digit_max - 1;
            plan.include_infinite = true;
            plan.jobs = jobs;
            const Catalog fast = sweep(plan);

            for (std::size_t d1 = 1; d1 <= den_digit_max; ++d1) {
                const BigInt m_lo = power(r, d1 - 1);
                const BigInt m_hi = power(r, d1) - 1;

                std::vector<CancellationRecord> solver_side;
                for (const auto& rec : fast.records) {
                    if (rec.numerator >= m_lo && rec.numerator <= m_hi) solver_side.push_back(rec);
                }
                for (const auto& fam : fast.families) {
                    for (BigInt m = ceil_div(m_lo, fam.stride) * fam.stride; m <= m_hi;
                         m += fam.stride) {
                        Verdict v = verify_cancellation(r, m, fam.denominator, fam.num_pos,
                                                        fam.den_pos);
                        if (!v.valid) {
                            report.details.push_back("family member fails verification: " +
                                                     to_decimal(m) + "/" +
                                                     to_decimal(fam.denominator));
                            ++report.mismatches;
                            continue;
                        }
                        solver_side.push_back(std::move(*v.record));
                    }
                }
                std::sort(solver_side.begin(), solver_side.end(),
                          [](const auto& x, const auto& y) { return catalog_less(x, y); });

                OracleScope scope;
                scope.radix = r;
                scope.num_digits = d1;
                scope.den_digits = d2;
                scope.jobs = jobs;
                scope.work_cap = work_cap;
                const auto truth = enumerate_all(scope);
                ++report.scopes_checked;

                std::size_t i = 0, j = 0;
                auto flag = [&](std::string what) {
                    report.details.push_back(std::move(what));
                    ++report.mismatches;
                };
                while (i < solver_side.size() || j < truth.size()) {
                    if (j == truth.size() ||
                        (i < solver_side.size() && catalog_less(solver_side[i], truth[j]))) {
                        flag("solver only: " + describe_record(solver_side[i++]));
                    } else if (i == solver_side.size() || catalog_less(truth[j], solver_side[i])) {
                        flag("oracle only: " + describe_record(truth[j++]));
                    } else {
                        if (!(solver_side[i] == truth[j])) {
                            flag("field mismatch: " + describe_record(truth[j]));
                        }
                        ++i;
                        ++j;
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace anomalous
