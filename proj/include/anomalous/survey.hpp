#pragma once

// Catalog generation: sweep every (n, num_pos, den_pos) over a denominator
// range with the fixed-denominator solver, and cross-check against the oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anomalous/bigint.hpp"
#include "anomalous/digits.hpp"
#include "anomalous/oracle.hpp"
#include "anomalous/solver.hpp"

namespace anomalous {

inline constexpr const char* kToolVersion = "0.1.0";

struct SweepPlan {
    Radix radix{10};
    BigInt den_min = 1;
    BigInt den_max = 1;
    // Highest numerator position tried; defaults to digit_count(den_max) - 1.
    std::optional<std::size_t> num_pos_max;
    RecordFilter filter;
    bool include_infinite = false;
    unsigned jobs = 1;
};

struct CatalogHeader {
    Radix radix{10};
    BigInt den_min = 1;
    BigInt den_max = 1;
    std::size_t num_pos_max = 0;
    RecordFilter filter;
    bool include_infinite = false;
    std::string tool_version = kToolVersion;
};

struct Catalog {
    CatalogHeader header;
    std::vector<CancellationRecord> records;  // catalog_less order, no duplicates
    std::vector<InfiniteFamily> families;     // catalog_less order
    std::uint64_t skipped_queries = 0;        // work items whose reduced denominator is 0
};

// Output depends only on the plan, never on plan.jobs or thread scheduling.
// Throws QueryError for den_min < 1 or den_min > den_max.
Catalog sweep(const SweepPlan& plan);

// Proper nontrivial d-digit over d-digit cancellations for each base in
// [b_min, b_max]. Throws WorkEstimateExceeded when the total number of solver
// queries exceeds work_cap.
std::vector<Catalog> boas_table(Radix b_min, Radix b_max, std::size_t digits,
                                std::uint64_t work_cap = kDefaultWorkCap, unsigned jobs = 1);

struct SelftestReport {
    std::size_t scopes_checked = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> details;  // one line per mismatching record
};

// For every base 2..b_max and numerator/denominator digit counts 1..den_digit_max,
// compares solver output (numerators restricted to the oracle's digit count,
// infinite families expanded inside that range) with enumerate_all.
SelftestReport selftest(Radix b_max, std::size_t den_digit_max, unsigned jobs = 1,
                        std::uint64_t work_cap = kDefaultWorkCap);

}  // namespace anomalous
