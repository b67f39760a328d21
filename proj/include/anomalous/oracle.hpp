#pragma once

// Exhaustive baseline: test every d1-digit numerator against every d2-digit
// denominator at every pair of digit positions. Uses only digit extraction and
// cross-multiplication on machine integers, so it shares no code path with the
// Diophantine solver it is used to check.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "anomalous/bigint.hpp"
#include "anomalous/digits.hpp"
#include "anomalous/solver.hpp"

namespace anomalous {

inline constexpr std::uint64_t kDefaultWorkCap = 100'000'000;

class WorkEstimateExceeded : public std::runtime_error {
  public:
    WorkEstimateExceeded(const std::string& what, BigInt estimate, BigInt cap)
        : std::runtime_error(what), estimate_(std::move(estimate)), cap_(std::move(cap)) {}

    const BigInt& estimate() const noexcept { return estimate_; }
    const BigInt& cap() const noexcept { return cap_; }

  private:
    BigInt estimate_;
    BigInt cap_;
};

struct OracleScope {
    Radix radix{10};
    std::size_t num_digits = 1;
    std::size_t den_digits = 1;
    RecordFilter filter;
    unsigned jobs = 1;
    std::uint64_t work_cap = kDefaultWorkCap;
};

// (b^d1 - b^(d1-1)) * (b^d2 - b^(d2-1))
BigInt pair_count(const OracleScope& scope);

// pair_count * d1 * d2 position checks.
BigInt work_estimate(const OracleScope& scope);

struct OracleStats {
    std::uint64_t pairs_examined = 0;
    std::uint64_t position_checks = 0;
};

// Sorted by (n, m, den_pos, num_pos). Throws WorkEstimateExceeded when the
// estimate is above scope.work_cap or the numerals do not fit in 64 bits.
std::vector<CancellationRecord> enumerate_all(const OracleScope& scope,
                                              OracleStats* stats = nullptr);

}  // namespace anomalous
