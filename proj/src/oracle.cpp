#include "anomalous/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace anomalous {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Numeral {
    u64 value = 0;
    // digits[i] and the value with digit i deleted, least-significant first.
    std::vector<u64> digits;
    std::vector<u64> without;
};

Numeral expand(u64 value, u64 base, std::size_t width) {
    Numeral out;
    out.value = value;
    out.digits.reserve(width);
    u64 rest = value;
    for (std::size_t i = 0; i < width; ++i) {
        out.digits.push_back(rest % base);
        rest /= base;
    }
    u64 scale = 1;
    out.without.reserve(width);
    for (std::size_t i = 0; i < width; ++i) {
        const u64 high = value / scale / base;
        const u64 low = value % scale;
        out.without.push_back(high * scale + low);
        scale *= base;
    }
    return out;
}

// Smallest and one-past-largest value with exactly `digits` digits.
bool digit_range(u64 base, std::size_t digits, u64& lo, u64& hi) {
    u64 p = 1;
    for (std::size_t i = 0; i + 1 < digits; ++i) {
        if (p > std::numeric_limits<u64>::max() / base) return false;
        p *= base;
    }
    lo = p;
    if (p > std::numeric_limits<u64>::max() / base) return false;
    hi = p * base;
    return true;
}

}  // namespace

BigInt pair_count(const OracleScope& scope) {
    const auto span = [&](std::size_t d) {
        return power(scope.radix, d) - power(scope.radix, d - 1);
    };
    return span(scope.num_digits) * span(scope.den_digits);
}

BigInt work_estimate(const OracleScope& scope) {
    return pair_count(scope) * scope.num_digits * scope.den_digits;
}

std::vector<CancellationRecord> enumerate_all(const OracleScope& scope, OracleStats* stats) {
    if (scope.num_digits == 0 || scope.den_digits == 0) {
        throw DomainError("oracle: digit counts must be at least 1");
    }
    const BigInt estimate = work_estimate(scope);
    if (estimate > scope.work_cap) {
        throw WorkEstimateExceeded("oracle scope needs " + to_decimal(estimate) +
                                       " position checks, cap is " +
                                       std::to_string(scope.work_cap),
                                   estimate, BigInt(scope.work_cap));
    }
    const u64 base = scope.radix.value();
    u64 m_lo, m_hi, n_lo, n_hi;
    if (!digit_range(base, scope.num_digits, m_lo, m_hi) ||
        !digit_range(base, scope.den_digits, n_lo, n_hi)) {
        throw WorkEstimateExceeded("oracle scope numerals exceed 64 bits", estimate,
                                   BigInt(scope.work_cap));
    }

    std::vector<Numeral> denominators;
    denominators.reserve(n_hi - n_lo);
    for (u64 n = n_lo; n < n_hi; ++n) denominators.push_back(expand(n, base, scope.den_digits));

    const unsigned jobs = std::max(1u, scope.jobs);
    std::atomic<u64> next{m_lo};
    constexpr u64 kChunk = 64;
    std::mutex merge_mutex;
    std::vector<CancellationRecord> merged;
    std::atomic<u64> checks{0};
    std::atomic<u64> pairs{0};

    auto worker = [&] {
        std::vector<CancellationRecord> local;
        u64 local_checks = 0;
        u64 local_pairs = 0;
        for (;;) {
            const u64 start = next.fetch_add(kChunk);
            if (start >= m_hi) break;
            const u64 stop = std::min(m_hi, start + kChunk);
            for (u64 m = start; m < stop; ++m) {
                const Numeral num = expand(m, base, scope.num_digits);
                local_pairs += denominators.size();
                for (const Numeral& den : denominators) {
                    for (std::size_t i2 = 0; i2 < scope.den_digits; ++i2) {
                        const u64 n_red = den.without[i2];
                        for (std::size_t i1 = 0; i1 < scope.num_digits; ++i1) {
                            ++local_checks;
                            if (num.digits[i1] != den.digits[i2]) continue;
                            const u64 m_red = num.without[i1];
                            if (n_red == 0 || m_red == 0) continue;
                            if (u128(m) * n_red != u128(m_red) * den.value) continue;

                            CancellationRecord rec;
                            rec.radix = scope.radix;
                            rec.numerator = m;
                            rec.denominator = den.value;
                            rec.num_pos = DigitPosition(i1);
                            rec.den_pos = DigitPosition(i2);
                            rec.digit = num.digits[i1];
                            rec.reduced_num = m_red;
                            rec.reduced_den = n_red;
                            rec.cls = classify(rec.numerator, rec.denominator, rec.digit);
                            if (scope.filter.admits(rec)) local.push_back(std::move(rec));
                        }
                    }
                }
            }
        }
        checks += local_checks;
        pairs += local_pairs;
        std::lock_guard lock(merge_mutex);
        std::move(local.begin(), local.end(), std::back_inserter(merged));
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return catalog_less(a, b); });

    if (stats) {
        stats->pairs_examined = pairs.load();
        stats->position_checks = checks.load();
    }
    return merged;
}

}  // namespace anomalous
