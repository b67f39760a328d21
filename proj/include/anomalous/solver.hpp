#pragma once

// Fixed-denominator search for anomalous cancellations: every numerator m
// whose digit at num_pos equals the denominator's digit at den_pos, such that
// deleting both digits leaves m/n unchanged.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "anomalous/bigint.hpp"
#include "anomalous/digits.hpp"
#include "anomalous/diophantine.hpp"

namespace anomalous {

class QueryError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A constructed solution failed re-verification. Always an implementation bug.
class VerificationFailure : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

enum class CancellationClass { nontrivial, trivial_equal, trivial_zero };

std::string_view to_string(CancellationClass cls);
std::optional<CancellationClass> parse_class(std::string_view text);

struct CancellationQuery {
    Radix radix;
    BigInt denominator;
    DigitPosition num_pos;
    DigitPosition den_pos;
};

// Throws QueryError unless den_pos exists in the denominator and deleting it
// leaves a positive value.
void validate(const CancellationQuery& q);

struct CancellationRecord {
    Radix radix{10};
    BigInt numerator;
    BigInt denominator;
    DigitPosition num_pos;
    DigitPosition den_pos;
    std::uint64_t digit = 0;
    BigInt reduced_num;  // m' after digit removal, not reduced to lowest terms
    BigInt reduced_den;  // n'
    CancellationClass cls = CancellationClass::nontrivial;

    friend bool operator==(const CancellationRecord&, const CancellationRecord&) = default;
};

// Catalog order: (denominator, numerator, den_pos, num_pos), then radix.
bool catalog_less(const CancellationRecord& lhs, const CancellationRecord& rhs);

// m = k * stride for every k >= 1 (the cancelled digit is 0 and the
// denominator has nothing below it).
struct InfiniteFamily {
    Radix radix{10};
    BigInt denominator;
    DigitPosition num_pos;
    DigitPosition den_pos;
    std::uint64_t digit = 0;
    BigInt stride;

    BigInt member(const BigInt& k) const { return k * stride; }

    friend bool operator==(const InfiniteFamily&, const InfiniteFamily&) = default;
};

bool catalog_less(const InfiniteFamily& lhs, const InfiniteFamily& rhs);

struct FiniteSolutions {
    std::vector<CancellationRecord> records;  // ascending by numerator
};

using SolutionSet = std::variant<FiniteSolutions, InfiniteFamily>;

struct RecordFilter {
    bool proper_only = false;
    bool nontrivial = true;
    bool trivial_equal = true;
    bool trivial_zero = true;

    static RecordFilter all() { return {}; }
    static RecordFilter nontrivial_only(bool proper) { return {proper, true, false, false}; }

    bool admits_class(CancellationClass cls) const;
    bool admits(const CancellationRecord& r) const;
};

CancellationClass classify(const BigInt& numerator, const BigInt& denominator,
                           std::uint64_t digit);

LinearEquation build_equation(const CancellationQuery& q);

SolutionSet solve_fixed_denominator(const CancellationQuery& q);

struct Verdict {
    bool valid = false;
    std::string reason;  // empty when valid
    std::optional<CancellationRecord> record;
};

// Total function: positions that do not exist, digit mismatches, zero
// reductions and ratio changes all come back as valid == false.
Verdict verify_cancellation(Radix b, const BigInt& m, const BigInt& n, DigitPosition num_pos,
                            DigitPosition den_pos);

}  // namespace anomalous
