#pragma once

// Radix-b digit arithmetic on exact integers. Positions are counted from the
// least-significant digit (position 0) and must exist in the canonical numeral;
// leading zeros are never addressable.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalous/bigint.hpp"

namespace anomalous {

class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class PositionError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class Radix {
  public:
    // Throws DomainError when b < 2.
    explicit Radix(std::uint64_t b);

    std::uint64_t value() const noexcept { return base_; }

    friend bool operator==(Radix, Radix) = default;
    friend auto operator<=>(Radix, Radix) = default;

  private:
    std::uint64_t base_;
};

struct DigitPosition {
    std::size_t index = 0;

    constexpr DigitPosition() = default;
    constexpr explicit DigitPosition(std::size_t i) : index(i) {}

    friend bool operator==(DigitPosition, DigitPosition) = default;
    friend auto operator<=>(DigitPosition, DigitPosition) = default;
};

// n = high * b^(i+1) + digit * b^i + low, with 0 <= low < b^i.
// high == 0 exactly when i is the most-significant position.
struct Decomposition {
    BigInt high;
    std::uint64_t digit = 0;
    BigInt low;
    DigitPosition position;
    Radix radix{10};

    BigInt reconstruct() const;
};

BigInt power(Radix b, std::size_t exponent);

// The unique d with b^(d-1) <= n < b^d. Throws DomainError for n <= 0.
std::size_t digit_count(const BigInt& n, Radix b);

std::uint64_t digit_at(const BigInt& n, Radix b, DigitPosition i);

// floor(n / b^(i+1)) * b^i + (n mod b^i). May be 0, and may have fewer
// significant digits than digit_count(n) - 1 when interior zeros surface.
BigInt remove_digit(const BigInt& n, Radix b, DigitPosition i);

Decomposition decompose(const BigInt& n, Radix b, DigitPosition i);

// Full expansion, least-significant digit first. Empty for n == 0.
std::vector<std::uint64_t> digits_of(const BigInt& n, Radix b);

// Numeral for n >= 0: glyphs 0-9 then A-Z up to base 36; larger bases render
// as ':'-separated decimal digit values, most-significant first.
std::string render(const BigInt& n, Radix b);

}  // namespace anomalous
