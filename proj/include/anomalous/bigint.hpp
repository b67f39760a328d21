#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace anomalous {

// Exact, unbounded signed integer used for every numerator, denominator and
// equation coefficient.
using BigInt = boost::multiprecision::cpp_int;

// Strict base-ten parse: optional leading '-', then one or more ASCII digits.
// No whitespace, no '+', no radix prefixes.
std::optional<BigInt> parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

// Floor and ceiling of num/den with den != 0, rounding toward -inf / +inf.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

}  // namespace anomalous
