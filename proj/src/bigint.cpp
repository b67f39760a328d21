#include "anomalous/bigint.hpp"

#include <stdexcept>

namespace anomalous {

std::optional<BigInt> parse_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;
    BigInt value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') return std::nullopt;
        value *= 10;
        value += ch - '0';
    }
    if (negative) value = -value;
    return value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("floor_div: division by zero");
    BigInt q = num / den;  // truncates toward zero
    BigInt r = num - q * den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ceil_div: division by zero");
    BigInt q = num / den;
    BigInt r = num - q * den;
    if (r != 0 && ((r < 0) == (den < 0))) ++q;
    return q;
}

}  // namespace anomalous
