#include "anomalous/digits.hpp"

#include <algorithm>

namespace anomalous {

namespace {

void require_positive(const BigInt& n, const char* op) {
    if (n <= 0) {
        throw DomainError(std::string(op) + ": expected a positive integer, got " +
                          to_decimal(n));
    }
}

void require_position(const BigInt& n, Radix b, DigitPosition i, const char* op) {
    require_positive(n, op);
    const std::size_t d = digit_count(n, b);
    if (i.index >= d) {
        throw PositionError(std::string(op) + ": position " + std::to_string(i.index) +
                            " does not exist in " + to_decimal(n) + " (base " +
                            std::to_string(b.value()) + ", " + std::to_string(d) +
                            " digits)");
    }
}

}  // namespace

Radix::Radix(std::uint64_t b) : base_(b) {
    if (b < 2) throw DomainError("radix must be at least 2, got " + std::to_string(b));
}

BigInt Decomposition::reconstruct() const {
    const BigInt scale = power(radix, position.index);
    return (high * radix.value() + digit) * scale + low;
}

BigInt power(Radix b, std::size_t exponent) {
    return boost::multiprecision::pow(BigInt(b.value()), static_cast<unsigned>(exponent));
}

std::size_t digit_count(const BigInt& n, Radix b) {
    require_positive(n, "digit_count");
    std::size_t d = 0;
    BigInt rest = n;
    const BigInt base = b.value();
    while (rest != 0) {
        rest /= base;
        ++d;
    }
    return d;
}

std::uint64_t digit_at(const BigInt& n, Radix b, DigitPosition i) {
    require_position(n, b, i, "digit_at");
    const BigInt shifted = n / power(b, i.index);
    return static_cast<std::uint64_t>(shifted % b.value());
}

BigInt remove_digit(const BigInt& n, Radix b, DigitPosition i) {
    require_position(n, b, i, "remove_digit");
    const BigInt scale = power(b, i.index);
    return n / (scale * b.value()) * scale + n % scale;
}

Decomposition decompose(const BigInt& n, Radix b, DigitPosition i) {
    require_position(n, b, i, "decompose");
    const BigInt scale = power(b, i.index);
    Decomposition out{.high = n / (scale * b.value()),
                      .digit = static_cast<std::uint64_t>((n / scale) % b.value()),
                      .low = n % scale,
                      .position = i,
                      .radix = b};
    return out;
}

std::vector<std::uint64_t> digits_of(const BigInt& n, Radix b) {
    if (n < 0) throw DomainError("digits_of: negative input " + to_decimal(n));
    std::vector<std::uint64_t> out;
    BigInt rest = n;
    const BigInt base = b.value();
    while (rest != 0) {
        BigInt q, r;
        boost::multiprecision::divide_qr(rest, base, q, r);
        out.push_back(static_cast<std::uint64_t>(r));
        rest = std::move(q);
    }
    return out;
}

std::string render(const BigInt& n, Radix b) {
    if (n == 0) return "0";
    auto digits = digits_of(n, b);
    std::reverse(digits.begin(), digits.end());
    std::string out;
    if (b.value() <= 36) {
        static constexpr char kGlyphs[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
        for (auto d : digits) out.push_back(kGlyphs[d]);
        return out;
    }
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (k) out.push_back(':');
        out += std::to_string(digits[k]);
    }
    return out;
}

}  // namespace anomalous
