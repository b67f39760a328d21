#include "anomalous/solver.hpp"

#include <algorithm>
#include <tuple>

namespace anomalous {

namespace {

std::string describe(const CancellationQuery& q) {
    return "(base " + std::to_string(q.radix.value()) + ", denominator " +
           to_decimal(q.denominator) + ", num_pos " + std::to_string(q.num_pos.index) +
           ", den_pos " + std::to_string(q.den_pos.index) + ")";
}

}  // namespace

std::string_view to_string(CancellationClass cls) {
    switch (cls) {
        case CancellationClass::nontrivial: return "nontrivial";
        case CancellationClass::trivial_equal: return "trivial_equal";
        case CancellationClass::trivial_zero: return "trivial_zero";
    }
    return "?";
}

std::optional<CancellationClass> parse_class(std::string_view text) {
    if (text == "nontrivial") return CancellationClass::nontrivial;
    if (text == "trivial_equal") return CancellationClass::trivial_equal;
    if (text == "trivial_zero") return CancellationClass::trivial_zero;
    return std::nullopt;
}

bool catalog_less(const CancellationRecord& lhs, const CancellationRecord& rhs) {
    return std::tie(lhs.denominator, lhs.numerator, lhs.den_pos, lhs.num_pos, lhs.radix) <
           std::tie(rhs.denominator, rhs.numerator, rhs.den_pos, rhs.num_pos, rhs.radix);
}

bool catalog_less(const InfiniteFamily& lhs, const InfiniteFamily& rhs) {
    return std::tie(lhs.denominator, lhs.den_pos, lhs.num_pos, lhs.radix) <
           std::tie(rhs.denominator, rhs.den_pos, rhs.num_pos, rhs.radix);
}

bool RecordFilter::admits_class(CancellationClass cls) const {
    switch (cls) {
        case CancellationClass::nontrivial: return nontrivial;
        case CancellationClass::trivial_equal: return trivial_equal;
        case CancellationClass::trivial_zero: return trivial_zero;
    }
    return false;
}

bool RecordFilter::admits(const CancellationRecord& r) const {
    if (proper_only && !(r.numerator < r.denominator)) return false;
    return admits_class(r.cls);
}

CancellationClass classify(const BigInt& numerator, const BigInt& denominator,
                           std::uint64_t digit) {
    if (numerator == denominator) return CancellationClass::trivial_equal;
    if (digit == 0) return CancellationClass::trivial_zero;
    return CancellationClass::nontrivial;
}

void validate(const CancellationQuery& q) {
    if (q.denominator <= 0) {
        throw QueryError("denominator must be positive " + describe(q));
    }
    if (q.den_pos.index >= digit_count(q.denominator, q.radix)) {
        throw QueryError("den_pos does not exist in the denominator " + describe(q));
    }
    if (remove_digit(q.denominator, q.radix, q.den_pos) == 0) {
        throw QueryError("reduced denominator would be 0 " + describe(q));
    }
}

LinearEquation build_equation(const CancellationQuery& q) {
    validate(q);
    const std::uint64_t b = q.radix.value();
    const BigInt& n = q.denominator;
    const BigInt n_red = remove_digit(n, q.radix, q.den_pos);
    const std::uint64_t c = digit_at(n, q.radix, q.den_pos);
    const BigInt scale = power(q.radix, q.num_pos.index);

    // (M1*b^(i1+1) + c*b^i1 + M2) * n' == (M1*b^i1 + M2) * n, collected by unknown.
    return LinearEquation{scale * (n_red * b - n), n_red - n, -(scale * c * n_red)};
}

SolutionSet solve_fixed_denominator(const CancellationQuery& q) {
    const LinearEquation eq = build_equation(q);
    const Radix radix = q.radix;
    const std::uint64_t c = digit_at(q.denominator, radix, q.den_pos);
    const BigInt scale = power(radix, q.num_pos.index);
    const BigInt stride = scale * radix.value();

    const LinearSolution solution = solve_linear(eq);

    if (std::holds_alternative<NoSolution>(solution)) return FiniteSolutions{};

    if (const auto* line = std::get_if<DegenerateLine>(&solution)) {
        // B = n' - n is never zero, so only A can vanish; that forces c = 0
        // and C = 0, pinning M2 = 0 with M1 free.
        if (line->pinned != DegenerateLine::Pinned::m2 || line->value != 0 || c != 0) {
            throw VerificationFailure("unexpected degenerate equation for " + describe(q));
        }
        return InfiniteFamily{radix, q.denominator, q.num_pos, q.den_pos, c, stride};
    }

    if (std::holds_alternative<AllPairs>(solution)) {
        throw VerificationFailure("equation vanished identically for " + describe(q));
    }

    const auto& family = std::get<GeneralSolution>(solution);
    const auto pairs = enumerate_box(family, BigInt(0), scale - 1, BigInt(0));

    FiniteSolutions out;
    for (const auto& [m1, m2] : pairs) {
        if (m1 == 0 && c == 0) continue;  // digit at num_pos would be a leading zero
        const BigInt m_red = m1 * scale + m2;
        if (m_red == 0) continue;
        const BigInt m = m1 * stride + c * scale + m2;

        Verdict check = verify_cancellation(radix, m, q.denominator, q.num_pos, q.den_pos);
        if (!check.valid) {
            throw VerificationFailure("constructed numerator " + to_decimal(m) +
                                      " failed verification (" + check.reason + ") for " +
                                      describe(q));
        }
        out.records.push_back(std::move(*check.record));
    }
    return out;
}

Verdict verify_cancellation(Radix b, const BigInt& m, const BigInt& n, DigitPosition num_pos,
                            DigitPosition den_pos) {
    auto reject = [](std::string reason) { return Verdict{false, std::move(reason), {}}; };

    if (m <= 0) return reject("numerator must be positive");
    if (n <= 0) return reject("denominator must be positive");
    if (num_pos.index >= digit_count(m, b)) return reject("numerator position out of range");
    if (den_pos.index >= digit_count(n, b)) return reject("denominator position out of range");

    const std::uint64_t c = digit_at(m, b, num_pos);
    if (c != digit_at(n, b, den_pos)) return reject("digit mismatch");

    CancellationRecord rec;
    rec.radix = b;
    rec.numerator = m;
    rec.denominator = n;
    rec.num_pos = num_pos;
    rec.den_pos = den_pos;
    rec.digit = c;
    rec.reduced_num = remove_digit(m, b, num_pos);
    rec.reduced_den = remove_digit(n, b, den_pos);
    if (rec.reduced_den == 0) return reject("reduced denominator is 0");
    if (rec.reduced_num == 0) return reject("reduced numerator is 0");
    if (m * rec.reduced_den != rec.reduced_num * n) return reject("ratio changed");

    rec.cls = classify(m, n, c);
    return Verdict{true, {}, std::move(rec)};
}

}  // namespace anomalous
