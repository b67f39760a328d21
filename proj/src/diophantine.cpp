#include "anomalous/diophantine.hpp"

#include <algorithm>
#include <utility>

namespace anomalous {

Bezout extended_gcd(const BigInt& a, const BigInt& b) {
    // Iterate on |a|, |b|; the invariant old_r == |a|*old_s + |b|*old_t holds
    // throughout, so the signs of a and b transfer onto the coefficients.
    BigInt old_r = abs(a), r = abs(b);
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        // Materialize each update before the swap; a lazy expression would
        // read r, s, t after they have been moved from.
        BigInt q = old_r / r;
        BigInt next_r = old_r - q * r;
        BigInt next_s = old_s - q * s;
        BigInt next_t = old_t - q * t;
        old_r = std::exchange(r, std::move(next_r));
        old_s = std::exchange(s, std::move(next_s));
        old_t = std::exchange(t, std::move(next_t));
    }
    if (a < 0) old_s = -old_s;
    if (b < 0) old_t = -old_t;
    return Bezout{std::move(old_r), std::move(old_s), std::move(old_t)};
}

LinearSolution solve_linear(const LinearEquation& eq) {
    if (eq.a == 0 && eq.b == 0) {
        if (eq.c == 0) return AllPairs{};
        return NoSolution{};
    }
    if (eq.a == 0) {
        if (eq.c % eq.b != 0) return NoSolution{};
        return DegenerateLine{DegenerateLine::Pinned::m2, eq.c / eq.b};
    }
    if (eq.b == 0) {
        if (eq.c % eq.a != 0) return NoSolution{};
        return DegenerateLine{DegenerateLine::Pinned::m1, eq.c / eq.a};
    }

    const Bezout bz = extended_gcd(eq.a, eq.b);
    if (eq.c % bz.g != 0) return NoSolution{};

    GeneralSolution gs;
    gs.a1 = eq.a / bz.g;
    gs.b1 = eq.b / bz.g;
    gs.c1 = eq.c / bz.g;
    // a1*x + b1*y == 1 with the same Bezout pair.
    gs.m1_0 = gs.c1 * bz.x;
    gs.m2_0 = gs.c1 * bz.y;
    if (gs.a1 < 0) {
        // Negating the equation negates a1, b1, c1 and leaves the particular
        // solution and the family unchanged.
        gs.a1 = -gs.a1;
        gs.b1 = -gs.b1;
        gs.c1 = -gs.c1;
    }
    return gs;
}

std::vector<SolutionPair> enumerate_box(const GeneralSolution& gs, const BigInt& m2_min,
                                        const BigInt& m2_max, const BigInt& m1_min) {
    if (gs.a1 == 0 || gs.b1 == 0) {
        throw ContractViolation("enumerate_box: degenerate family (a1 or b1 is zero)");
    }
    if (m2_min > m2_max) {
        throw ContractViolation("enumerate_box: empty M2 range");
    }

    // m2_min <= m2_0 - a1*t <= m2_max
    BigInt t_lo, t_hi;
    if (gs.a1 > 0) {
        t_lo = ceil_div(gs.m2_0 - m2_max, gs.a1);
        t_hi = floor_div(gs.m2_0 - m2_min, gs.a1);
    } else {
        t_lo = ceil_div(gs.m2_0 - m2_min, gs.a1);
        t_hi = floor_div(gs.m2_0 - m2_max, gs.a1);
    }
    // m1_0 + b1*t >= m1_min
    if (gs.b1 > 0) {
        t_lo = std::max(t_lo, ceil_div(m1_min - gs.m1_0, gs.b1));
    } else {
        t_hi = std::min(t_hi, floor_div(m1_min - gs.m1_0, gs.b1));
    }

    std::vector<SolutionPair> out;
    for (BigInt t = t_lo; t <= t_hi; ++t) {
        out.push_back(SolutionPair{gs.m1_at(t), gs.m2_at(t)});
    }
    if (gs.b1 < 0) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace anomalous
