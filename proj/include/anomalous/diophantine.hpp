#pragma once

// Two-variable linear Diophantine equations A*M1 + B*M2 = C: the extended
// Euclidean algorithm, the full case analysis of the solution set, and
// enumeration of the one-parameter family inside a box.

#include <stdexcept>
#include <variant>
#include <vector>

#include "anomalous/bigint.hpp"

namespace anomalous {

class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// a*x + b*y == g, g == gcd(|a|, |b|) >= 0.
struct Bezout {
    BigInt g;
    BigInt x;
    BigInt y;
};

Bezout extended_gcd(const BigInt& a, const BigInt& b);

struct LinearEquation {
    BigInt a;
    BigInt b;
    BigInt c;

    bool satisfied_by(const BigInt& m1, const BigInt& m2) const { return a * m1 + b * m2 == c; }

    friend bool operator==(const LinearEquation&, const LinearEquation&) = default;
};

struct NoSolution {};

// A == B == C == 0.
struct AllPairs {};

// Exactly one coefficient is zero: one unknown is pinned, the other ranges over Z.
struct DegenerateLine {
    enum class Pinned { m1, m2 };
    Pinned pinned = Pinned::m2;
    BigInt value;
};

// Solutions are (m1_0 + b1*t, m2_0 - a1*t) for t in Z, where (m1_0, m2_0)
// solves a1*M1 + b1*M2 = c1 and gcd(a1, b1) == 1. Signs are normalized so
// that a1 > 0.
struct GeneralSolution {
    BigInt m1_0;
    BigInt m2_0;
    BigInt a1;
    BigInt b1;
    BigInt c1;

    BigInt m1_at(const BigInt& t) const { return m1_0 + b1 * t; }
    BigInt m2_at(const BigInt& t) const { return m2_0 - a1 * t; }
};

using LinearSolution = std::variant<NoSolution, AllPairs, DegenerateLine, GeneralSolution>;

LinearSolution solve_linear(const LinearEquation& eq);

struct SolutionPair {
    BigInt m1;
    BigInt m2;

    friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

// Every family member with m2_min <= M2 <= m2_max and M1 >= m1_min, ascending
// by M1. Throws ContractViolation if a1 or b1 is zero or m2_min > m2_max.
std::vector<SolutionPair> enumerate_box(const GeneralSolution& gs, const BigInt& m2_min,
                                        const BigInt& m2_max, const BigInt& m1_min);

}  // namespace anomalous
