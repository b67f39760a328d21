// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anomalous/cli.hpp"
#include "anomalous/diophantine.hpp"
#include "anomalous/solver.hpp"
#include "json.hpp"

using namespace anomalous;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
    double seconds = 0;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    CliRun r;
    r.code = cli::run(args, out, err);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

// Re-check one base-10 JSONL record using decimal strings only: the digit at
// each position is read off the numeral, deleted by string erase, and the
// ratio compared by cross-multiplication.
bool recheck_decimal_record(const nlohmann::json& j, std::string& why) {
    auto as_text = [](const nlohmann::json& v) { return v.dump(); };
    const std::string m = as_text(j.at("numerator")), n = as_text(j.at("denominator"));
    const std::size_t i1 = j.at("num_pos").get<std::size_t>();
    const std::size_t i2 = j.at("den_pos").get<std::size_t>();
    if (j.at("base").get<int>() != 10) return why = "not base 10", false;
    if (i1 >= m.size() || i2 >= n.size()) return why = "position out of range", false;
    const std::size_t p1 = m.size() - 1 - i1, p2 = n.size() - 1 - i2;
    if (m[p1] != n[p2]) return why = "digit mismatch", false;
    if (std::to_string(j.at("digit").get<int>()) != std::string(1, m[p1])) return why = "digit field", false;
    std::string mr = m, nr = n;
    mr.erase(p1, 1);
    nr.erase(p2, 1);
    // Surfaced leading zeros ("105" -> "05") are dropped; Boost would read them as octal.
    auto value = [](std::string s) {
        s.erase(0, s.find_first_not_of('0'));
        return s.empty() ? BigInt(0) : BigInt(s);
    };
    const BigInt M = value(m), N = value(n), MR = value(mr), NR = value(nr);
    if (MR == 0 || NR == 0) return why = "zero reduction", false;
    if (as_text(j.at("reduced_num")) != MR.str() || as_text(j.at("reduced_den")) != NR.str()) {
        return why = "reduced fields", false;
    }
    if (M * NR != MR * N) return why = "ratio changed", false;
    return true;
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome criterion_golden_set() {
    const auto r = run_cli({"oracle", "--base", "10", "--num-digits", "2", "--den-digits", "2",
                            "--proper-only", "--nontrivial-only"});
    if (r.code != 0) return {false, "exit " + std::to_string(r.code) + ": " + r.err};
    const auto lines = lines_of(r.out);
    const std::vector<std::pair<int, int>> expected{{16, 64}, {26, 65}, {19, 95}, {49, 98}};
    bool ok = lines.size() == expected.size();
    for (std::size_t k = 0; ok && k < lines.size(); ++k) {
        const auto j = nlohmann::json::parse(lines[k]);
        ok = j.at("numerator") == expected[k].first && j.at("denominator") == expected[k].second &&
             j.at("num_pos") == 0 && j.at("den_pos") == 1 && j.at("class") == "nontrivial";
    }
    ok = ok && r.seconds < 1.0;
    return {ok, std::to_string(lines.size()) + " records in " + std::to_string(r.seconds) + " s (limit 1 s)"};
}

Outcome criterion_solver_oracle_equivalence() {
    const auto r = run_cli({"selftest", "--base-max", "10", "--den-digits", "3"});
    const auto lines = lines_of(r.out);
    // bases 2..10 x numerator digits 1..3 x denominator digits 1..3
    const bool ok = r.code == 0 && lines.size() == 2 && lines[0] == "scopes checked: 81" &&
                    lines[1] == "mismatches: 0" && r.seconds < 120.0;
    return {ok, (lines.size() > 1 ? lines[0] + ", " + lines[1] : r.out + r.err) + " in " +
                    std::to_string(r.seconds) + " s (limit 120 s)"};
}

std::vector<std::string> paper_scale_args(const std::string& jobs) {
    return {"sweep", "--base", "10", "--den-min", "10", "--den-max", "9999", "--jobs", jobs};
}

Outcome criterion_paper_scale_sweep(CliRun& serial) {
    serial = run_cli(paper_scale_args("1"));
    if (serial.code != 0) return {false, "exit " + std::to_string(serial.code) + ": " + serial.err};
    std::size_t count = 0, bad = 0;
    std::string first_bad;
    for (const auto& line : lines_of(serial.out)) {
        ++count;
        std::string why;
        if (!recheck_decimal_record(nlohmann::json::parse(line), why)) {
            if (bad++ == 0) first_bad = line + " (" + why + ")";
        }
    }
    const bool ok = bad == 0 && count > 0 && serial.seconds < 60.0;
    return {ok, std::to_string(count) + " records re-verified, " + std::to_string(bad) + " failures" +
                    (first_bad.empty() ? "" : " e.g. " + first_bad) + ", sweep " +
                    std::to_string(serial.seconds) + " s (limit 60 s)"};
}

Outcome criterion_degeneracy_law() {
    std::size_t queries = 0, families = 0, violations = 0;
    for (std::uint64_t b = 2; b <= 10; ++b) {
        const Radix r(b);
        for (long n = 1; n <= 1000; ++n) {
            for (std::size_t i2 = 0; i2 < digit_count(n, r); ++i2) {
                if (remove_digit(n, r, DigitPosition(i2)) == 0) continue;
                const bool predicted = BigInt(n) % power(r, i2 + 1) == 0;
                for (std::size_t i1 = 0; i1 <= 2; ++i1) {
                    ++queries;
                    const auto s = solve_fixed_denominator(
                        CancellationQuery{r, BigInt(n), DigitPosition(i1), DigitPosition(i2)});
                    const auto* fam = std::get_if<InfiniteFamily>(&s);
                    if ((fam != nullptr) != predicted) {
                        ++violations;
                        continue;
                    }
                    if (!fam) continue;
                    ++families;
                    for (int k = 1; k <= 50; ++k) {
                        if (!verify_cancellation(r, fam->member(k), n, fam->num_pos, fam->den_pos).valid) {
                            ++violations;
                        }
                    }
                }
            }
        }
    }
    return {violations == 0, std::to_string(queries) + " queries, " + std::to_string(families) +
                                 " families, " + std::to_string(violations) + " violations"};
}

Outcome criterion_bezout_fuzz() {
    std::mt19937_64 rng(0xB0E2);
    auto decimal = [&](int digits) {
        std::string s(1, static_cast<char>('1' + rng() % 9));
        while (static_cast<int>(s.size()) < digits) s.push_back(static_cast<char>('0' + rng() % 10));
        return BigInt(s);
    };
    auto sample = [&]() -> BigInt {
        BigInt v;
        switch (rng() % 5) {
            case 0: v = 0; break;
            case 1: v = static_cast<long>(rng() % 1000); break;
            case 2: v = BigInt(rng()); break;
            case 3: v = decimal(200); break;
            default: v = decimal(1 + static_cast<int>(rng() % 200)); break;
        }
        return (rng() & 1) ? BigInt(-v) : v;
    };
    std::size_t failures = 0, zeros = 0, negatives = 0, wide = 0;
    constexpr int kPairs = 100000;
    for (int k = 0; k < kPairs; ++k) {
        BigInt a = sample(), b = sample();
        if (k % 7 == 0) {  // force a large common factor
            const BigInt f = decimal(60);
            a *= f;
            b *= f;
        }
        zeros += (a == 0) + (b == 0);
        negatives += (a < 0) + (b < 0);
        wide += (abs(a) >= BigInt(decimal(200) / 10)) + (abs(b) >= BigInt(decimal(200) / 10));
        const Bezout r = extended_gcd(a, b);
        bool ok = a * r.x + b * r.y == r.g && r.g >= 0;
        if (r.g == 0) {
            ok = ok && a == 0 && b == 0;
        } else {
            ok = ok && a % r.g == 0 && b % r.g == 0;
        }
        failures += !ok;
    }
    return {failures == 0 && zeros > 0 && negatives > 0 && wide > 0,
            std::to_string(kPairs) + " pairs (" + std::to_string(zeros) + " zeros, " +
                std::to_string(negatives) + " negatives, " + std::to_string(wide) +
                " values of ~200 digits), " + std::to_string(failures) + " failures"};
}

Outcome criterion_self_membership() {
    const Radix ten(10);
    std::size_t checked = 0, missing = 0;
    for (long n = 10; n <= 999; ++n) {
        for (std::size_t i = 0; i < digit_count(n, ten); ++i) {
            const DigitPosition pos(i);
            if (remove_digit(n, ten, pos) == 0) continue;
            ++checked;
            const auto s = solve_fixed_denominator(CancellationQuery{ten, BigInt(n), pos, pos});
            bool found = false;
            if (const auto* fin = std::get_if<FiniteSolutions>(&s)) {
                for (const auto& r : fin->records) {
                    found = found || (r.numerator == n && r.cls == CancellationClass::trivial_equal);
                }
            } else {
                const auto& fam = std::get<InfiniteFamily>(s);
                found = BigInt(n) % fam.stride == 0 &&
                        classify(n, n, fam.digit) == CancellationClass::trivial_equal;
            }
            missing += !found;
        }
    }
    return {missing == 0, std::to_string(checked) + " (n, i) pairs, " + std::to_string(missing) + " missing"};
}

Outcome criterion_determinism(const CliRun& serial) {
    const auto parallel = run_cli(paper_scale_args("8"));
    const bool ok = serial.code == 0 && parallel.code == 0 && serial.out == parallel.out;
    return {ok, std::to_string(serial.out.size()) + " bytes (jobs 1) vs " +
                    std::to_string(parallel.out.size()) + " bytes (jobs 8), " +
                    (serial.out == parallel.out ? "identical" : "different")};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail
                  << std::endl;
    };

    CliRun serial_sweep;
    report(1, "golden base-10 two-digit set", criterion_golden_set);
    report(2, "solver/oracle equivalence, bases 2-10, up to 3 digits", criterion_solver_oracle_equivalence);
    report(3, "paper-scale sweep, denominators 10..9999",
           [&] { return criterion_paper_scale_sweep(serial_sweep); });
    report(4, "degeneracy law", criterion_degeneracy_law);
    report(5, "Bezout fuzz", criterion_bezout_fuzz);
    report(6, "self-membership", criterion_self_membership);
    report(7, "sweep determinism across job counts", [&] { return criterion_determinism(serial_sweep); });

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
