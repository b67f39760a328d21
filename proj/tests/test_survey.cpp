#include <sstream>

#include "anomalous/export.hpp"
#include "anomalous/survey.hpp"
#include "doctest.h"

using namespace anomalous;

namespace {

SweepPlan plan(std::uint64_t b, long lo, long hi) {
    SweepPlan p;
    p.radix = Radix(b);
    p.den_min = lo;
    p.den_max = hi;
    return p;
}

std::string jsonl(const Catalog& c) {
    std::ostringstream os;
    export_catalog(c, ExportFormat::jsonl, os);
    return os.str();
}

}  // namespace

TEST_CASE("sweep over two-digit denominators finds the classic four") {
    auto p = plan(10, 10, 99);
    p.filter = RecordFilter::nontrivial_only(true);
    const auto cat = sweep(p);
    REQUIRE(cat.records.size() == 4);
    CHECK(cat.records[0].numerator == 16);
    CHECK(cat.records[1].numerator == 26);  // 26/65 sorts before 19/95 by denominator
    CHECK(cat.records[2].numerator == 19);
    CHECK(cat.records[3].numerator == 49);
    CHECK(cat.header.num_pos_max == 1);
}

TEST_CASE("sweep of a single denominator, all classes") {
    const auto cat = sweep(plan(10, 64, 64));
    auto has = [&](long m, std::size_t i1, std::size_t i2, CancellationClass cls) {
        return std::any_of(cat.records.begin(), cat.records.end(), [&](const auto& r) {
            return r.numerator == m && r.num_pos.index == i1 && r.den_pos.index == i2 && r.cls == cls;
        });
    };
    CHECK(has(16, 0, 1, CancellationClass::nontrivial));
    CHECK(has(64, 0, 0, CancellationClass::trivial_equal));
    CHECK(has(64, 1, 1, CancellationClass::trivial_equal));
    CHECK(cat.families.empty());
}

TEST_CASE("infinite families become descriptors") {
    auto p = plan(10, 20, 20);
    p.include_infinite = true;
    const auto cat = sweep(p);
    // i1 = 0 and i1 = 1 both give a family for the trailing zero of 20
    REQUIRE(cat.families.size() == 2);
    CHECK(cat.families[0].num_pos.index == 0);
    CHECK(cat.families[0].den_pos.index == 0);
    CHECK(cat.families[0].stride == 10);
    CHECK(cat.families[1].stride == 100);

    p.num_pos_max = 0;
    const auto narrow = sweep(p);
    REQUIRE(narrow.families.size() == 1);
    CHECK(to_jsonl(narrow.families[0]) ==
          R"({"type":"infinite_family","base":10,"denominator":20,"num_pos":0,"den_pos":0,"digit":0,"stride":10,"first":10})");

    p.include_infinite = false;
    CHECK(sweep(p).families.empty());
}

TEST_CASE("sweep counts skipped queries and rejects bad ranges") {
    const auto cat = sweep(plan(10, 1, 9));
    CHECK(cat.records.empty());
    CHECK(cat.skipped_queries == 9);
    CHECK_THROWS_AS(sweep(plan(10, 0, 5)), QueryError);
    CHECK_THROWS_AS(sweep(plan(10, 50, 40)), QueryError);
}

TEST_CASE("sweep output is independent of the job count") {
    auto p = plan(10, 10, 2500);
    p.include_infinite = true;
    const std::string serial = jsonl(sweep(p));
    p.jobs = 6;
    CHECK(jsonl(sweep(p)) == serial);
}

TEST_CASE("relaxing the filter never removes records") {
    auto strict = plan(7, 7, 400);
    strict.filter = RecordFilter::nontrivial_only(true);
    auto loose = strict;
    loose.filter = RecordFilter::all();
    auto mid = strict;
    mid.filter = RecordFilter::nontrivial_only(false);
    const auto a = sweep(strict).records, b = sweep(mid).records, c = sweep(loose).records;
    auto subset = [](const auto& small, const auto& large) {
        return std::includes(large.begin(), large.end(), small.begin(), small.end(),
                             [](const auto& x, const auto& y) { return catalog_less(x, y); });
    };
    CHECK(subset(a, b));
    CHECK(subset(b, c));
    CHECK(a.size() < c.size());
}

TEST_CASE("sweep over d-digit denominators equals the oracle") {
    for (std::uint64_t b : {3u, 5u, 10u}) {
        for (std::size_t d1 = 1; d1 <= 3; ++d1) {
            const Radix r(b);
            auto p = plan(b, 1, 1);
            p.den_min = power(r, 1);
            p.den_max = power(r, 2) - 1;
            p.num_pos_max = d1 - 1;
            p.filter = RecordFilter::nontrivial_only(false);
            auto cat = sweep(p);
            std::erase_if(cat.records, [&](const auto& rec) { return digit_count(rec.numerator, r) != d1; });

            OracleScope s;
            s.radix = r;
            s.num_digits = d1;
            s.den_digits = 2;
            s.filter = p.filter;
            CHECK(cat.records == enumerate_all(s));
        }
    }
}

TEST_CASE("boas_table") {
    auto t = boas_table(Radix(10), Radix(10), 2);
    REQUIRE(t.size() == 1);
    REQUIRE(t[0].records.size() == 4);
    CHECK(boas_table(Radix(2), Radix(2), 2)[0].records.empty());

    for (const auto& cat : boas_table(Radix(2), Radix(12), 3)) {
        for (const auto& r : cat.records) {
            CHECK(verify_cancellation(r.radix, r.numerator, r.denominator, r.num_pos, r.den_pos).valid);
            CHECK(r.cls == CancellationClass::nontrivial);
            CHECK(r.numerator < r.denominator);
            CHECK(digit_count(r.numerator, r.radix) == 3);
        }
    }
    CHECK_THROWS_AS(boas_table(Radix(10), Radix(10), 1), QueryError);
    CHECK_THROWS_AS(boas_table(Radix(10), Radix(10), 9), WorkEstimateExceeded);
}

TEST_CASE("selftest finds no mismatches") {
    for (auto [b, d] : {std::pair{2u, 2u}, {6u, 3u}, {10u, 2u}}) {
        const auto report = selftest(Radix(b), d);
        CHECK(report.mismatches == 0);
        CHECK(report.scopes_checked == (b - 1) * d * d);
        for (const auto& line : report.details) MESSAGE(line);
    }
}
