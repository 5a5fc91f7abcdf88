#include <cstdlib>
#include <set>
#include <sstream>

#include "doctest.h"
#include "reference.hpp"
#include "voganscan/enumerate.hpp"
#include "voganscan/errors.hpp"
#include "voganscan/scan.hpp"

using namespace voganscan;

namespace {

std::vector<std::vector<int>> painted_sets(const std::vector<VoganDiagram>& ds) {
    std::vector<std::vector<int>> out;
    for (const auto& d : ds) out.emplace_back(d.painted().begin(), d.painted().end());
    return out;
}

ScanConfig config(std::vector<Family> families, int lo, int hi) {
    ScanConfig c;
    c.families = std::move(families);
    c.min_rank = lo;
    c.max_rank = hi;
    return c;
}

std::vector<ScanRecord> records(const std::string& jsonl) {
    std::vector<ScanRecord> out;
    std::istringstream in(jsonl);
    std::string line;
    while (std::getline(in, line)) out.push_back(parse_jsonl(line));
    return out;
}

std::string scan_text(const ScanConfig& c, ScanSummary* summary = nullptr) {
    std::ostringstream out;
    const ScanSummary s = run_scan(c, out);
    if (summary) *summary = s;
    return out.str();
}

bool contains(const std::vector<ScanRecord>& rs, Family f, int l, std::vector<int> s) {
    for (const auto& r : rs)
        if (r.family == f && r.rank == l && r.painted == s) return true;
    return false;
}

}  // namespace

TEST_CASE("enumerate_diagrams examples") {
    CHECK(painted_sets(enumerate_diagrams(Family::A, 2, false)) == std::vector<std::vector<int>>{{1}, {1, 2}, {2}});
    CHECK(painted_sets(enumerate_diagrams(Family::A, 2, true)) == std::vector<std::vector<int>>{{1}, {1, 2}});
    CHECK(enumerate_diagrams(Family::D, 4, false).size() == 15);
    CHECK(enumerate_diagrams(Family::D, 4, true).size() == 11);
    CHECK_THROWS_AS(enumerate_diagrams(Family::C, 2, false), InvalidRank);
}

TEST_CASE("enumeration is complete, lexicographic, and dedup picks orbit minima") {
    for (Family f : kAllFamilies) {
        for (int l = minimum_rank(f); l <= 9; ++l) {
            const auto all = painted_sets(enumerate_diagrams(f, l, false));
            CHECK(all.size() == diagram_count(l));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::set<std::vector<int>>(all.begin(), all.end()).size() == all.size());

            std::set<std::vector<int>> orbits;
            for (const auto& s : all) orbits.insert(std::min(s, automorphism_image(f, l, s)));
            const auto reps = painted_sets(enumerate_diagrams(f, l, true));
            CHECK(std::vector<std::vector<int>>(orbits.begin(), orbits.end()) == reps);
        }
    }
}

TEST_CASE("run_scan examples") {
    {
        auto c = config({Family::A}, 1, 2);
        c.only_special = true;
        const auto rs = records(scan_text(c));
        CHECK(contains(rs, Family::A, 1, {1}));
        CHECK(contains(rs, Family::A, 2, {1}));
        for (const auto& r : rs)
            if (r.rank == 1 || r.painted == std::vector<int>{1}) CHECK(r.lambda == -1);
    }
    {
        auto c = config({Family::A}, 5, 5);
        c.lambda = 0;
        const auto rs = records(scan_text(c));
        CHECK(contains(rs, Family::A, 5, {2, 4}));
        for (const auto& r : rs) CHECK(r.lambda == 0);
    }
    {
        auto c = config({Family::B}, 3, 3);
        c.only_special = true;
        const auto rs = records(scan_text(c));
        CHECK_FALSE(contains(rs, Family::B, 3, {1, 2}));
        CHECK(contains(rs, Family::B, 3, {1}));
    }
}

TEST_CASE("JSONL key order and summary counts") {
    auto c = config({Family::A}, 1, 1);
    ScanSummary s;
    const std::string out = scan_text(c, &s);
    CHECK(out ==
          "{\"family\":\"A\",\"rank\":1,\"painted\":[1],\"xi\":{\"1\":-4},\"special\":true,\"lambda\":-1,"
          "\"method\":\"oracle\",\"cases\":[]}\n");
    CHECK(s.evaluated == 1);
    CHECK(s.emitted == 1);
    CHECK(s.counts.at(SummaryKey{Family::A, 1, -1}) == 1);

    c = config({Family::B}, 2, 3);
    c.only_special = true;
    scan_text(c, &s);
    std::int64_t total = 0;
    for (const auto& [k, n] : s.counts) total += n;
    CHECK(total == 3 + 7);
    CHECK(s.evaluated == 10);
}

TEST_CASE("JSONL and CSV round-trip losslessly") {
    std::vector<ScanRecord> all;
    for (XiMethod m : {XiMethod::Oracle, XiMethod::Published}) {
        auto c = config({Family::A, Family::B, Family::C, Family::D}, 1, 5);
        c.all_families = true;
        c.method = m;
        for (const auto& r : records(scan_text(c))) all.push_back(r);
    }
    ScanRecord err;
    err.family = Family::D;
    err.rank = 4;
    err.painted = {3, 4};
    err.method = XiMethod::Published;
    err.error = "AmbiguousBranch: needs \"i_{m-3}\", m = 2";
    all.push_back(err);

    for (const auto& r : all) {
        CHECK(parse_jsonl(to_jsonl(r)) == r);
        CHECK(parse_csv(to_csv(r)) == r);
    }
    CHECK(to_csv(all.front()) == "A,1,1,1:-4,true,-1,oracle,,");
    CHECK_THROWS(parse_csv("A,1,1"));
}

TEST_CASE("output bytes do not depend on the worker count") {
    for (OutputFormat fmt : {OutputFormat::Jsonl, OutputFormat::Csv}) {
        auto c = config({Family::A, Family::B, Family::C, Family::D}, 1, 8);
        c.all_families = true;
        c.format = fmt;
        c.jobs = 1;
        const std::string one = scan_text(c);
        for (int jobs : {2, 3, 8}) {
            c.jobs = jobs;
            CHECK(scan_text(c) == one);
        }
    }
}

TEST_CASE("filter pushdown changes nothing") {
    auto full = config({Family::A, Family::B, Family::C, Family::D}, 1, 9);
    full.all_families = true;
    full.jobs = 4;
    std::vector<ScanRecord> filtered;
    for (const auto& r : records(scan_text(full)))
        if (r.special) filtered.push_back(r);
    auto only = full;
    only.only_special = true;
    CHECK(records(scan_text(only)) == filtered);

    for (int l : {-1, 0, 1}) {
        std::vector<ScanRecord> by_lambda;
        for (const auto& r : filtered)
            if (r.lambda == l) by_lambda.push_back(r);
        auto c = full;
        c.lambda = l;
        CHECK(records(scan_text(c)) == by_lambda);
    }
}

TEST_CASE("dedup gives one record per orbit and re-expands to the full special set") {
    for (Family f : kAllFamilies) {
        auto c = config({f}, minimum_rank(f), 8);
        c.only_special = true;
        c.jobs = 3;
        const auto full = records(scan_text(c));
        c.dedup = true;
        const auto reps = records(scan_text(c));

        std::set<std::pair<int, std::vector<int>>> expanded;
        for (const auto& r : reps) {
            CHECK(is_canonical(f, r.rank, r.painted));
            expanded.insert({r.rank, r.painted});
            expanded.insert({r.rank, automorphism_image(f, r.rank, r.painted)});
        }
        std::set<std::pair<int, std::vector<int>>> expected;
        for (const auto& r : full) expected.insert({r.rank, r.painted});
        CHECK(expanded == expected);
    }
}

TEST_CASE("per-diagram errors are recorded in line and never abort") {
    setenv("VOGANSCAN_ORACLE_CAP", "3", 1);
    auto c = config({Family::A}, 3, 4);
    c.only_special = true;
    ScanSummary s;
    const auto rs = records(scan_text(c, &s));
    unsetenv("VOGANSCAN_ORACLE_CAP");
    CHECK(s.evaluated == 7 + 15);
    CHECK(s.errors == 15);
    int errors = 0;
    for (const auto& r : rs) {
        if (r.rank == 4) {
            REQUIRE(r.error);
            CHECK(r.error->rfind("CapExceeded", 0) == 0);
            CHECK_FALSE(r.lambda);
            ++errors;
        } else {
            CHECK_FALSE(r.error);
        }
    }
    CHECK(errors == 15);
}

TEST_CASE("strict scans cross-check mid against the oracle") {
    for (XiMethod m : {XiMethod::Oracle, XiMethod::Mid, XiMethod::Published}) {
        auto c = config({Family::A, Family::B, Family::C, Family::D}, 1, 7);
        c.all_families = true;
        c.strict = true;
        c.method = m;
        c.jobs = 4;
        ScanSummary s;
        scan_text(c, &s);
        CHECK(s.inconsistencies == 0);
        CHECK(s.errors == 0);
    }
}

TEST_CASE("config validation") {
    auto c = config({Family::C}, 2, 4);
    CHECK_THROWS_AS(validate(c), InvalidRank);
    c.all_families = true;
    CHECK_NOTHROW(validate(c));
    c = config({Family::A}, 1, 3);
    c.jobs = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = config({Family::A}, 4, 3);
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = config({Family::A}, 1, 3);
    c.lambda = 2;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = config({Family::A}, 1, kMaxScanRank + 1);
    CHECK_THROWS_AS(validate(c), InvalidRank);

    // all: families whose minimum exceeds max_rank contribute nothing
    c = config({Family::A, Family::B, Family::C, Family::D}, 1, 2);
    c.all_families = true;
    const auto rs = records(scan_text(c));
    for (const auto& r : rs) CHECK((r.family == Family::A || r.family == Family::B));
    CHECK(rs.size() == 1 + 3 + 3);
}

TEST_CASE("an unwritable stream raises IoError") {
    std::ostringstream bad;
    bad.setstate(std::ios::badbit);
    CHECK_THROWS_AS(run_scan(config({Family::A}, 1, 2), bad), IoError);
}

TEST_CASE("bench examples") {
    const BenchReport a = run_bench(Family::A, 50, 30, 7);
    REQUIRE(a.oracle);
    REQUIRE(a.speedup);
    CHECK(*a.speedup > 1.0);
    CHECK(a.published.p95_us >= a.published.median_us);

    const BenchReport big = run_bench(Family::A, 10000, 3, 7, 100);
    CHECK_FALSE(big.oracle);
    REQUIRE(big.oracle_skipped);
    CHECK(big.oracle_skipped->rfind("CapExceeded", 0) == 0);
    CHECK_FALSE(big.speedup);

    const BenchReport tiny = run_bench(Family::B, 2, 1);
    CHECK(tiny.oracle);
    CHECK(tiny.speedup);
    CHECK(tiny.noise_dominated);
    CHECK(tiny.published.median_us < 1000.0);
    CHECK(tiny.oracle->median_us < 1000.0);

    CHECK_THROWS_AS(run_bench(Family::D, 3, 5), InvalidRank);
    CHECK_THROWS_AS(run_bench(Family::A, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_bench(Family::A, 5, 3, 1, 6), std::invalid_argument);

    const auto j = to_json(tiny);
    CHECK(j.contains("speedup"));
    CHECK(j["noise_dominated"] == true);
}
