// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "voganscan/audit.hpp"
#include "voganscan/closed_form.hpp"
#include "voganscan/enumerate.hpp"
#include "voganscan/errors.hpp"
#include "voganscan/root_system.hpp"
#include "voganscan/scan.hpp"
#include "voganscan/speciality.hpp"

using namespace voganscan;
using Clock = std::chrono::steady_clock;
using XiMap = std::map<int, std::int64_t>;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Outcome criterion1() {
    Outcome o;
    const auto start = Clock::now();
    for (Family f : kAllFamilies)
        for (std::int64_t l = minimum_rank(f); l <= 30; ++l) {
            const std::int64_t want = f == Family::A ? l * (l + 1) / 2 : f == Family::D ? l * (l - 1) : l * l;
            const auto got = static_cast<std::int64_t>(positive_roots(f, static_cast<int>(l)).size());
            if (got != want) o.fail(std::string(1, family_letter(f)) + str(l) + ": " + str(got) + " roots");
        }
    const double t = seconds_since(start);
    if (t >= 5.0) o.fail("took " + str(t) + " s");
    if (o.pass) o.detail = "all ranks to 30 exact, " + str(t) + " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (Family f : kAllFamilies)
        for (int l = minimum_rank(f); l <= 30; ++l) {
            RootCoords sum(l, 0);
            for (const auto& r : positive_roots(f, l))
                for (int k = 0; k < l; ++k) sum[k] += r.coeffs[k];
            if (cartan_matrix(f, l).apply(sum) != RootCoords(l, 2))
                o.fail(std::string(1, family_letter(f)) + str(l) + " fails");
        }
    if (o.pass) o.detail = "A * sum(positive roots) = (2,...,2) for ranks to 30";
    return o;
}

template <class Fn>
void each_diagram(int max_rank, Fn&& fn) {
    for (Family f : kAllFamilies)
        for (int l = minimum_rank(f); l <= max_rank; ++l)
            for (const auto& d : enumerate_diagrams(f, l, false)) fn(d);
}

Outcome criterion3() {
    Outcome o;
    const auto start = Clock::now();
    std::int64_t n = 0;
    each_diagram(10, [&](const VoganDiagram& d) {
        try {
            xi_oracle(d);
            ++n;
        } catch (const OracleInconsistency& e) {
            o.fail(e.what());
        }
    });
    const double t = seconds_since(start);
    if (t >= 120.0) o.fail("took " + str(t) + " s");
    if (o.pass) o.detail = str(n) + " diagrams, both routes agree, " + str(t) + " s";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::int64_t n = 0;
    for (int l = 1; l <= 14; ++l)
        for (const auto& d : enumerate_diagrams(Family::A, l, false)) {
            if (xi_published_all(d).on_painted != xi_oracle(d).on_painted) o.fail("mismatch at " + d.to_string());
            ++n;
        }
    if (xi_published_all(VoganDiagram(Family::A, 1, {1})).on_painted != XiMap{{1, -4}}) o.fail("A1{1} anchor");
    if (xi_published_all(VoganDiagram(Family::A, 2, {1})).on_painted != XiMap{{1, -6}}) o.fail("A2{1} anchor");
    if (xi_published_all(VoganDiagram(Family::A, 5, {2, 4})).on_painted != XiMap{{2, 0}, {4, 0}})
        o.fail("A5{2,4} anchor");
    if (o.pass) o.detail = str(n) + " diagrams to rank 14, zero mismatches; anchors -4, -6, (0,0)";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::int64_t n = 0;
    each_diagram(10, [&](const VoganDiagram& d) {
        if (xi_mid_all(d).on_painted != xi_oracle(d).on_painted) o.fail("mismatch at " + d.to_string());
        ++n;
    });
    if (o.pass) o.detail = str(n) + " diagrams to rank 10, zero mismatches";
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto one = [&](Family f, int l, std::vector<int> s) { return audit_diagram(VoganDiagram(f, l, std::move(s))); };
    const auto b2 = one(Family::B, 2, {2});
    if (!(b2.size() == 1 && b2[0].xi_oracle == 0 && b2[0].xi_mid == 0 && b2[0].xi_published == 8))
        o.fail("B2{2} anchor");
    const auto c3 = one(Family::C, 3, {3});
    if (!(c3.size() == 1 && c3[0].xi_oracle == -8 && c3[0].xi_mid == -8 && c3[0].xi_published == 0))
        o.fail("C3{3} anchor");
    const auto b21 = one(Family::B, 2, {1});
    if (!(b21.size() == 1 && b21[0].xi_oracle == -6 && b21[0].xi_mid == -6 && b21[0].xi_published == -6))
        o.fail("B2{1} anchor");
    const auto b3 = one(Family::B, 3, {1, 2});
    if (!(b3.size() == 2 && b3[0].xi_oracle == 8 && b3[0].xi_mid == 8 && b3[0].xi_published == 8 &&
          b3[1].xi_oracle == -6 && b3[1].xi_mid == -6 && b3[1].xi_published == -6))
        o.fail("B3{1,2} anchor");
    const auto report = audit_family(Family::B, 8, 4);
    const auto& at = report.at(Branch::BAtL);
    if (at.offset != -8 || at.offset_residual != 0) o.fail("B-at-l offset " + (at.offset ? str(*at.offset) : "none"));
    for (const auto& c : report.cases)
        if (c.label.branch != Branch::BAtL && c.mismatched != 0) o.fail("mismatch outside B-at-l");
    if (o.pass)
        o.detail = "B2{2} 0 vs 8, C3{3} -8 vs 0, B2{1} and B3{1,2} agree; B-at-l offset c = -8 (" +
                   str(at.mismatched) + "/" + str(at.tested) + " records, residual 0)";
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto a1 = check_diagram(VoganDiagram(Family::A, 1, {1}), XiMethod::Oracle);
    if (!(a1.special && a1.lambda == -1)) o.fail("A1{1}");
    const auto a5 = check_diagram(VoganDiagram(Family::A, 5, {2, 4}), XiMethod::Oracle);
    if (!(a5.special && a5.lambda == 0)) o.fail("A5{2,4}");
    const auto b2 = check_diagram(VoganDiagram(Family::B, 2, {2}), XiMethod::Oracle);
    if (!(b2.special && b2.lambda == 0)) o.fail("B2{2}");
    const auto b3 = check_diagram(VoganDiagram(Family::B, 3, {1, 2}), XiMethod::Oracle);
    if (b3.special) o.fail("B3{1,2}");
    if (o.pass) o.detail = "A1{1} -1, A5{2,4} 0, B2{2} 0, B3{1,2} not special";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::int64_t n = 0;
    auto sorted_values = [](const XiMap& m) {
        std::vector<std::int64_t> v;
        for (auto [k, x] : m) v.push_back(x);
        std::sort(v.begin(), v.end());
        return v;
    };
    for (auto [f, max] : {std::pair{Family::A, 12}, std::pair{Family::D, 10}})
        for (int l = minimum_rank(f); l <= max; ++l)
            for (const auto& d : enumerate_diagrams(f, l, false)) {
                const VoganDiagram image(f, l, automorphism_image(f, l, d.painted()));
                const auto v = check_diagram(d, XiMethod::Oracle);
                const auto w = check_diagram(image, XiMethod::Oracle);
                if (v.special != w.special || v.lambda != w.lambda ||
                    sorted_values(v.xi_on_S) != sorted_values(w.xi_on_S))
                    o.fail("exception at " + d.to_string());
                ++n;
            }
    if (o.pass) o.detail = str(n) + " diagrams (A to 12, D to 10), zero exceptions";
    return o;
}

Outcome criterion9() {
    Outcome o;
    ScanConfig c;
    c.families = {std::begin(kAllFamilies), std::end(kAllFamilies)};
    c.all_families = true;
    c.min_rank = 1;
    c.max_rank = 8;
    std::ostringstream a, b;
    c.jobs = 1;
    const auto s = run_scan(c, a);
    c.jobs = 8;
    run_scan(c, b);
    if (a.str() != b.str()) o.fail("jobs 1 and jobs 8 differ");
    if (o.pass) o.detail = str(s.emitted) + " records, " + str(a.str().size()) + " bytes identical";
    return o;
}

Outcome criterion10() {
    Outcome o;
    const BenchReport r = run_bench(Family::A, 50, 100, 2024);
    if (!r.oracle || !r.speedup) {
        o.fail("oracle path did not run");
        return o;
    }
    if (*r.speedup < 10.0) o.fail("speedup " + str(*r.speedup) + "x");

    std::mt19937_64 rng(99);
    std::vector<int> nodes(10000);
    std::iota(nodes.begin(), nodes.end(), 1);
    std::vector<int> painted;
    std::sample(nodes.begin(), nodes.end(), std::back_inserter(painted), 100, rng);
    const auto start = Clock::now();
    const auto v = check_diagram(VoganDiagram(Family::A, 10000, painted), XiMethod::Published);
    const double ms = seconds_since(start) * 1000.0;
    if (ms >= 100.0) o.fail("l=10^4 check took " + str(ms) + " ms");
    if (v.xi_on_S.size() != 100) o.fail("l=10^4 check returned wrong size");
    o.detail = (o.pass ? "" : o.detail + "; ") + "A50 medians: oracle " + str(r.oracle->median_us) +
               " us, published " + str(r.published.median_us) + " us, speedup " + str(*r.speedup) +
               "x; l=10^4 |S|=100 check " + str(ms) + " ms";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9, criterion10};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")"
                  << std::endl;
    }
    return all ? 0 : 1;
}
