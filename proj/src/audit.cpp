#include "voganscan/audit.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "parallel.hpp"
#include "voganscan/enumerate.hpp"
#include "voganscan/root_system.hpp"

namespace voganscan {

std::vector<AuditRecord> audit_diagram(const VoganDiagram& d) {
    const OracleSums sums = oracle_sums(d);
    const CartanMatrix a = cartan_matrix(d.family(), d.rank());
    const XiReport oracle = xi_oracle(d);

    std::vector<AuditRecord> out;
    out.reserve(static_cast<std::size_t>(d.m()));
    for (int j = 1; j <= d.m(); ++j) {
        const int node = d.index(j);
        const std::int64_t g = gamma_oracle(d, a, sums, j);
        const std::int64_t t = tau_oracle(d, a, sums, j);
        auto [label, published] = xi_published(d, j);
        std::optional<std::int64_t> tau_c;
        try {
            tau_c = tau_closed(d, j);
        } catch (const AmbiguousBranch&) {
        }
        out.push_back(AuditRecord{d, j, node, label, oracle.on_painted.at(node), 2 * (-2 + g + 2 * t), published, g,
                                  t, gamma_closed(d, j), tau_c});
    }
    return out;
}

std::int64_t DiscrepancyReport::total_tested() const noexcept {
    return std::accumulate(cases.begin(), cases.end(), std::int64_t{0},
                           [](std::int64_t s, const CaseDiscrepancy& c) { return s + c.tested; });
}

std::int64_t DiscrepancyReport::total_mismatched() const noexcept {
    return std::accumulate(cases.begin(), cases.end(), std::int64_t{0},
                           [](std::int64_t s, const CaseDiscrepancy& c) { return s + c.mismatched; });
}

std::int64_t DiscrepancyReport::total_mid_mismatched() const noexcept {
    return std::accumulate(cases.begin(), cases.end(), std::int64_t{0},
                           [](std::int64_t s, const CaseDiscrepancy& c) { return s + c.mid_mismatched; });
}

const CaseDiscrepancy& DiscrepancyReport::at(Branch b) const {
    for (const auto& c : cases)
        if (c.label.branch == b) return c;
    throw std::out_of_range("branch not part of this report");
}

namespace {

DiscrepancyReport empty_report(Family f) {
    DiscrepancyReport r;
    r.family = f;
    r.min_rank = minimum_rank(f);
    r.max_rank = r.min_rank - 1;
    for (Branch b : kAllBranches)
        if (branch_family(b) == f) {
            CaseDiscrepancy c;
            c.label = CaseLabel{f, b};
            r.cases.push_back(std::move(c));
        }
    return r;
}

CaseDiscrepancy& slot(DiscrepancyReport& r, Branch b) {
    for (auto& c : r.cases)
        if (c.label.branch == b) return c;
    throw std::logic_error("branch from another family");
}

Counterexample counterexample(const AuditRecord& rec, std::int64_t expected, std::int64_t actual) {
    auto p = rec.diagram.painted();
    return Counterexample{rec.diagram.rank(), {p.begin(), p.end()}, rec.node, expected, actual};
}

void absorb(DiscrepancyReport& r, const AuditRecord& rec) {
    CaseDiscrepancy& c = slot(r, rec.label.branch);
    ++c.tested;
    ++c.differences[rec.xi_oracle - rec.xi_published];
    if (!rec.published_agrees()) {
        ++c.mismatched;
        if (!c.first_counterexample) c.first_counterexample = counterexample(rec, rec.xi_oracle, rec.xi_published);
    }
    if (!rec.mid_agrees()) ++c.mid_mismatched;
    if (!rec.gamma_agrees()) {
        ++c.gamma_mismatched;
        if (!c.first_gamma_counterexample)
            c.first_gamma_counterexample = counterexample(rec, rec.gamma_oracle, rec.gamma_closed);
    }
    if (!rec.tau_closed) ++c.tau_undefined;
    if (!rec.tau_agrees()) {
        ++c.tau_mismatched;
        if (!c.first_tau_counterexample && rec.tau_closed)
            c.first_tau_counterexample = counterexample(rec, rec.tau_oracle, *rec.tau_closed);
    }
}

/// Appends `later` (covering diagrams after those in `into`) to `into`.
void merge(DiscrepancyReport& into, const DiscrepancyReport& later) {
    into.diagrams += later.diagrams;
    for (const auto& src : later.cases) {
        CaseDiscrepancy& dst = slot(into, src.label.branch);
        dst.tested += src.tested;
        dst.mismatched += src.mismatched;
        dst.mid_mismatched += src.mid_mismatched;
        dst.gamma_mismatched += src.gamma_mismatched;
        dst.tau_mismatched += src.tau_mismatched;
        dst.tau_undefined += src.tau_undefined;
        if (!dst.first_counterexample) dst.first_counterexample = src.first_counterexample;
        if (!dst.first_gamma_counterexample) dst.first_gamma_counterexample = src.first_gamma_counterexample;
        if (!dst.first_tau_counterexample) dst.first_tau_counterexample = src.first_tau_counterexample;
        for (auto [diff, n] : src.differences) dst.differences[diff] += n;
    }
}

void fit_offsets(DiscrepancyReport& r) {
    for (auto& c : r.cases) {
        if (c.differences.empty()) {
            c.offset.reset();
            c.offset_residual = 0;
            continue;
        }
        auto better = [](std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
            if (a.second != b.second) return a.second > b.second;
            if (std::llabs(a.first) != std::llabs(b.first)) return std::llabs(a.first) < std::llabs(b.first);
            return a.first < b.first;
        };
        std::pair<std::int64_t, std::int64_t> best = *c.differences.begin();
        for (const auto& entry : c.differences)
            if (better(entry, best)) best = entry;
        c.offset = best.first;
        c.offset_residual = c.tested - best.second;
    }
}

}  // namespace

DiscrepancyReport audit_family(Family family, int max_rank, int jobs) {
    require_rank(family, max_rank);
    const int cap = oracle_rank_cap();
    DiscrepancyReport report = empty_report(family);

    for (int rank = minimum_rank(family); rank <= max_rank; ++rank) {
        if (rank > cap) {
            fit_offsets(report);
            throw AuditCapExceeded("audit stopped at rank " + std::to_string(rank - 1) + ": oracle cap is " +
                                       std::to_string(cap),
                                   rank, cap, report);
        }
        const std::vector<VoganDiagram> diagrams = enumerate_diagrams(family, rank, false);
        std::vector<DiscrepancyReport> partial(static_cast<std::size_t>(std::max(jobs, 1)), empty_report(family));
        const std::size_t used = detail::parallel_chunks(diagrams.size(), jobs, [&](std::size_t w, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                for (const AuditRecord& rec : audit_diagram(diagrams[i])) absorb(partial[w], rec);
                ++partial[w].diagrams;
            }
        });
        for (std::size_t w = 0; w < used; ++w) merge(report, partial[w]);
        report.max_rank = rank;
    }
    fit_offsets(report);
    return report;
}

namespace {

nlohmann::ordered_json to_json(const std::optional<Counterexample>& c) {
    if (!c) return nullptr;
    nlohmann::ordered_json j;
    j["rank"] = c->rank;
    j["painted"] = c->painted;
    j["node"] = c->node;
    j["oracle"] = c->expected;
    j["closed"] = c->actual;
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const DiscrepancyReport& r) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_letter(r.family));
    j["min_rank"] = r.min_rank;
    j["max_rank"] = r.max_rank;
    j["diagrams"] = r.diagrams;
    j["records"] = r.total_tested();
    j["published_mismatched"] = r.total_mismatched();
    j["mid_mismatched"] = r.total_mid_mismatched();
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        nlohmann::ordered_json e;
        e["case"] = std::string(to_string(c.label.branch));
        e["tested"] = c.tested;
        e["mismatched"] = c.mismatched;
        e["first_counterexample"] = to_json(c.first_counterexample);
        e["offset"] = c.offset ? nlohmann::ordered_json(*c.offset) : nlohmann::ordered_json(nullptr);
        e["offset_residual"] = c.offset_residual;
        e["mid_mismatched"] = c.mid_mismatched;
        e["gamma_mismatched"] = c.gamma_mismatched;
        e["first_gamma_counterexample"] = to_json(c.first_gamma_counterexample);
        e["tau_mismatched"] = c.tau_mismatched;
        e["tau_undefined"] = c.tau_undefined;
        e["first_tau_counterexample"] = to_json(c.first_tau_counterexample);
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    return j;
}

}  // namespace voganscan
