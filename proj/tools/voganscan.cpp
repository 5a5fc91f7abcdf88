// voganscan: command-line front end.
//
// Exit codes: 0 success, 1 invalid arguments, 2 internal inconsistency,
// 3 I/O failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "voganscan/audit.hpp"
#include "voganscan/closed_form.hpp"
#include "voganscan/errors.hpp"
#include "voganscan/scan.hpp"
#include "voganscan/speciality.hpp"

using namespace voganscan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family family_arg(const std::string& s) {
    auto f = parse_family(s);
    if (!f) throw UsageError("unknown family '" + s + "' (expected A, B, C or D)");
    return *f;
}

std::vector<Family> families_arg(const std::string& s, bool& all) {
    all = s == "all";
    if (all) return {std::begin(kAllFamilies), std::end(kAllFamilies)};
    return {family_arg(s)};
}

std::vector<int> painted_arg(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad painted index '" + item + "'");
        }
    }
    return out;
}

/// Output sink: stdout, or a file opened up front so open failures map to
/// the I/O exit code before any work is done.
class Sink {
public:
    explicit Sink(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) throw IoError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) throw IoError("failed writing '" + (path_.empty() ? std::string("stdout") : path_) + "'");
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
};

std::string lambda_text(const std::optional<int>& l) { return l ? std::to_string(*l) : "none"; }

// check ----------------------------------------------------------------------

struct CheckArgs {
    std::string family;
    int rank = 0;
    std::string painted;
    std::string method = "all";
    std::string format = "text";
    bool strict = false;
};

int run_check(const CheckArgs& a) {
    const VoganDiagram d(family_arg(a.family), a.rank, painted_arg(a.painted));
    std::vector<XiMethod> methods;
    if (a.method == "all") {
        methods = {XiMethod::Oracle, XiMethod::Mid, XiMethod::Published};
    } else {
        auto m = parse_method(a.method);
        if (!m) throw UsageError("unknown method '" + a.method + "'");
        methods = {*m};
    }

    nlohmann::ordered_json out;
    out["diagram"] = d.to_string();
    auto results = nlohmann::ordered_json::array();
    std::ostringstream text;
    text << d.to_string() << '\n';
    std::optional<std::map<int, std::int64_t>> oracle_xi;
    std::optional<std::map<int, std::int64_t>> mid_xi;
    bool inconsistent = false;

    for (XiMethod m : methods) {
        nlohmann::ordered_json r;
        r["method"] = std::string(to_string(m));
        text << "  " << to_string(m) << ":";
        try {
            const DiagramEvaluation e = evaluate_diagram(d, m);
            if (m == XiMethod::Oracle) oracle_xi = e.xi.on_painted;
            if (m == XiMethod::Mid) mid_xi = e.xi.on_painted;
            nlohmann::ordered_json xi = nlohmann::ordered_json::object();
            for (auto [node, v] : e.xi.on_painted) {
                xi[std::to_string(node)] = v;
                text << " xi_" << node << "=" << v;
            }
            r["xi"] = std::move(xi);
            r["special"] = e.verdict.special;
            r["lambda"] = e.verdict.lambda ? nlohmann::ordered_json(*e.verdict.lambda) : nlohmann::ordered_json(nullptr);
            text << "  special=" << (e.verdict.special ? "yes" : "no") << " lambda=" << lambda_text(e.verdict.lambda);
            if (e.xi.full) {
                r["xi_full"] = e.xi.full->values;
                if (e.verdict.dominance_ok) {
                    r["dominant"] = *e.verdict.dominance_ok;
                    text << " dominant=" << (*e.verdict.dominance_ok ? "yes" : "no");
                }
            }
            if (!e.cases.empty()) {
                auto cases = nlohmann::ordered_json::array();
                text << " cases=";
                for (std::size_t k = 0; k < e.cases.size(); ++k) {
                    cases.push_back(std::string(to_string(e.cases[k].branch)));
                    text << (k ? "," : "") << to_string(e.cases[k].branch);
                }
                r["cases"] = std::move(cases);
            }
        } catch (const OracleInconsistency& ex) {
            inconsistent = true;
            r["error"] = std::string("OracleInconsistency: ") + ex.what();
            text << " error: " << ex.what();
        } catch (const CapExceeded& ex) {
            r["error"] = std::string("CapExceeded: ") + ex.what();
            text << " skipped: " << ex.what();
        } catch (const AmbiguousBranch& ex) {
            r["error"] = std::string("AmbiguousBranch: ") + ex.what();
            text << " error: " << ex.what();
        }
        text << '\n';
        results.push_back(std::move(r));
    }

    if (a.strict) {
        try {
            if (!oracle_xi) oracle_xi = xi_oracle(d).on_painted;
            if (!mid_xi) mid_xi = xi_mid_all(d).on_painted;
            if (*oracle_xi != *mid_xi) {
                inconsistent = true;
                text << "  strict: xi_mid differs from xi_oracle\n";
            }
        } catch (const OracleInconsistency&) {
            inconsistent = true;
        }
    }

    out["results"] = std::move(results);
    if (a.format == "json") {
        std::cout << out.dump() << '\n';
    } else {
        std::cout << text.str();
    }
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing stdout");
    return inconsistent ? kExitInconsistent : kExitOk;
}

// scan -----------------------------------------------------------------------

struct ScanArgs {
    std::string family;
    int min_rank = 0;
    int max_rank = 0;
    std::string method = "oracle";
    bool only_special = false;
    std::optional<int> lambda;
    bool dedup = false;
    int jobs = 1;
    std::string out;
    std::string format = "jsonl";
    bool strict = false;
    bool quiet = false;
};

int run_scan_cmd(const ScanArgs& a) {
    ScanConfig c;
    c.families = families_arg(a.family, c.all_families);
    c.min_rank = a.min_rank;
    c.max_rank = a.max_rank;
    auto m = parse_method(a.method);
    if (!m) throw UsageError("unknown method '" + a.method + "' (scan takes oracle, mid or published)");
    c.method = *m;
    c.only_special = a.only_special;
    c.lambda = a.lambda;
    c.dedup = a.dedup;
    c.jobs = a.jobs;
    c.strict = a.strict;
    c.format = a.format == "csv" ? OutputFormat::Csv : OutputFormat::Jsonl;
    validate(c);

    Sink sink(a.out);
    const ScanSummary s = run_scan(c, sink.stream(), a.quiet ? nullptr : &std::cerr);
    sink.finish();
    if (!a.quiet) write_summary(s, std::cerr);
    return s.inconsistencies > 0 ? kExitInconsistent : kExitOk;
}

// audit ----------------------------------------------------------------------

struct AuditArgs {
    std::string family;
    int max_rank = 0;
    std::string out;
    int jobs = 1;
};

int run_audit_cmd(const AuditArgs& a) {
    bool all = false;
    const std::vector<Family> families = families_arg(a.family, all);
    if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (!all) require_rank(families.front(), a.max_rank);
    Sink sink(a.out);
    auto reports = nlohmann::ordered_json::array();
    bool inconsistent = false;
    for (Family f : families) {
        if (a.max_rank < minimum_rank(f)) continue;
        try {
            const DiscrepancyReport r = audit_family(f, a.max_rank, a.jobs);
            reports.push_back(to_json(r));
            inconsistent = inconsistent || r.total_mid_mismatched() > 0;
            std::cerr << "audit " << family_letter(f) << ": ranks " << r.min_rank << ".." << r.max_rank << ", "
                      << r.total_tested() << " painted positions, " << r.total_mismatched()
                      << " published mismatches\n";
        } catch (const AuditCapExceeded& e) {
            auto j = to_json(e.partial());
            j["stopped_at_cap"] = e.cap();
            reports.push_back(std::move(j));
            std::cerr << "audit " << family_letter(f) << ": " << e.what() << '\n';
        }
    }
    sink.stream() << reports.dump(2) << '\n';
    sink.finish();
    return inconsistent ? kExitInconsistent : kExitOk;
}

// bench ----------------------------------------------------------------------

struct BenchArgs {
    std::string family;
    int rank = 0;
    int samples = 0;
    std::uint64_t seed = 1;
    std::optional<int> painted_count;
};

int run_bench_cmd(const BenchArgs& a) {
    const BenchReport r = run_bench(family_arg(a.family), a.rank, a.samples, a.seed, a.painted_count);
    std::cout << to_json(r).dump() << '\n';
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing stdout");
    std::cerr << "bench " << family_letter(r.family) << r.rank << " x" << r.samples << ": published median "
              << r.published.median_us << " us, p95 " << r.published.p95_us << " us";
    if (r.oracle) {
        std::cerr << "; oracle median " << r.oracle->median_us << " us, p95 " << r.oracle->p95_us << " us; speedup "
                  << *r.speedup << "x";
    } else {
        std::cerr << "; oracle skipped (" << *r.oracle_skipped << ")";
    }
    if (r.noise_dominated) std::cerr << " [noise-dominated]";
    std::cerr << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vogan diagram speciality scanner"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Evaluate one diagram");
    c->add_option("--family", check.family, "A, B, C or D")->required();
    c->add_option("--rank", check.rank, "Rank")->required();
    c->add_option("--painted", check.painted, "Comma-separated painted nodes")->required();
    c->add_option("--method", check.method, "oracle, mid, published or all")
        ->check(CLI::IsMember({"oracle", "mid", "published", "all"}));
    c->add_option("--format", check.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_flag("--strict", check.strict, "Exit 2 if xi_mid differs from the oracle");

    ScanArgs scan;
    auto* s = app.add_subcommand("scan", "Exhaustive scan over painted sets");
    s->add_option("--family", scan.family, "A, B, C, D or all")->required();
    s->add_option("--min-rank", scan.min_rank, "Lowest rank")->required();
    s->add_option("--max-rank", scan.max_rank, "Highest rank")->required();
    s->add_option("--method", scan.method, "oracle, mid or published")
        ->check(CLI::IsMember({"oracle", "mid", "published"}));
    s->add_flag("--only-special", scan.only_special, "Emit special diagrams only");
    s->add_option("--lambda", scan.lambda, "Keep only this lambda")->check(CLI::IsMember({-1, 0, 1}));
    s->add_flag("--dedup", scan.dedup, "One diagram per automorphism orbit");
    s->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::PositiveNumber);
    s->add_option("--out", scan.out, "Output path (default stdout)");
    s->add_option("--format", scan.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    s->add_flag("--strict", scan.strict, "Cross-check xi_mid against the oracle; exit 2 on mismatch");
    s->add_flag("--quiet", scan.quiet, "No progress or summary on stderr");

    AuditArgs audit;
    auto* au = app.add_subcommand("audit", "Compare printed formulas against the oracle");
    au->add_option("--family", audit.family, "A, B, C, D or all")->required();
    au->add_option("--max-rank", audit.max_rank, "Highest rank")->required();
    au->add_option("--out", audit.out, "Output path (default stdout)");
    au->add_option("--jobs", audit.jobs, "Worker threads")->check(CLI::PositiveNumber);

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time oracle vs closed-form evaluation");
    b->add_option("--family", bench.family, "A, B, C or D")->required();
    b->add_option("--rank", bench.rank, "Rank")->required();
    b->add_option("--samples", bench.samples, "Random painted sets")->required();
    b->add_option("--seed", bench.seed, "RNG seed");
    b->add_option("--painted-count", bench.painted_count, "Fixed painted set size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c) return run_check(check);
        if (*s) return run_scan_cmd(scan);
        if (*au) return run_audit_cmd(audit);
        if (*b) return run_bench_cmd(bench);
    } catch (const IoError& e) {
        std::cerr << "voganscan: " << e.what() << '\n';
        return kExitIo;
    } catch (const OracleInconsistency& e) {
        std::cerr << "voganscan: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const UsageError& e) {
        std::cerr << "voganscan: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "voganscan: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "voganscan: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
