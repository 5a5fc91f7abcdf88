#include "voganscan/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "voganscan/closed_form.hpp"
#include "voganscan/enumerate.hpp"
#include "voganscan/errors.hpp"
#include "voganscan/speciality.hpp"

namespace voganscan {

namespace {

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const OracleInconsistency*>(&e)) return "OracleInconsistency";
    if (dynamic_cast<const AmbiguousBranch*>(&e)) return "AmbiguousBranch";
    if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
    if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
    if (dynamic_cast<const ParityError*>(&e)) return "ParityError";
    if (dynamic_cast<const EmptyInput*>(&e)) return "EmptyInput";
    if (dynamic_cast<const IndexError*>(&e)) return "IndexError";
    if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
    if (dynamic_cast<const InvalidDiagram*>(&e)) return "InvalidDiagram";
    if (dynamic_cast<const InvalidRank*>(&e)) return "InvalidRank";
    return "Error";
}

constexpr const char* kInconsistency = "Inconsistency";

bool is_inconsistency(const ScanRecord& r) {
    return r.error && (r.error->rfind("OracleInconsistency", 0) == 0 || r.error->rfind(kInconsistency, 0) == 0);
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long to_ll(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

Family family_of(const std::string& s) {
    auto f = parse_family(s);
    if (!f) throw std::invalid_argument("unknown family: " + s);
    return *f;
}

XiMethod method_of(const std::string& s) {
    auto m = parse_method(s);
    if (!m) throw std::invalid_argument("unknown method: " + s);
    return *m;
}

}  // namespace

void validate(const ScanConfig& c) {
    if (c.families.empty()) throw std::invalid_argument("no family selected");
    if (c.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
    if (c.min_rank > c.max_rank) throw std::invalid_argument("--min-rank exceeds --max-rank");
    if (c.max_rank > kMaxScanRank)
        throw InvalidRank("exhaustive scans are limited to rank " + std::to_string(kMaxScanRank));
    if (c.lambda && (*c.lambda < -1 || *c.lambda > 1)) throw std::invalid_argument("--lambda must be -1, 0 or 1");
    if (!c.all_families)
        for (Family f : c.families) require_rank(f, c.min_rank);
}

ScanRecord scan_one(const VoganDiagram& d, XiMethod method, bool strict) {
    ScanRecord r;
    r.family = d.family();
    r.rank = d.rank();
    r.painted.assign(d.painted().begin(), d.painted().end());
    r.method = method;
    try {
        DiagramEvaluation e = evaluate_diagram(d, method);
        if (strict) {
            const XiReport oracle = method == XiMethod::Oracle ? e.xi : xi_oracle(d);
            const XiReport mid = method == XiMethod::Mid ? e.xi : xi_mid_all(d);
            if (mid.on_painted != oracle.on_painted) {
                for (auto [node, v] : oracle.on_painted) {
                    if (mid.on_painted.at(node) != v) {
                        r.error = std::string(kInconsistency) + ": xi_mid " + std::to_string(mid.on_painted.at(node)) +
                                  " != xi_oracle " + std::to_string(v) + " at node " + std::to_string(node);
                        break;
                    }
                }
                return r;
            }
        }
        r.xi = e.xi.on_painted;
        r.special = e.verdict.special;
        r.lambda = e.verdict.lambda;
        for (const CaseLabel& l : e.cases) r.cases.emplace_back(to_string(l.branch));
    } catch (const Error& ex) {
        r = ScanRecord{r.family, r.rank, r.painted, {}, false, std::nullopt, method, {}, error_kind(ex) + ": " + ex.what()};
    }
    return r;
}

nlohmann::ordered_json to_json(const ScanRecord& r) {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_letter(r.family));
    j["rank"] = r.rank;
    j["painted"] = r.painted;
    nlohmann::ordered_json xi = nlohmann::ordered_json::object();
    for (auto [node, v] : r.xi) xi[std::to_string(node)] = v;
    j["xi"] = std::move(xi);
    j["special"] = r.special;
    j["lambda"] = r.lambda ? nlohmann::ordered_json(*r.lambda) : nlohmann::ordered_json(nullptr);
    j["method"] = std::string(to_string(r.method));
    j["cases"] = r.cases;
    if (r.error) j["error"] = *r.error;
    return j;
}

std::string to_jsonl(const ScanRecord& r) { return to_json(r).dump(); }

ScanRecord parse_jsonl(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    ScanRecord r;
    r.family = family_of(j.at("family").get<std::string>());
    r.rank = j.at("rank").get<int>();
    r.painted = j.at("painted").get<std::vector<int>>();
    for (const auto& [k, v] : j.at("xi").items()) r.xi.emplace(static_cast<int>(to_ll(k)), v.get<std::int64_t>());
    r.special = j.at("special").get<bool>();
    if (!j.at("lambda").is_null()) r.lambda = j.at("lambda").get<int>();
    r.method = method_of(j.at("method").get<std::string>());
    r.cases = j.at("cases").get<std::vector<std::string>>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
}

std::string to_csv(const ScanRecord& r) {
    std::string xi;
    for (auto [node, v] : r.xi) {
        if (!xi.empty()) xi += ';';
        xi += std::to_string(node) + ':' + std::to_string(v);
    }
    std::string cases;
    for (const auto& c : r.cases) {
        if (!cases.empty()) cases += ';';
        cases += c;
    }
    std::string out;
    out += family_letter(r.family);
    out += ',' + std::to_string(r.rank) + ',' + join_ints(r.painted) + ',' + xi + ',';
    out += r.special ? "true" : "false";
    out += ',' + (r.lambda ? std::to_string(*r.lambda) : std::string()) + ',';
    out += std::string(to_string(r.method)) + ',' + cases + ',';
    if (r.error) {
        out += '"';
        for (char c : *r.error) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
    }
    return out;
}

ScanRecord parse_csv(const std::string& line) {
    // Only the trailing error column may be quoted.
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (int k = 0; k < 8; ++k) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) throw std::invalid_argument("CSV record has too few fields");
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    std::string tail = line.substr(pos);
    std::optional<std::string> error;
    if (!tail.empty()) {
        if (tail.size() < 2 || tail.front() != '"' || tail.back() != '"')
            throw std::invalid_argument("CSV error column must be quoted");
        std::string e;
        for (std::size_t i = 1; i + 1 < tail.size(); ++i) {
            e += tail[i];
            if (tail[i] == '"') ++i;
        }
        error = e;
    }

    ScanRecord r;
    r.family = family_of(fields[0]);
    r.rank = static_cast<int>(to_ll(fields[1]));
    for (const auto& p : split(fields[2], ';')) r.painted.push_back(static_cast<int>(to_ll(p)));
    for (const auto& entry : split(fields[3], ';')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad xi entry: " + entry);
        r.xi.emplace(static_cast<int>(to_ll(entry.substr(0, colon))), to_ll(entry.substr(colon + 1)));
    }
    if (fields[4] != "true" && fields[4] != "false") throw std::invalid_argument("bad special flag: " + fields[4]);
    r.special = fields[4] == "true";
    if (!fields[5].empty()) r.lambda = static_cast<int>(to_ll(fields[5]));
    r.method = method_of(fields[6]);
    r.cases = split(fields[7], ';');
    r.error = error;
    return r;
}

namespace {

bool keep(const ScanConfig& c, const ScanRecord& r) {
    if (r.error) return true;
    if (c.only_special && !r.special) return false;
    if (c.lambda && r.lambda != c.lambda) return false;
    return true;
}

constexpr std::size_t kWindow = 4096;

}  // namespace

ScanSummary run_scan(const ScanConfig& config, std::ostream& out, std::ostream* progress) {
    validate(config);
    ScanSummary summary;
    if (config.format == OutputFormat::Csv) out << kCsvHeader << '\n';

    std::vector<std::vector<int>> window;
    std::vector<ScanRecord> results;
    for (Family family : config.families) {
        const int lo = std::max(config.min_rank, minimum_rank(family));
        for (int rank = lo; rank <= config.max_rank; ++rank) {
            std::int64_t rank_emitted = 0;
            std::int64_t rank_evaluated = 0;
            std::vector<int> painted{1};
            bool more = true;
            while (more) {
                window.clear();
                while (more && window.size() < kWindow) {
                    if (!config.dedup || is_canonical(family, rank, painted)) window.push_back(painted);
                    more = next_painted_set(painted, rank);
                }
                results.assign(window.size(), ScanRecord{});
                detail::parallel_chunks(window.size(), config.jobs, [&](std::size_t, std::size_t b, std::size_t e) {
                    for (std::size_t i = b; i < e; ++i)
                        results[i] = scan_one(VoganDiagram(family, rank, window[i]), config.method, config.strict);
                });
                for (const ScanRecord& r : results) {
                    ++summary.evaluated;
                    ++rank_evaluated;
                    ++summary.counts[SummaryKey{family, rank, r.lambda}];
                    if (r.error) ++summary.errors;
                    if (is_inconsistency(r)) ++summary.inconsistencies;
                    if (!keep(config, r)) continue;
                    out << (config.format == OutputFormat::Jsonl ? to_jsonl(r) : to_csv(r)) << '\n';
                    ++summary.emitted;
                    ++rank_emitted;
                }
                if (!out) throw IoError("failed writing scan output");
            }
            if (progress)
                *progress << "scan " << family_letter(family) << rank << ": " << rank_evaluated << " diagrams, "
                          << rank_emitted << " records\n";
        }
    }
    out.flush();
    if (!out) throw IoError("failed writing scan output");
    return summary;
}

void write_summary(const ScanSummary& s, std::ostream& os) {
    os << "summary: " << s.evaluated << " diagrams, " << s.emitted << " records, " << s.errors << " errors, "
       << s.inconsistencies << " inconsistencies\n";
    for (const auto& [key, n] : s.counts) {
        os << "  " << family_letter(key.family) << key.rank << " lambda="
           << (key.lambda ? std::to_string(*key.lambda) : std::string("none")) << ": " << n << '\n';
    }
}

namespace {

PathTiming summarize(std::vector<double> us) {
    std::sort(us.begin(), us.end());
    PathTiming t;
    const std::size_t n = us.size();
    t.median_us = n % 2 ? us[n / 2] : (us[n / 2 - 1] + us[n / 2]) / 2;
    const std::size_t idx = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(n))) - 1;
    t.p95_us = us[std::min(idx, n - 1)];
    return t;
}

// Timed results land here so the calls cannot be optimised away.
volatile std::int64_t g_sink = 0;

template <class Fn>
double time_us(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::micro>(stop - start).count();
}

std::vector<int> sample_painted(std::mt19937_64& rng, int rank, std::optional<int> count) {
    std::vector<int> painted;
    if (count) {
        std::vector<int> all(static_cast<std::size_t>(rank));
        std::iota(all.begin(), all.end(), 1);
        std::sample(all.begin(), all.end(), std::back_inserter(painted), *count, rng);
        return painted;
    }
    std::bernoulli_distribution coin(0.5);
    while (painted.empty()) {
        for (int i = 1; i <= rank; ++i)
            if (coin(rng)) painted.push_back(i);
    }
    return painted;
}

}  // namespace

BenchReport run_bench(Family family, int rank, int samples, std::uint64_t seed, std::optional<int> painted_count) {
    require_rank(family, rank);
    if (samples < 1) throw std::invalid_argument("--samples must be at least 1");
    if (painted_count && (*painted_count < 1 || *painted_count > rank))
        throw std::invalid_argument("painted count must lie in 1..rank");

    BenchReport report;
    report.family = family;
    report.rank = rank;
    report.samples = samples;
    report.seed = seed;

    std::mt19937_64 rng(seed);
    std::vector<VoganDiagram> diagrams;
    diagrams.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) diagrams.emplace_back(family, rank, sample_painted(rng, rank, painted_count));

    std::vector<double> published;
    for (const auto& d : diagrams)
        published.push_back(time_us([&] { g_sink = xi_published_all(d).on_painted.begin()->second; }));
    report.published = summarize(published);

    try {
        require_oracle_rank(rank);
        std::vector<double> oracle;
        for (const auto& d : diagrams)
            oracle.push_back(time_us([&] { g_sink = xi_oracle(d).on_painted.begin()->second; }));
        report.oracle = summarize(oracle);
        report.speedup = report.oracle->median_us / std::max(report.published.median_us, 1e-3);
    } catch (const CapExceeded& e) {
        report.oracle_skipped = std::string("CapExceeded: ") + e.what();
    }
    report.noise_dominated = samples < 10 || !report.oracle || report.oracle->median_us < 10.0;
    return report;
}

nlohmann::ordered_json to_json(const BenchReport& r) {
    auto timing = [](const PathTiming& t) {
        nlohmann::ordered_json j;
        j["median_us"] = t.median_us;
        j["p95_us"] = t.p95_us;
        return j;
    };
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_letter(r.family));
    j["rank"] = r.rank;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["published"] = timing(r.published);
    j["oracle"] = r.oracle ? timing(*r.oracle) : nlohmann::ordered_json(nullptr);
    if (r.oracle_skipped) j["oracle_skipped"] = *r.oracle_skipped;
    j["speedup"] = r.speedup ? nlohmann::ordered_json(*r.speedup) : nlohmann::ordered_json(nullptr);
    j["noise_dominated"] = r.noise_dominated;
    return j;
}

}  // namespace voganscan
