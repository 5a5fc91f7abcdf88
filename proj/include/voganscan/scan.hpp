#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "voganscan/root_system.hpp"
#include "voganscan/vogan_diagram.hpp"

namespace voganscan {

enum class OutputFormat { Jsonl, Csv };

struct ScanConfig {
    std::vector<Family> families;
    /// Families came from "all": ranks below a family's minimum are skipped
    /// instead of rejected.
    bool all_families = false;
    int min_rank = 1;
    int max_rank = 1;
    XiMethod method = XiMethod::Oracle;
    bool only_special = false;
    std::optional<int> lambda;
    bool dedup = false;
    int jobs = 1;
    /// Cross-check xi_mid against the oracle for every diagram.
    bool strict = false;
    OutputFormat format = OutputFormat::Jsonl;
};

/// Highest rank an exhaustive scan accepts.
inline constexpr int kMaxScanRank = 30;

/// Throws InvalidRank / std::invalid_argument on a bad config.
void validate(const ScanConfig& config);

struct ScanRecord {
    Family family = Family::A;
    int rank = 0;
    std::vector<int> painted;
    std::map<int, std::int64_t> xi;
    bool special = false;
    std::optional<int> lambda;
    XiMethod method = XiMethod::Oracle;
    std::vector<std::string> cases;
    /// "<Kind>: message" when evaluating this diagram failed.
    std::optional<std::string> error;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Evaluates one diagram; never throws for per-diagram failures.
ScanRecord scan_one(const VoganDiagram& diagram, XiMethod method, bool strict);

nlohmann::ordered_json to_json(const ScanRecord& record);
std::string to_jsonl(const ScanRecord& record);
ScanRecord parse_jsonl(const std::string& line);

inline constexpr const char* kCsvHeader = "family,rank,painted,xi,special,lambda,method,cases,error";
std::string to_csv(const ScanRecord& record);
ScanRecord parse_csv(const std::string& line);

struct SummaryKey {
    Family family;
    int rank;
    std::optional<int> lambda;  ///< empty: not special or failed

    friend auto operator<=>(const SummaryKey&, const SummaryKey&) = default;
};

struct ScanSummary {
    /// Every evaluated diagram, before filtering.
    std::map<SummaryKey, std::int64_t> counts;
    std::int64_t evaluated = 0;
    std::int64_t emitted = 0;
    std::int64_t errors = 0;
    /// Oracle self-disagreement, or xi_mid != xi_oracle under strict.
    std::int64_t inconsistencies = 0;
};

/// Writes matching records to out in canonical order (family, rank, painted
/// lexicographic). Bytes written do not depend on config.jobs. Throws
/// IoError if out goes bad.
ScanSummary run_scan(const ScanConfig& config, std::ostream& out, std::ostream* progress = nullptr);

void write_summary(const ScanSummary& summary, std::ostream& os);

struct PathTiming {
    double median_us = 0;
    double p95_us = 0;
};

struct BenchReport {
    Family family = Family::A;
    int rank = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    PathTiming published;
    std::optional<PathTiming> oracle;
    std::optional<std::string> oracle_skipped;
    std::optional<double> speedup;  ///< oracle median / published median
    bool noise_dominated = false;
};

/// Times the oracle and published paths per diagram on random painted sets.
/// Sets are uniform over nonempty subsets, or uniform over subsets of size
/// painted_count when given. The oracle side is skipped above its cap.
BenchReport run_bench(Family family, int rank, int samples, std::uint64_t seed = 1,
                      std::optional<int> painted_count = std::nullopt);

nlohmann::ordered_json to_json(const BenchReport& report);

}  // namespace voganscan
