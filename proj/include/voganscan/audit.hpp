#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "voganscan/closed_form.hpp"
#include "voganscan/errors.hpp"
#include "voganscan/vogan_diagram.hpp"

namespace voganscan {

/// Three-way comparison at one painted position.
struct AuditRecord {
    VoganDiagram diagram;
    int position;  ///< j, 1-based position in the painted set
    int node;      ///< i_j
    CaseLabel label;
    std::int64_t xi_oracle;
    std::int64_t xi_mid;
    std::int64_t xi_published;
    std::int64_t gamma_oracle;
    std::int64_t tau_oracle;
    std::int64_t gamma_closed;
    /// Empty when the printed tau expression is undefined for this input.
    std::optional<std::int64_t> tau_closed;

    bool mid_agrees() const noexcept { return xi_mid == xi_oracle; }
    bool published_agrees() const noexcept { return xi_published == xi_oracle; }
    bool gamma_agrees() const noexcept { return gamma_closed == gamma_oracle; }
    bool tau_agrees() const noexcept { return tau_closed && *tau_closed == tau_oracle; }
};

/// One record per painted position. Subject to the oracle rank cap.
std::vector<AuditRecord> audit_diagram(const VoganDiagram& diagram);

struct Counterexample {
    int rank = 0;
    std::vector<int> painted;
    int node = 0;
    std::int64_t expected = 0;  ///< oracle value
    std::int64_t actual = 0;    ///< value under audit

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CaseDiscrepancy {
    CaseLabel label;
    std::int64_t tested = 0;
    std::int64_t mismatched = 0;  ///< published != oracle
    std::optional<Counterexample> first_counterexample;
    /// Integer c maximising matches of published + c against the oracle
    /// (ties: smaller |c|, then smaller c). Absent when nothing was tested.
    std::optional<std::int64_t> offset;
    /// Records still mismatched after adding the offset.
    std::int64_t offset_residual = 0;
    std::int64_t mid_mismatched = 0;
    std::int64_t gamma_mismatched = 0;
    std::int64_t tau_mismatched = 0;  ///< includes undefined printed tau
    std::int64_t tau_undefined = 0;
    std::optional<Counterexample> first_gamma_counterexample;
    std::optional<Counterexample> first_tau_counterexample;
    /// oracle - published -> count
    std::map<std::int64_t, std::int64_t> differences;
};

struct DiscrepancyReport {
    Family family;
    int min_rank = 0;
    int max_rank = 0;  ///< highest rank actually swept
    std::int64_t diagrams = 0;
    std::vector<CaseDiscrepancy> cases;  ///< one entry per branch of the family, branch order

    std::int64_t total_tested() const noexcept;
    std::int64_t total_mismatched() const noexcept;
    std::int64_t total_mid_mismatched() const noexcept;
    const CaseDiscrepancy& at(Branch b) const;
};

/// Raised by audit_family when max_rank is above the oracle cap; carries the
/// report for the ranks that were swept.
class AuditCapExceeded : public CapExceeded {
public:
    AuditCapExceeded(const std::string& what, int rank, int cap, DiscrepancyReport partial)
        : CapExceeded(what, rank, cap), partial_(std::move(partial)) {}
    const DiscrepancyReport& partial() const noexcept { return partial_; }

private:
    DiscrepancyReport partial_;
};

/// Exhaustive sweep over every nonempty painted set for ranks
/// minimum_rank(family)..max_rank. Output does not depend on jobs.
DiscrepancyReport audit_family(Family family, int max_rank, int jobs = 1);

nlohmann::ordered_json to_json(const DiscrepancyReport& report);

}  // namespace voganscan
