#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "voganscan/closed_form.hpp"
#include "voganscan/root_system.hpp"
#include "voganscan/vogan_diagram.hpp"

namespace voganscan {

struct ClassifyOptions {
    /// Strict: lambda = +1 needs every value > 0, -1 every value < 0.
    /// Weak: zeros may accompany a single strict sign.
    bool strict = true;
    /// Reject odd values (every xi path produces even integers).
    bool check_parity = true;
};

struct SpecialityVerdict {
    bool special = false;
    std::optional<int> lambda;
    std::map<int, std::int64_t> xi_on_S;
    /// lambda * xi_i >= 0 over every node. Only known when the full xi
    /// vector is available (oracle path) and lambda is +-1.
    std::optional<bool> dominance_ok;
    /// Weak mode accepted zeros next to a strict sign.
    bool zeros_mixed = false;
};

/// Uniform-sign test on the painted xi values. EmptyInput on an empty map,
/// ParityError on odd values when check_parity is set.
SpecialityVerdict classify(const std::map<int, std::int64_t>& xi_on_S, ClassifyOptions options = {});

/// lambda * xi_i >= 0 for all i.
bool dominant_for(int lambda, const WeightCoords& full_xi) noexcept;

struct DiagramEvaluation {
    XiReport xi;
    SpecialityVerdict verdict;
    /// Theorem branch per painted position; filled for the published path.
    std::vector<CaseLabel> cases;
};

DiagramEvaluation evaluate_diagram(const VoganDiagram& diagram, XiMethod method, ClassifyOptions options = {});

SpecialityVerdict check_diagram(const VoganDiagram& diagram, XiMethod method, ClassifyOptions options = {});

}  // namespace voganscan
