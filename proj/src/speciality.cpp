#include "voganscan/speciality.hpp"

#include <algorithm>

#include "voganscan/errors.hpp"

namespace voganscan {

SpecialityVerdict classify(const std::map<int, std::int64_t>& xi_on_S, ClassifyOptions options) {
    if (xi_on_S.empty()) throw EmptyInput("cannot classify an empty xi map");

    std::size_t positive = 0, negative = 0, zero = 0;
    for (const auto& [node, value] : xi_on_S) {
        if (options.check_parity && value % 2 != 0) {
            throw ParityError("xi at node " + std::to_string(node) + " is odd (" + std::to_string(value) + ")");
        }
        if (value > 0) ++positive;
        else if (value < 0) ++negative;
        else ++zero;
    }

    SpecialityVerdict v;
    v.xi_on_S = xi_on_S;
    const std::size_t n = xi_on_S.size();
    if (zero == n) {
        v.lambda = 0;
    } else if (positive == n || (!options.strict && negative == 0)) {
        v.lambda = 1;
    } else if (negative == n || (!options.strict && positive == 0)) {
        v.lambda = -1;
    }
    v.special = v.lambda.has_value();
    v.zeros_mixed = v.special && *v.lambda != 0 && zero > 0;
    return v;
}

bool dominant_for(int lambda, const WeightCoords& full_xi) noexcept {
    return std::all_of(full_xi.values.begin(), full_xi.values.end(),
                       [&](std::int64_t x) { return lambda * x >= 0; });
}

DiagramEvaluation evaluate_diagram(const VoganDiagram& diagram, XiMethod method, ClassifyOptions options) {
    DiagramEvaluation e;
    switch (method) {
        case XiMethod::Oracle: e.xi = xi_oracle(diagram); break;
        case XiMethod::Mid: e.xi = xi_mid_all(diagram); break;
        case XiMethod::Published:
            e.xi.method = XiMethod::Published;
            e.cases.reserve(static_cast<std::size_t>(diagram.m()));
            for (int j = 1; j <= diagram.m(); ++j) {
                auto [label, value] = xi_published(diagram, j);
                e.cases.push_back(label);
                e.xi.on_painted.emplace(diagram.index(j), value);
            }
            break;
    }
    e.verdict = classify(e.xi.on_painted, options);
    if (e.xi.full && e.verdict.lambda && *e.verdict.lambda != 0) {
        e.verdict.dominance_ok = dominant_for(*e.verdict.lambda, *e.xi.full);
    }
    return e;
}

SpecialityVerdict check_diagram(const VoganDiagram& diagram, XiMethod method, ClassifyOptions options) {
    return evaluate_diagram(diagram, method, options).verdict;
}

}  // namespace voganscan
