#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "voganscan/root_system.hpp"
#include "voganscan/vogan_diagram.hpp"

namespace voganscan {

/// Alternating interval sums attached to painted position j (1-based).
///
///   s1 = sum_{k=1}^{ceil((m-j)/2)}   i_{j+2k}   - i_{j+2k-1}
///   s2 = sum_{k=1}^{floor(j/2)}      i_{j-2k+1} - i_{j-2k}
///   t1 = sum_{k=1}^{floor((j+1)/2)-1} i_{j-2k}  - i_{j-2k-1}
///   t2 = sum_{k=1}^{ceil((m-j-1)/2)} i_{j+2k+1} - i_{j+2k}
///   s_plus  = sum_{k=j+1}^{m} 2(-1)^{k-j} i_k + i_{j+1} + (-1)^{m-j+1}(l+1)
///   s_minus = sum_{k=1}^{j-1}  2(-1)^{k-j} i_k + i_{j-1}
///
/// Invariants: s_plus == s1 - t2 and s_minus == t1 - s2.
struct HelperSums {
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;
    std::int64_t s_plus = 0;
    std::int64_t s_minus = 0;

    friend bool operator==(const HelperSums&, const HelperSums&) = default;
};

HelperSums helper_sums(const VoganDiagram& diagram, int j);

/// The case of the per-family xi theorem that applies to painted position j.
/// "Even"/"odd" in the D labels is |S ∩ {l-1, l}| in {0, 2} versus 1.
enum class Branch {
    A,
    BInterior,          // j != m
    BLast,              // j == m, i_m != l
    BAtL,               // i_j == l
    CInteriorLUnpainted,// j != m, l not painted
    CInteriorLPainted,  // j != m, l painted
    CAtL,               // i_j == l
    CLast,              // j == m, i_m not in {l-1, l}
    CAtLm1LPainted,     // i_j == l-1, l painted
    CAtLm1LUnpainted,   // i_j == l-1, l not painted
    DInteriorEven,
    DInteriorOdd,
    DLast,              // j == m, i_m < l-2
    DAtLm2Even,
    DAtLm2Odd,
    DForkSingle,        // i_j in {l-1, l}, exactly one of them painted
    DForkBoth,          // i_j in {l-1, l}, both painted
};

inline constexpr Branch kAllBranches[] = {
    Branch::A,           Branch::BInterior,           Branch::BLast,          Branch::BAtL,
    Branch::CInteriorLUnpainted, Branch::CInteriorLPainted, Branch::CAtL,     Branch::CLast,
    Branch::CAtLm1LPainted, Branch::CAtLm1LUnpainted, Branch::DInteriorEven,  Branch::DInteriorOdd,
    Branch::DLast,       Branch::DAtLm2Even,          Branch::DAtLm2Odd,      Branch::DForkSingle,
    Branch::DForkBoth,
};

std::string_view to_string(Branch b) noexcept;
std::optional<Branch> parse_branch(std::string_view s) noexcept;
Family branch_family(Branch b) noexcept;

struct CaseLabel {
    Family family;
    Branch branch;

    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

/// Dispatch is most-specific-first: special end nodes before the last
/// painted position before interior positions.
CaseLabel case_label(const VoganDiagram& diagram, int j);

/// How the D interior correction delta_{nu in S} delta_{nu' notin S} delta_{k=m-1}
/// is read, nu and nu' ranging over the two fork nodes.
enum class ForkReading {
    ExactlyOne,   ///< 1 iff exactly one fork node is painted and k = m-1
    PerOrdering,  ///< summed over both orderings (nu, nu')
};

/// Closed per-family expression for (A * sum(complement_span_roots))_{i_k},
/// with dim(h_{i_l}) = i_l - i_{l-1} - 1.
std::int64_t gamma_closed(const VoganDiagram& diagram, int k, ForkReading reading = ForkReading::ExactlyOne);

/// Closed per-case expression for (A * delta_c)_{i_j}, as printed. Throws
/// AmbiguousBranch when the printed expression references a position below
/// i_0 (the both-fork-nodes case with fewer than three painted nodes).
std::int64_t tau_closed(const VoganDiagram& diagram, int j);

/// (A * sum(complement_span_roots))_{i_k} and (A * delta_c)_{i_k} computed
/// from an oracle sweep.
std::int64_t gamma_oracle(const VoganDiagram& diagram, const CartanMatrix& a, const OracleSums& sums, int k);
std::int64_t tau_oracle(const VoganDiagram& diagram, const CartanMatrix& a, const OracleSums& sums, int k);

enum class MidVariant {
    MatrixProduct,  ///< gamma and tau from the oracle sweep; exact identity with xi_oracle
    ClosedForms,    ///< gamma_closed and tau_closed
};

/// 2(-2 + gamma + 2 tau) at painted position j.
std::int64_t xi_mid(const VoganDiagram& diagram, int j, MidVariant variant = MidVariant::MatrixProduct);

/// xi_mid for every painted position with one oracle sweep.
XiReport xi_mid_all(const VoganDiagram& diagram, MidVariant variant = MidVariant::MatrixProduct);

/// The theorem formula for the branch of position j, evaluated exactly as
/// printed (including branches that disagree with the oracle).
std::pair<CaseLabel, std::int64_t> xi_published(const VoganDiagram& diagram, int j);

XiReport xi_published_all(const VoganDiagram& diagram);

}  // namespace voganscan
