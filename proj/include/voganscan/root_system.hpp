#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "voganscan/vogan_diagram.hpp"

namespace voganscan {

/// A positive root as its coefficients over the simple roots; coeffs[i-1]
/// belongs to node i.
struct RootVector {
    std::vector<int> coeffs;

    friend auto operator<=>(const RootVector&, const RootVector&) = default;
    friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// Vector in simple-root coordinates (entry i-1 belongs to node i).
using RootCoords = std::vector<std::int64_t>;

/// Coordinates in the fundamental-weight basis (entry i-1 belongs to node i).
struct WeightCoords {
    std::vector<std::int64_t> values;

    friend bool operator==(const WeightCoords&, const WeightCoords&) = default;
};

/// Cartan matrix A_ij = 2(g_i, g_j)/(g_i, g_i), rows and columns 1-based.
/// B has A(l, l-1) = -2, C has A(l-1, l) = -2, D forks at node l-2.
class CartanMatrix {
public:
    CartanMatrix(int rank, std::vector<int> entries);

    int rank() const noexcept { return rank_; }
    int operator()(int row, int col) const;

    /// A * v for v in simple-root coordinates; the result is the same vector
    /// in the fundamental-weight basis.
    RootCoords apply(std::span<const std::int64_t> v) const;

    /// Single component (A * v)_row, 1-based.
    std::int64_t apply_row(int row, std::span<const std::int64_t> v) const;

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    int rank_;
    std::vector<int> entries_;
};

CartanMatrix cartan_matrix(Family family, int rank);

/// |positive roots|: l(l+1)/2, l^2, l^2, l(l-1) for A, B, C, D.
std::int64_t positive_root_count(Family family, int rank);

/// Visits every positive root once. The span is reused between calls and is
/// only valid during the callback. Order follows the shape families, not
/// lexicographic order. Memory O(rank).
void for_each_positive_root(Family family, int rank, const std::function<void(std::span<const int>)>& visit);

/// All positive roots, sorted lexicographically. Memory is O(rank^3), so the
/// oracle rank cap applies.
std::vector<RootVector> positive_roots(Family family, int rank);

/// +1 for non-compact roots, -1 for compact ones: a root is non-compact iff
/// the sum of its coefficients over painted nodes is odd.
int epsilon(const RootVector& root, const VoganDiagram& diagram);

/// -2 * sum(epsilon(a) * a) over all positive roots.
RootCoords eta(const VoganDiagram& diagram);

/// Positive roots whose support avoids every painted node (lexicographic).
std::vector<RootVector> complement_span_roots(const VoganDiagram& diagram);

/// Sum of compact positive roots that are not in the complement span.
RootCoords delta_c(const VoganDiagram& diagram);

/// eta - 2 * sum(complement_span_roots).
RootCoords phi_S(const VoganDiagram& diagram);

/// Everything the brute-force path accumulates in a single root sweep.
struct OracleSums {
    RootCoords eta;
    RootCoords span_sum;     ///< sum over complement_span_roots
    RootCoords compact_sum;  ///< sum over all compact positive roots
    RootCoords delta_c;      ///< compact_sum - span_sum
    RootCoords phi_s;        ///< eta - 2 span_sum
};

OracleSums oracle_sums(const VoganDiagram& diagram);

enum class XiMethod { Oracle, Mid, Published };

std::string_view to_string(XiMethod m) noexcept;
std::optional<XiMethod> parse_method(std::string_view s) noexcept;

/// xi values keyed by painted node, tagged with the path that produced them.
struct XiReport {
    XiMethod method = XiMethod::Oracle;
    std::map<int, std::int64_t> on_painted;
    /// Full xi vector over every node; only the oracle fills it.
    std::optional<WeightCoords> full;
};

/// Brute-force xi = A * phi_S. Also evaluates
///   -4 + 4 (A * compact_sum) - 2 (A * span_sum)
/// and throws OracleInconsistency if the two disagree anywhere.
XiReport xi_oracle(const VoganDiagram& diagram);

/// Rank bound for every routine that enumerates roots. Default 2000;
/// VOGANSCAN_ORACLE_CAP overrides it.
int oracle_rank_cap();

/// Throws CapExceeded when rank > oracle_rank_cap().
void require_oracle_rank(int rank);

}  // namespace voganscan
