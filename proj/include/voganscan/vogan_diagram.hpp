#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace voganscan {

enum class Family { A, B, C, D };

inline constexpr Family kAllFamilies[] = {Family::A, Family::B, Family::C, Family::D};

/// Smallest rank accepted for each family. C starts at 3 (C2 is B2).
int minimum_rank(Family f) noexcept;

char family_letter(Family f) noexcept;
std::optional<Family> parse_family(std::string_view s) noexcept;

/// Throws InvalidRank when rank is below the family minimum.
void require_rank(Family f, int rank);

/// A classical Dynkin diagram with a nonempty set of painted (non-compact)
/// simple roots. Node indices are 1-based.
///
/// index(k) exposes the painted indices i_1 < ... < i_m together with the
/// sentinels i_0 = 0 and i_{m+1} = rank + 1.
class VoganDiagram {
public:
    VoganDiagram(Family family, int rank, std::vector<int> painted);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    std::span<const int> painted() const noexcept { return painted_; }

    /// Number m of painted nodes.
    int m() const noexcept { return static_cast<int>(painted_.size()); }

    /// i_k for 0 <= k <= m+1; IndexError otherwise.
    int index(int k) const;

    bool is_painted(int node) const noexcept;

    /// "A5{2,4}"
    std::string to_string() const;

    friend bool operator==(const VoganDiagram&, const VoganDiagram&) = default;

private:
    Family family_;
    int rank_;
    std::vector<int> painted_;
};

/// Image of a painted set under the nontrivial diagram automorphism:
/// reversal for A, swap of the two fork nodes for D. B and C have none and
/// return the set unchanged.
std::vector<int> automorphism_image(Family f, int rank, std::span<const int> painted);

}  // namespace voganscan
