#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "voganscan/vogan_diagram.hpp"

namespace voganscan {

/// Advances a painted set to its lexicographic successor among the nonempty
/// subsets of {1..rank}. Returns false (and leaves the set empty) after the
/// last one. Start from {1}.
bool next_painted_set(std::vector<int>& painted, int rank);

/// True when painted is the lexicographically least member of its
/// automorphism orbit.
bool is_canonical(Family family, int rank, std::span<const int> painted);

/// All 2^rank - 1 diagrams in lexicographic order of painted sets; with
/// dedup, only orbit representatives.
std::vector<VoganDiagram> enumerate_diagrams(Family family, int rank, bool dedup);

/// Number of diagrams enumerate_diagrams would return without dedup.
std::uint64_t diagram_count(int rank);

}  // namespace voganscan
