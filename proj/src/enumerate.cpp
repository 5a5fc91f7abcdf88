#include "voganscan/enumerate.hpp"

#include <algorithm>

#include "voganscan/errors.hpp"

namespace voganscan {

bool next_painted_set(std::vector<int>& painted, int rank) {
    if (painted.empty()) return false;
    if (painted.back() < rank) {
        painted.push_back(painted.back() + 1);
        return true;
    }
    painted.pop_back();
    if (painted.empty()) return false;
    ++painted.back();
    return true;
}

bool is_canonical(Family family, int rank, std::span<const int> painted) {
    const std::vector<int> image = automorphism_image(family, rank, painted);
    return !std::lexicographical_compare(image.begin(), image.end(), painted.begin(), painted.end());
}

std::vector<VoganDiagram> enumerate_diagrams(Family family, int rank, bool dedup) {
    require_rank(family, rank);
    if (rank > 40) throw InvalidRank("exhaustive enumeration beyond rank 40 is not supported");
    std::vector<VoganDiagram> out;
    out.reserve(static_cast<std::size_t>(diagram_count(rank)));
    std::vector<int> painted{1};
    do {
        if (!dedup || is_canonical(family, rank, painted)) out.emplace_back(family, rank, painted);
    } while (next_painted_set(painted, rank));
    return out;
}

std::uint64_t diagram_count(int rank) { return (std::uint64_t{1} << rank) - 1; }

}  // namespace voganscan
