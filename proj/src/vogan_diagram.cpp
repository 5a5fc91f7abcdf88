#include "voganscan/vogan_diagram.hpp"

#include <algorithm>
#include <sstream>

#include "voganscan/errors.hpp"

namespace voganscan {

int minimum_rank(Family f) noexcept {
    switch (f) {
        case Family::A: return 1;
        case Family::B: return 2;
        case Family::C: return 3;
        case Family::D: return 4;
    }
    return 1;
}

char family_letter(Family f) noexcept {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

std::optional<Family> parse_family(std::string_view s) noexcept {
    if (s.size() != 1) return std::nullopt;
    switch (s[0]) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        default: return std::nullopt;
    }
}

void require_rank(Family f, int rank) {
    if (rank < minimum_rank(f)) {
        std::ostringstream os;
        os << "rank " << rank << " is below the minimum " << minimum_rank(f) << " for family "
           << family_letter(f);
        throw InvalidRank(os.str());
    }
}

VoganDiagram::VoganDiagram(Family family, int rank, std::vector<int> painted)
    : family_(family), rank_(rank), painted_(std::move(painted)) {
    require_rank(family_, rank_);
    if (painted_.empty()) throw InvalidDiagram("painted set must be nonempty");
    for (std::size_t k = 0; k < painted_.size(); ++k) {
        const int i = painted_[k];
        if (i < 1 || i > rank_) {
            throw InvalidDiagram("painted index " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
        }
        if (k > 0 && painted_[k - 1] >= i) throw InvalidDiagram("painted indices must be strictly increasing");
    }
}

int VoganDiagram::index(int k) const {
    if (k == 0) return 0;
    if (k == m() + 1) return rank_ + 1;
    if (k < 0 || k > m() + 1) {
        throw IndexError("painted position " + std::to_string(k) + " outside 0.." + std::to_string(m() + 1));
    }
    return painted_[static_cast<std::size_t>(k - 1)];
}

bool VoganDiagram::is_painted(int node) const noexcept {
    return std::binary_search(painted_.begin(), painted_.end(), node);
}

std::string VoganDiagram::to_string() const {
    std::ostringstream os;
    os << family_letter(family_) << rank_ << '{';
    for (std::size_t k = 0; k < painted_.size(); ++k) os << (k ? "," : "") << painted_[k];
    os << '}';
    return os.str();
}

std::vector<int> automorphism_image(Family f, int rank, std::span<const int> painted) {
    std::vector<int> out(painted.begin(), painted.end());
    if (f == Family::A) {
        for (int& i : out) i = rank + 1 - i;
    } else if (f == Family::D) {
        for (int& i : out) {
            if (i == rank - 1) i = rank;
            else if (i == rank) i = rank - 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace voganscan
