#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace fracperc {

/// Maximum number of boundary elements a letter can have.
inline constexpr int kMaxElements = 16;

/// Subdivision of the unit square's boundary into elements. Elements are
/// enumerated clockwise starting from (0,0): left side bottom->top, top side
/// left->right, right side top->bottom, bottom side right->left.
/// left==right and top==bottom so that adjacent cells share compatible edges
/// when tiling words.
struct BoundaryProfile {
    int left = 1;
    int top = 1;
    int right = 1;
    int bottom = 1;

    int total() const { return left + top + right + bottom; }

    /// Side of element e: 0=left, 1=top, 2=right, 3=bottom.
    int side_of(int e) const {
        if (e < left) return 0;
        if (e < left + top) return 1;
        if (e < left + top + right) return 2;
        return 3;
    }

    void validate() const {
        if (left < 1 || top < 1 || right < 1 || bottom < 1)
            throw std::invalid_argument("profile: side counts must be positive");
        if (left != right || top != bottom)
            throw std::invalid_argument("profile: left!=right or top!=bottom");
        if (total() < 4)
            throw std::invalid_argument("profile: fewer than 4 elements");
    }

    bool operator==(const BoundaryProfile&) const = default;

    std::string to_string() const {
        return std::to_string(left) + "," + std::to_string(top) + "," +
               std::to_string(right) + "," + std::to_string(bottom);
    }
};

inline BoundaryProfile uniform_profile(int m_pow_k) {
    return BoundaryProfile{m_pow_k, m_pow_k, m_pow_k, m_pow_k};
}

}  // namespace fracperc
