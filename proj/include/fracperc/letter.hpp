#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fracperc/profile.hpp"

namespace fracperc {

/// A non-crossing partition of the boundary elements e_0..e_{n-1}, stored as
/// its restricted growth string: id[0] == 0 and block ids increase by first
/// occurrence. The encoding is unique per partition and orders letters
/// lexicographically.
struct Letter {
    std::uint8_t n = 0;
    std::array<std::uint8_t, kMaxElements> id{};

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;

    int block_count() const {
        int m = -1;
        for (int i = 0; i < n; ++i)
            if (id[i] > m) m = id[i];
        return m + 1;
    }
};

struct LetterHash {
    std::size_t operator()(const Letter& w) const {
        std::size_t h = 1469598103934665603ull;
        h = (h ^ w.n) * 1099511628211ull;
        for (int i = 0; i < w.n; ++i) h = (h ^ w.id[i]) * 1099511628211ull;
        return h;
    }
};

/// Relabel an arbitrary block-id sequence into canonical first-occurrence form.
Letter canonical_letter(std::span<const std::uint8_t> ids);

/// Stack scan over the sequence; O(n). A partition of the cyclically ordered
/// boundary is non-crossing iff its linearization at the fixed cut is.
bool is_noncrossing(std::span<const std::uint8_t> ids);

/// a <= b iff every block of a is contained in a block of b.
bool letter_leq(const Letter& a, const Letter& b);

/// Membership in A_pi: some block contains elements of two distinct sides.
bool two_sides_connected(const Letter& a, const BoundaryProfile& profile);

/// Digits 0-9 then a-f, e.g. "0011" for n=4.
std::string letter_to_string(const Letter& w);
Letter letter_from_string(const std::string& s);

Letter min_letter(int n);  // all singletons
Letter max_letter(int n);  // one block

}  // namespace fracperc
