#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fracperc/letter.hpp"
#include "fracperc/profile.hpp"

namespace fracperc {

using BigInt = boost::multiprecision::cpp_int;
using LetterIndex = std::uint32_t;

/// C(2n,n)/(n+1), exact.
BigInt catalan(int n);

/// All non-crossing partitions of n linearly ordered elements, in
/// lexicographic order of their restricted growth strings.
std::vector<Letter> enumerate_noncrossing(int n);

/// Ordered set of all non-crossing partitions of a boundary profile, with the
/// refinement partial order, index lookup and the distinguished min/max.
/// Immutable after construction; safe for concurrent reads.
class Alphabet {
  public:
    /// Every non-crossing partition of the profile's n elements.
    /// Refuses n above `element_cap` (memory guard; count-only queries go
    /// through catalan() instead).
    static Alphabet enumerate(const BoundaryProfile& profile, int element_cap = 16);

    /// Just {min, max} of the profile; used by the two-letter codes.
    static Alphabet extremes(const BoundaryProfile& profile);

    const BoundaryProfile& profile() const { return profile_; }
    int elements() const { return profile_.total(); }
    bool extreme() const { return extreme_; }

    std::size_t size() const { return letters_.size(); }
    const Letter& letter(LetterIndex i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::optional<LetterIndex> index_of(const Letter& w) const;

    LetterIndex min_index() const { return min_; }
    LetterIndex max_index() const { return max_; }

    /// a <= b in the refinement order. Backed by a bit matrix when the
    /// alphabet is small enough, otherwise computed directly.
    bool leq(LetterIndex a, LetterIndex b) const;

    bool two_sides_connected(LetterIndex a) const {
        return fracperc::two_sides_connected(letters_[a], profile_);
    }

    /// One letter per line as its growth string, after a `profile l t r b`
    /// header. Golden-file format.
    void dump(std::ostream& os) const;
    std::string dump_string() const;
    /// SHA-256 of dump_string(); identifies the alphabet in cache headers
    /// and certificates.
    std::string sha256() const;

  private:
    Alphabet() = default;
    void finish();

    BoundaryProfile profile_;
    bool extreme_ = false;
    std::vector<Letter> letters_;
    std::unordered_map<Letter, LetterIndex, LetterHash> index_;
    LetterIndex min_ = 0, max_ = 0;
    std::size_t order_words_ = 0;
    std::vector<std::uint64_t> up_bits_;  // row a: bits of {b : a <= b}
};

/// All up-sets of the alphabet poset as bitmasks, via scan over all subsets.
/// Test oracle only; refuses alphabets above `cap` letters.
std::vector<std::uint32_t> upsets(const Alphabet& a, int cap = 20);

/// Generic version for arbitrary small posets (used by tests).
std::vector<std::uint32_t> upsets(int count, const std::vector<std::uint32_t>& up_neighbor_mask,
                                  int cap = 20);

}  // namespace fracperc
