#include "fracperc/alphabet.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fracperc/sha256.hpp"

namespace fracperc {

Letter canonical_letter(std::span<const std::uint8_t> ids) {
    if (ids.size() > kMaxElements) throw std::invalid_argument("letter too long");
    Letter w;
    w.n = static_cast<std::uint8_t>(ids.size());
    std::array<int, 256> remap;
    remap.fill(-1);
    int next = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (remap[ids[i]] < 0) remap[ids[i]] = next++;
        w.id[i] = static_cast<std::uint8_t>(remap[ids[i]]);
    }
    return w;
}

bool is_noncrossing(std::span<const std::uint8_t> ids) {
    const int n = static_cast<int>(ids.size());
    std::array<int, 64> last;
    last.fill(-1);
    for (int i = 0; i < n; ++i) last[ids[i]] = i;
    std::vector<std::uint8_t> stack;
    std::array<bool, 64> seen{};
    for (int i = 0; i < n; ++i) {
        std::uint8_t b = ids[i];
        if (!seen[b]) {
            seen[b] = true;
            stack.push_back(b);
            continue;
        }
        while (!stack.empty() && stack.back() != b) {
            if (last[stack.back()] > i) return false;  // still open above b
            stack.pop_back();
        }
        if (stack.empty()) return false;  // b was closed earlier: crossing
    }
    return true;
}

bool letter_leq(const Letter& a, const Letter& b) {
    if (a.n != b.n) throw std::invalid_argument("letter_leq: profile mismatch");
    // every block of a lies inside one block of b <=> a-equivalent elements
    // are b-equivalent; with growth strings, the first element of each a-block
    // fixes the b-block all its members must share.
    std::array<int, kMaxElements> rep;
    rep.fill(-1);
    for (int i = 0; i < a.n; ++i) {
        int blk = a.id[i];
        if (rep[blk] < 0)
            rep[blk] = b.id[i];
        else if (rep[blk] != b.id[i])
            return false;
    }
    return true;
}

bool two_sides_connected(const Letter& a, const BoundaryProfile& profile) {
    if (a.n != profile.total()) throw std::invalid_argument("letter/profile mismatch");
    std::array<int, kMaxElements> side_seen;
    side_seen.fill(-1);
    for (int i = 0; i < a.n; ++i) {
        int blk = a.id[i];
        int s = profile.side_of(i);
        if (side_seen[blk] < 0)
            side_seen[blk] = s;
        else if (side_seen[blk] != s)
            return true;
    }
    return false;
}

namespace {
char digit(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }
int undigit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("bad letter digit");
}
}  // namespace

std::string letter_to_string(const Letter& w) {
    std::string s(w.n, '0');
    for (int i = 0; i < w.n; ++i) s[i] = digit(w.id[i]);
    return s;
}

Letter letter_from_string(const std::string& s) {
    if (s.size() > kMaxElements) throw std::invalid_argument("letter too long");
    Letter w;
    w.n = static_cast<std::uint8_t>(s.size());
    int mx = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        int v = undigit(s[i]);
        if (v > mx + 1) throw std::invalid_argument("not a growth string: " + s);
        mx = std::max(mx, v);
        w.id[i] = static_cast<std::uint8_t>(v);
    }
    if (w.n > 0 && w.id[0] != 0) throw std::invalid_argument("growth string must start at 0");
    return w;
}

Letter min_letter(int n) {
    Letter w;
    w.n = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) w.id[i] = static_cast<std::uint8_t>(i);
    return w;
}

Letter max_letter(int n) {
    Letter w;
    w.n = static_cast<std::uint8_t>(n);
    return w;
}

BigInt catalan(int n) {
    if (n < 1) throw std::invalid_argument("catalan: n must be >= 1");
    BigInt c = 1;
    for (int i = 1; i <= n; ++i) {
        c *= n + i;
        c /= i;  // exact at every step
    }
    return c / (n + 1);
}

std::vector<Letter> enumerate_noncrossing(int n) {
    if (n < 1 || n > kMaxElements) throw std::invalid_argument("enumerate_noncrossing: bad n");
    std::vector<Letter> out;
    std::vector<std::uint8_t> ids(n);
    std::vector<std::uint8_t> stack;  // open blocks, ids increasing with depth
    // Joining a block deeper in the stack permanently closes everything above
    // it; that is exactly the non-crossing condition.
    auto rec = [&](auto&& self, int pos, int next_id) -> void {
        if (pos == n) {
            Letter w;
            w.n = static_cast<std::uint8_t>(n);
            std::copy(ids.begin(), ids.end(), w.id.begin());
            out.push_back(w);
            return;
        }
        for (std::size_t k = 0; k < stack.size(); ++k) {
            ids[pos] = stack[k];
            std::vector<std::uint8_t> closed(stack.begin() + k + 1, stack.end());
            stack.resize(k + 1);
            self(self, pos + 1, next_id);
            stack.insert(stack.end(), closed.begin(), closed.end());
        }
        ids[pos] = static_cast<std::uint8_t>(next_id);
        stack.push_back(static_cast<std::uint8_t>(next_id));
        self(self, pos + 1, next_id + 1);
        stack.pop_back();
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Alphabet Alphabet::enumerate(const BoundaryProfile& profile, int element_cap) {
    profile.validate();
    const int n = profile.total();
    if (n > element_cap)
        throw std::invalid_argument("alphabet enumeration refused: " + std::to_string(n) +
                                    " elements exceeds cap " + std::to_string(element_cap) +
                                    " (use catalan() for counts)");
    Alphabet a;
    a.profile_ = profile;
    a.letters_ = enumerate_noncrossing(n);
    a.finish();
    return a;
}

Alphabet Alphabet::extremes(const BoundaryProfile& profile) {
    profile.validate();
    Alphabet a;
    a.profile_ = profile;
    a.extreme_ = true;
    a.letters_ = {max_letter(profile.total()), min_letter(profile.total())};
    std::sort(a.letters_.begin(), a.letters_.end());
    a.finish();
    return a;
}

void Alphabet::finish() {
    index_.reserve(letters_.size() * 2);
    for (LetterIndex i = 0; i < letters_.size(); ++i) index_.emplace(letters_[i], i);
    min_ = index_.at(min_letter(profile_.total()));
    max_ = index_.at(max_letter(profile_.total()));
    // order matrix for alphabets small enough to afford one
    constexpr std::size_t kOrderCap = 20000;
    if (letters_.size() <= kOrderCap) {
        const std::size_t sz = letters_.size();
        order_words_ = (sz + 63) / 64;
        up_bits_.assign(sz * order_words_, 0);
        for (LetterIndex a = 0; a < sz; ++a)
            for (LetterIndex b = 0; b < sz; ++b)
                if (letter_leq(letters_[a], letters_[b]))
                    up_bits_[a * order_words_ + b / 64] |= 1ull << (b % 64);
    }
}

std::optional<LetterIndex> Alphabet::index_of(const Letter& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Alphabet::leq(LetterIndex a, LetterIndex b) const {
    if (a >= size() || b >= size()) throw std::out_of_range("letter index");
    if (!up_bits_.empty()) return (up_bits_[a * order_words_ + b / 64] >> (b % 64)) & 1;
    return letter_leq(letters_[a], letters_[b]);
}

void Alphabet::dump(std::ostream& os) const {
    os << "profile " << profile_.left << ' ' << profile_.top << ' ' << profile_.right << ' '
       << profile_.bottom << '\n';
    for (const Letter& w : letters_) os << letter_to_string(w) << '\n';
}

std::string Alphabet::dump_string() const {
    std::ostringstream os;
    dump(os);
    return os.str();
}

std::string Alphabet::sha256() const { return fracperc::sha256_hex(dump_string()); }

std::vector<std::uint32_t> upsets(int count, const std::vector<std::uint32_t>& up_mask, int cap) {
    if (count > cap)
        throw std::invalid_argument("upsets: poset above cap (test oracle only)");
    std::vector<std::uint32_t> out;
    const std::uint32_t full = count == 32 ? ~0u : (1u << count) - 1;
    for (std::uint32_t s = 0;; ++s) {
        bool ok = true;
        for (std::uint32_t m = s; m; m &= m - 1) {
            int a = std::countr_zero(m);
            if (up_mask[a] & ~s) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(s);
        if (s == full) break;
    }
    return out;
}

std::vector<std::uint32_t> upsets(const Alphabet& a, int cap) {
    const int sz = static_cast<int>(a.size());
    if (sz > cap) throw std::invalid_argument("upsets: alphabet above cap (test oracle only)");
    std::vector<std::uint32_t> up(sz, 0);
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
            if (a.leq(x, y)) up[x] |= 1u << y;
    return upsets(sz, up, cap);
}

}  // namespace fracperc
