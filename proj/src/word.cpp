#include "delcode/word.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "delcode/error.hpp"

namespace delcode {

BinaryWord::BinaryWord(std::uint64_t bits, int length) {
    if (length < 0 || length > kMaxLength)
        throw DomainError("word length " + std::to_string(length) + " outside 0.." + std::to_string(kMaxLength));
    if ((bits & ~low_mask(length)) != 0) throw DomainError("packed bits exceed word length");
    bits_ = bits;
    size_ = static_cast<std::uint8_t>(length);
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxLength))
        throw DomainError("word of length " + std::to_string(text.size()) + " exceeds cap of " +
                          std::to_string(kMaxLength));
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw DomainError("invalid symbol '" + std::string(1, c) + "' in word");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BinaryWord(bits, static_cast<int>(text.size()));
}

BinaryWord BinaryWord::constant(int symbol, int length) {
    if (symbol != 0 && symbol != 1) throw DomainError("symbol must be 0 or 1");
    if (length < 0 || length > kMaxLength) throw DomainError("word length out of range");
    return BinaryWord(symbol ? low_mask(length) : 0, length);
}

int BinaryWord::symbol(int i) const {
    if (i < 1 || i > size_) throw DomainError("position " + std::to_string(i) + " out of range");
    return at(i);
}

bool BinaryWord::is_constant() const noexcept { return bits_ == 0 || bits_ == low_mask(size_); }

std::string BinaryWord::str() const {
    std::string s(size_, '0');
    for (int i = 1; i <= size_; ++i)
        if (at(i)) s[i - 1] = '1';
    return s;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << w.str(); }

WordSet::WordSet(int member_length, std::vector<BinaryWord> words)
    : member_length_(member_length), members_(std::move(words)) {
    for (const auto& w : members_)
        if (w.size() != member_length_) throw DomainError("word set member has wrong length");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool WordSet::contains(const BinaryWord& w) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), w);
}

bool WordSet::includes(const WordSet& other) const noexcept {
    if (other.member_length_ != member_length_) return other.empty();
    return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

bool WordSet::intersects(const WordSet& other) const noexcept {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

WordSet all_words(int length) {
    if (length < 0 || length > 30) throw DomainError("refusing to materialize all words of length " + std::to_string(length));
    std::vector<BinaryWord> words;
    words.reserve(std::size_t{1} << length);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << length); ++b) words.emplace_back(b, length);
    return WordSet(length, std::move(words));
}

int weight(const BinaryWord& w) noexcept { return std::popcount(w.bits()); }

BinaryWord complement(const BinaryWord& w) noexcept {
    return BinaryWord(w.bits() ^ low_mask(w.size()), w.size());
}

BinaryWord reverse(const BinaryWord& w) noexcept {
    std::uint64_t in = w.bits();
    std::uint64_t out = 0;
    for (int i = 0; i < w.size(); ++i) {
        out = (out << 1) | (in & 1U);
        in >>= 1;
    }
    return BinaryWord(out, w.size());
}

BinaryWord reverse_complement(const BinaryWord& w) noexcept { return complement(reverse(w)); }

BinaryWord delete_at(const BinaryWord& w, int i) {
    const int n = w.size();
    if (i < 1 || i > n) throw DomainError("deletion position " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    const int below = n - i;  // symbols to the right of position i
    const std::uint64_t high = w.bits() >> (below + 1);
    const std::uint64_t low = w.bits() & low_mask(below);
    return BinaryWord((high << below) | low, n - 1);
}

namespace {

// Deleting any symbol of a run gives the same word, so one deletion per run
// (the last symbol) covers the whole single-deletion ball.
void single_deletions(const BinaryWord& w, std::vector<BinaryWord>& out) {
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        if (i == n || w.at(i) != w.at(i + 1)) out.push_back(delete_at(w, i));
}

}  // namespace

WordSet deletion_ball(const BinaryWord& w, int t) {
    if (t < 0 || t > w.size())
        throw DomainError("deletion count " + std::to_string(t) + " out of range 0.." + std::to_string(w.size()));
    std::vector<BinaryWord> level{w};
    std::vector<BinaryWord> next;
    for (int step = 0; step < t; ++step) {
        next.clear();
        for (const auto& x : level) single_deletions(x, next);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level.swap(next);
    }
    return WordSet(w.size() - t, std::move(level));
}

bool is_subsequence(const BinaryWord& x, const BinaryWord& y) noexcept {
    if (x.size() > y.size()) return false;
    int i = 1;
    for (int j = 1; j <= y.size() && i <= x.size(); ++j)
        if (x.at(i) == y.at(j)) ++i;
    return i > x.size();
}

int lcs_length(const BinaryWord& x, const BinaryWord& y) noexcept {
    // LCS is invariant under reversing both words, so the packed bits of x can
    // serve directly as the LSB-first string of reverse(x) while y is scanned
    // from its last symbol.
    const int m = x.size();
    if (m == 0 || y.empty()) return 0;
    const std::uint64_t mask = low_mask(m);
    const std::uint64_t match[2] = {~x.bits() & mask, x.bits()};
    std::uint64_t v = mask;
    std::uint64_t yb = y.bits();
    for (int k = 0; k < y.size(); ++k, yb >>= 1) {
        const std::uint64_t u = v & match[yb & 1U];
        v = ((v + u) | (v - u)) & mask;
    }
    return m - std::popcount(v);
}

int levenshtein_indel(const BinaryWord& x, const BinaryWord& y) noexcept {
    return x.size() + y.size() - 2 * lcs_length(x, y);
}

int deletion_distance(const BinaryWord& u, const BinaryWord& v) {
    if (u.size() != v.size()) throw DomainError("deletion distance needs equal-length words");
    return u.size() - lcs_length(u, v);
}

int hamming_distance(const BinaryWord& u, const BinaryWord& v) {
    if (u.size() != v.size()) throw DomainError("Hamming distance needs equal-length words");
    return std::popcount(u.bits() ^ v.bits());
}

std::vector<Run> run_length_encode(const BinaryWord& w) {
    if (w.empty()) throw DomainError("cannot run-length encode the empty word");
    std::vector<Run> runs;
    for (int i = 1; i <= w.size(); ++i) {
        if (!runs.empty() && runs.back().symbol == w.at(i))
            ++runs.back().length;
        else
            runs.push_back({w.at(i), 1});
    }
    return runs;
}

}  // namespace delcode
