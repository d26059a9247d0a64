#pragma once

// Binary words and the per-word / per-pair primitives everything else is
// built on: deletion balls, subsequence tests and the three distances.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace delcode {

/// A binary word of length 0..kMaxLength packed into one machine word.
///
/// Position 1 (the leftmost symbol) is the most significant of the `size()`
/// low bits, so the packed value reads as the word in base 2 and numeric order
/// on equal-length words coincides with lexicographic order. Bits above
/// `size()` are always zero.
class BinaryWord {
public:
    static constexpr int kMaxLength = 62;

    constexpr BinaryWord() noexcept = default;

    /// Throws DomainError when `length` exceeds kMaxLength or `bits` has a bit
    /// set at or above `length`.
    BinaryWord(std::uint64_t bits, int length);

    /// Parses a string of '0'/'1' characters.
    static BinaryWord parse(std::string_view text);
    static BinaryWord constant(int symbol, int length);

    constexpr int size() const noexcept { return size_; }
    constexpr bool empty() const noexcept { return size_ == 0; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    /// Symbol at 1-based position `i`; unchecked.
    constexpr int at(int i) const noexcept { return static_cast<int>((bits_ >> (size_ - i)) & 1U); }
    /// Checked variant of at().
    int symbol(int i) const;

    bool is_constant() const noexcept;
    std::string str() const;

    friend constexpr bool operator==(const BinaryWord&, const BinaryWord&) noexcept = default;
    /// Orders by length, then packed value.
    friend constexpr std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

constexpr std::uint64_t low_mask(int n) noexcept { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

/// A deduplicated set of equal-length words, iterated in packed-value order.
class WordSet {
public:
    explicit WordSet(int member_length = 0) : member_length_(member_length) {}

    /// Sorts and deduplicates; throws DomainError on a length mismatch.
    WordSet(int member_length, std::vector<BinaryWord> words);

    int member_length() const noexcept { return member_length_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<BinaryWord>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(const BinaryWord& w) const noexcept;
    /// True iff every member of `other` is a member of *this.
    bool includes(const WordSet& other) const noexcept;
    bool intersects(const WordSet& other) const noexcept;

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    int member_length_;
    std::vector<BinaryWord> members_;
};

/// Every word of the given length, in packed order.
WordSet all_words(int length);

int weight(const BinaryWord& w) noexcept;
BinaryWord complement(const BinaryWord& w) noexcept;
BinaryWord reverse(const BinaryWord& w) noexcept;
BinaryWord reverse_complement(const BinaryWord& w) noexcept;

/// Removes the symbol at 1-based position `i`.
BinaryWord delete_at(const BinaryWord& w, int i);

/// All distinct subsequences of `w` of length |w| - t. D_0(w) = {w}.
WordSet deletion_ball(const BinaryWord& w, int t);

/// True iff `x` can be obtained from `y` by deletions.
bool is_subsequence(const BinaryWord& x, const BinaryWord& y) noexcept;

/// Longest common subsequence length; bit-parallel, O(|y|) word operations.
int lcs_length(const BinaryWord& x, const BinaryWord& y) noexcept;

/// Minimum number of insertions plus deletions turning `x` into `y`.
int levenshtein_indel(const BinaryWord& x, const BinaryWord& y) noexcept;

/// Half the indel distance of two equal-length words, i.e. n - lcs.
int deletion_distance(const BinaryWord& u, const BinaryWord& v);

int hamming_distance(const BinaryWord& u, const BinaryWord& v);

struct Run {
    int symbol;
    int length;
    friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs left to right. Throws DomainError on the empty word.
std::vector<Run> run_length_encode(const BinaryWord& w);

}  // namespace delcode
