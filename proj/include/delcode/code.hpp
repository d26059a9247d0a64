#pragma once

// Code-level predicates: deletion correction, perfectness, basic codes,
// equivalence, and the Varshamov-Tenengolts construction.

#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

/// A nonempty set of distinct words sharing one length, kept sorted.
class Code {
public:
    /// Throws DomainError when `words` is empty or lengths differ. Duplicates
    /// are dropped.
    explicit Code(std::vector<BinaryWord> words);

    int length() const noexcept { return length_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<BinaryWord>& words() const noexcept { return words_; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }
    bool contains(const BinaryWord& w) const noexcept;

    friend bool operator==(const Code&, const Code&) = default;

private:
    int length_;
    std::vector<BinaryWord> words_;
};

/// One 0/1 word per line; '#' lines are comments; blank lines are skipped.
Code read_code(std::istream& in);
Code parse_code(std::string_view text);
/// Writes optional comment lines, then one word per line in sorted order.
void write_code(std::ostream& out, const Code& code, std::string_view comment = {});

Code map_code(const Code& code, BinaryWord (*transform)(const BinaryWord&) noexcept);

struct CorrectionCheck {
    bool correcting = true;
    /// A pair of codewords whose t-deletion balls intersect.
    std::optional<std::pair<BinaryWord, BinaryWord>> witness;
};

/// Requires 1 <= t < n.
CorrectionCheck check_t_deletion_correcting(const Code& code, int t);
bool is_t_deletion_correcting(const Code& code, int t);

/// Minimum deletion distance over distinct pairs; needs two codewords.
int code_deletion_distance(const Code& code);

/// Whether the balls partition all 2^(n-t) words. Throws PreconditionError
/// when the code is not t-deletion-correcting.
bool is_perfect(const Code& code, int t);

struct BasicCheck {
    bool basic = true;
    /// Codewords that dominate some other word of the ambient space.
    std::vector<BinaryWord> dominant;
};

BasicCheck check_basic(const Code& code, int t);
bool is_basic(const Code& code, int t);

struct Replacement {
    Code code;
    bool basic = false;
    /// Dominant codewords with no smaller subordinate available.
    std::vector<BinaryWord> stalled;
};

/// Repeatedly swaps a dominant codeword for its numerically smallest
/// subordinate, as long as that subordinate is smaller than the codeword.
/// Throws PreconditionError when the input is not t-deletion-correcting.
Replacement replace_dominant(const Code& code, int t);

/// Equal up to identity, complement, reversal or reversed complement.
bool are_equivalent(const Code& a, const Code& b);

/// The lexicographically smallest of the four images' sorted word lists.
Code canonical_form(const Code& code);

/// Words with sum of i * x_i congruent to `residue` mod n + 1 (1-based i).
Code vt_code(int n, int residue);
int vt_checksum(const BinaryWord& w) noexcept;

}  // namespace delcode
