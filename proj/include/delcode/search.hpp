#pragma once

// Exact maximum t-deletion-correcting codes as maximum independent sets of
// the conflict graph (edge = deletion distance <= t).

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "delcode/code.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// Dense bitset over graph vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : blocks_((size + 63) / 64, 0) {}

    void set(std::size_t i) noexcept { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (blocks_[i >> 6] >> (i & 63)) & 1U; }
    bool none() const noexcept;
    std::size_t count() const noexcept;
    /// Lowest member, or npos.
    std::size_t first() const noexcept;
    VertexSet& operator&=(const VertexSet& o) noexcept;
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::uint64_t* data() noexcept { return blocks_.data(); }
    const std::uint64_t* data() const noexcept { return blocks_.data(); }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> blocks_;
};

class ConflictGraph {
public:
    ConflictGraph(std::vector<BinaryWord> vertices, int t);

    int t() const noexcept { return t_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<BinaryWord>& vertices() const noexcept { return vertices_; }
    bool adjacent(std::size_t i, std::size_t j) const noexcept { return adjacency_[i].test(j); }
    const VertexSet& neighbours(std::size_t i) const noexcept { return adjacency_[i]; }
    std::size_t degree(std::size_t i) const noexcept { return degrees_[i]; }
    std::optional<std::size_t> index_of(const BinaryWord& w) const noexcept;

private:
    int t_;
    std::vector<BinaryWord> vertices_;
    std::vector<VertexSet> adjacency_;
    std::vector<std::size_t> degrees_;
};

/// Vertices sorted by packed value; edge iff deletion_distance <= t.
ConflictGraph build_conflict_graph(std::span<const BinaryWord> candidates, int t);

/// All words of length n, minus the t-dominant ones when `basic_only`.
std::vector<BinaryWord> build_candidates(int n, int t, bool basic_only);

struct SearchConfig {
    int n = 5;
    int t = 1;
    bool basic_only = true;
    bool force_constants = true;
    bool enumerate_all = false;
    bool canonical = false;
    std::chrono::milliseconds time_budget{std::chrono::minutes(10)};
    unsigned parallelism = 1;

    /// Throws DomainError unless 1 <= t <= 3, t < n, and n is within the cap
    /// for t (12 for t = 1, 10 otherwise).
    void validate() const;
};

inline constexpr int kEnumerationCap = 7;

struct SearchResult {
    int optimum = 0;
    Code witness{{BinaryWord{}}};
    std::uint64_t node_count = 0;
    std::chrono::milliseconds wall_time{0};
    /// False when the budget ran out; `optimum` is then only a lower bound.
    bool exhausted = false;
};

/// Maximum code size under the configured pruning. Throws DomainError when
/// forced codewords conflict with each other.
SearchResult max_code_size(const SearchConfig& config);

struct EnumerationResult {
    int optimum = 0;
    /// Inequivalent basic optimal codes, one canonical representative each,
    /// sorted.
    std::vector<Code> codes;
    std::uint64_t node_count = 0;
    std::chrono::milliseconds wall_time{0};
    bool exhausted = false;
};

/// All optimal codes that are basic, up to equivalence. The target size is
/// the optimum over the unpruned, unforced graph, so an empty list means no
/// optimal code is basic.
EnumerationResult enumerate_optimal_codes(const SearchConfig& config);

}  // namespace delcode
