#pragma once

// t-dominance: u dominates v when u != v and D_t(v) is a subset of D_t(u).
// Brute-force enumeration, closed-form generation from the dominance tables,
// equivalence closure and the cross-check between the two.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "delcode/pattern.hpp"
#include "delcode/word.hpp"

namespace delcode {

/// Largest n accepted by the 2^n x 2^n scans.
inline constexpr int kBruteForceCap = 14;

struct DominancePair {
    BinaryWord u;  ///< dominant
    BinaryWord v;  ///< subordinate
    int t = 1;

    /// The pair if u != v and D_t(v) is contained in D_t(u), else nullopt.
    static std::optional<DominancePair> checked(const BinaryWord& u, const BinaryWord& v, int t);

    friend bool operator==(const DominancePair&, const DominancePair&) = default;
    /// Canonical report order: (v, u, t).
    friend bool operator<(const DominancePair& a, const DominancePair& b) noexcept {
        if (a.v != b.v) return a.v < b.v;
        if (a.u != b.u) return a.u < b.u;
        return a.t < b.t;
    }
};

bool is_dominant(const BinaryWord& u, const BinaryWord& v, int t);

/// Scans every ordered pair of length-n words. Work is split by u-prefix
/// across `workers` threads; the result does not depend on the split.
std::vector<DominancePair> enumerate_dominant_pairs(int n, int t, unsigned workers = 1);

struct Provenance {
    PatternSource source;
    int row = 0;
    friend bool operator==(const Provenance&, const Provenance&) = default;
    friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

/// A template instantiation that failed the checked constructor.
struct FilteredInstance {
    PatternSource source;
    int row = 0;
    int m = 0;
    int p = 0;
    BinaryWord u;
    BinaryWord v;
};

struct ClosedForm {
    int n = 0;
    int t = 0;
    /// Every generated pair with all the sources that produced it.
    std::map<DominancePair, std::vector<Provenance>> pairs;
    std::vector<FilteredInstance> filtered;

    std::vector<DominancePair> pair_list() const;
};

/// Pairs predicted by the closed-form characterization (t in {1, 2}).
ClosedForm generate_closed_form_detailed(int n, int t);
std::vector<DominancePair> generate_closed_form(int n, int t);

/// Closure under complement, reversal and reversed complement applied to both
/// words of each pair. Result is sorted canonically.
std::vector<DominancePair> equivalence_closure(std::span<const DominancePair> pairs);

struct CharacterizationReport {
    int n = 0;
    int t = 0;
    std::size_t brute_count = 0;
    std::size_t generated_count = 0;
    std::vector<DominancePair> missing;   ///< found by the scan, not generated
    std::vector<DominancePair> spurious;  ///< generated, but fails the subset test
    std::vector<FilteredInstance> filtered;

    bool confirmed() const noexcept { return missing.empty() && spurious.empty(); }
};

CharacterizationReport verify_characterization(int n, int t, unsigned workers = 1);

/// All u with is_dominant(u, v, t).
WordSet dominators_of(const BinaryWord& v, int t);
/// All v with is_dominant(u, v, t).
WordSet subordinates_of(const BinaryWord& u, int t);

}  // namespace delcode
