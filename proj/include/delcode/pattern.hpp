#pragma once

// Run-length templates such as p^{m-1} q p q^{n-m-1}, where {p,q} = {0,1}
// and every exponent is affine in the word length n and a free parameter m.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

/// Where a dominant pair came from in the closed-form generator.
enum class PatternSource {
    TrivialZero,  ///< v = 0^n, wt(u) <= t
    TrivialOne,   ///< v = 1^n, wt(u) >= n - t
    Table1Row,    ///< the single nontrivial t = 1 family
    Prop3Form,    ///< t = 2, u and v at Hamming distance 1
    Prop4Form,    ///< t = 2, first and last symbols both differ
    Prop5Row,     ///< t = 2, common first symbol, two or more differences
    SmallN,       ///< t = 2, n in {3, 4}, taken from exhaustive search
    Monotone,     ///< a 1-dominant pair reused at t = 2
};

std::string_view to_string(PatternSource source) noexcept;

/// constant + per_n * n + per_m * m
struct Exponent {
    int constant = 0;
    int per_n = 0;
    int per_m = 0;

    constexpr int eval(int n, int m) const noexcept { return constant + per_n * n + per_m * m; }
    Exponent& operator+=(const Exponent& o) noexcept {
        constant += o.constant;
        per_n += o.per_n;
        per_m += o.per_m;
        return *this;
    }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

enum class Role { P, Q };

struct TemplateRun {
    Role role;
    Exponent exponent;
};

/// A word written as a product of powers of the symbol roles p and q.
class WordTemplate {
public:
    /// Accepts text like "p^{m-1}qpq^{n-m-1}", "p^mq^{n-m}", "qp^2".
    /// Exponents are single digits, the letters n or m, or a braced sum of
    /// integer, n and m terms. Throws DomainError on malformed input.
    static WordTemplate parse(std::string_view text);

    const std::vector<TemplateRun>& runs() const noexcept { return runs_; }
    const std::string& text() const noexcept { return text_; }

    /// Sum of the run exponents as an affine expression.
    Exponent total_length() const noexcept;
    bool uses_m() const noexcept;

    /// The concrete word for p = `p_symbol`, or nullopt when some exponent is
    /// negative.
    std::optional<BinaryWord> instantiate(int n, int m, int p_symbol) const;

private:
    std::vector<TemplateRun> runs_;
    std::string text_;
};

/// One row of a dominance table: u (dominant) over v (subordinate).
struct PatternPair {
    PatternSource source;
    int row;
    WordTemplate u;
    WordTemplate v;

    bool uses_m() const noexcept { return u.uses_m() || v.uses_m(); }
    /// Both words, or nullopt when an exponent is negative.
    std::optional<std::pair<BinaryWord, BinaryWord>> instantiate(int n, int m, int p_symbol) const;
};

/// The nontrivial one-deletion family.
const std::vector<PatternPair>& one_deletion_patterns();

/// The two-deletion forms for n >= 5: two Hamming-distance-1 forms, two
/// forms with differing end symbols, and the eighteen-row table.
const std::vector<PatternPair>& two_deletion_patterns();

}  // namespace delcode
