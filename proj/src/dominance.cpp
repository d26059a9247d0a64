#include "delcode/dominance.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <thread>

#include "delcode/error.hpp"

namespace delcode {

namespace {

void require_same_length(const BinaryWord& u, const BinaryWord& v) {
    if (u.size() != v.size()) throw DomainError("dominance needs equal-length words");
}

void require_deletions(int t, int n) {
    if (t < 1 || t > n) throw DomainError("deletion count " + std::to_string(t) + " out of range 1.." + std::to_string(n));
}

void require_scan_length(int n) {
    if (n < 1 || n > kBruteForceCap)
        throw DomainError("length " + std::to_string(n) + " outside exhaustive-scan range 1.." +
                          std::to_string(kBruteForceCap));
}

// D_t(v) is a subset of D_t(u), given D_t(v) already materialized. A word of
// length n - t lies in D_t(u) iff it is a subsequence of u, and containment
// forces the balls to meet, so lcs(u, v) >= n - t is a necessary first test.
bool ball_contained(const BinaryWord& u, const BinaryWord& v, const WordSet& ball_v, int t) {
    if (lcs_length(u, v) < u.size() - t) return false;
    return std::all_of(ball_v.begin(), ball_v.end(), [&](const BinaryWord& x) { return is_subsequence(x, u); });
}

}  // namespace

std::optional<DominancePair> DominancePair::checked(const BinaryWord& u, const BinaryWord& v, int t) {
    if (!is_dominant(u, v, t)) return std::nullopt;
    return DominancePair{u, v, t};
}

bool is_dominant(const BinaryWord& u, const BinaryWord& v, int t) {
    require_same_length(u, v);
    require_deletions(t, u.size());
    if (u == v) return false;
    if (deletion_distance(u, v) > t) return false;
    return ball_contained(u, v, deletion_ball(v, t), t);
}

std::vector<DominancePair> enumerate_dominant_pairs(int n, int t, unsigned workers) {
    require_scan_length(n);
    if (n < 2) throw DomainError("dominance scan needs n >= 2");
    if (t < 1 || t > std::min(3, n)) throw DomainError("dominance scan supports 1 <= t <= min(3, n)");

    const std::uint64_t count = std::uint64_t{1} << n;
    workers = std::clamp<unsigned>(workers, 1, 64);
    std::vector<std::vector<DominancePair>> partial(workers);

    auto scan = [&](unsigned w) {
        // Contiguous ranges of packed u are exactly the u-prefix classes.
        const std::uint64_t lo = count * w / workers;
        const std::uint64_t hi = count * (w + 1) / workers;
        auto& out = partial[w];
        for (std::uint64_t vb = 0; vb < count; ++vb) {
            const BinaryWord v(vb, n);
            const WordSet ball_v = deletion_ball(v, t);
            for (std::uint64_t ub = lo; ub < hi; ++ub) {
                if (ub == vb) continue;
                const BinaryWord u(ub, n);
                if (ball_contained(u, v, ball_v, t)) out.push_back({u, v, t});
            }
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    }

    std::vector<DominancePair> all;
    for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<DominancePair> ClosedForm::pair_list() const {
    std::vector<DominancePair> out;
    out.reserve(pairs.size());
    for (const auto& [pair, sources] : pairs) out.push_back(pair);
    return out;
}

namespace {

std::vector<DominancePair> images(const DominancePair& p) {
    return {
        p,
        {complement(p.u), complement(p.v), p.t},
        {reverse(p.u), reverse(p.v), p.t},
        {reverse_complement(p.u), reverse_complement(p.v), p.t},
    };
}

void add(ClosedForm& cf, const DominancePair& pair, Provenance prov) {
    auto& sources = cf.pairs[pair];
    if (std::find(sources.begin(), sources.end(), prov) == sources.end()) {
        sources.push_back(prov);
        std::sort(sources.begin(), sources.end());
    }
}

void add_trivial(ClosedForm& cf) {
    const int n = cf.n;
    const int t = cf.t;
    const auto zero = BinaryWord::constant(0, n);
    const auto one = BinaryWord::constant(1, n);
    for (const auto& u : all_words(n)) {
        const int wt = weight(u);
        if (u != zero && wt <= t) add(cf, {u, zero, t}, {PatternSource::TrivialZero, 1});
        if (u != one && wt >= n - t) add(cf, {u, one, t}, {PatternSource::TrivialOne, 2});
    }
}

// Instantiates each template over both symbol assignments and every m that
// keeps all exponents non-negative; instances failing the subset test go to
// `filtered`, the rest to `accepted`.
void instantiate(ClosedForm& cf, const std::vector<PatternPair>& patterns,
                 std::vector<std::pair<DominancePair, Provenance>>& accepted) {
    const int n = cf.n;
    for (const auto& pattern : patterns) {
        const int m_lo = pattern.uses_m() ? -n : 0;
        const int m_hi = pattern.uses_m() ? 2 * n : 0;
        for (int p = 0; p <= 1; ++p) {
            for (int m = m_lo; m <= m_hi; ++m) {
                const auto words = pattern.instantiate(n, m, p);
                if (!words) continue;
                const auto& [u, v] = *words;
                if (u.size() != n || v.size() != n)
                    throw std::logic_error("template " + pattern.u.text() + " does not have length n");
                if (auto pair = DominancePair::checked(u, v, cf.t))
                    accepted.emplace_back(*pair, Provenance{pattern.source, pattern.row});
                else
                    cf.filtered.push_back({pattern.source, pattern.row, m, p, u, v});
            }
        }
    }
}

}  // namespace

ClosedForm generate_closed_form_detailed(int n, int t) {
    if (t != 1 && t != 2) throw DomainError("closed-form characterization exists only for t = 1 and t = 2");
    if (n < t + 1) throw DomainError("closed form for t = " + std::to_string(t) + " needs n >= " + std::to_string(t + 1));
    if (n > BinaryWord::kMaxLength) throw DomainError("length exceeds word cap");
    if (n > 30) throw DomainError("closed-form generation enumerates all words; n must be <= 30");

    ClosedForm cf;
    cf.n = n;
    cf.t = t;
    add_trivial(cf);

    std::vector<std::pair<DominancePair, Provenance>> accepted;
    if (t == 1) {
        instantiate(cf, one_deletion_patterns(), accepted);
        for (const auto& [pair, prov] : accepted) add(cf, pair, prov);
        return cf;
    }

    for (const auto& pair : generate_closed_form(n, 1))
        add(cf, {pair.u, pair.v, 2}, {PatternSource::Monotone, 0});

    if (n <= 4) {
        for (const auto& pair : enumerate_dominant_pairs(n, 2)) add(cf, pair, {PatternSource::SmallN, n});
        return cf;
    }

    instantiate(cf, two_deletion_patterns(), accepted);
    for (const auto& [pair, prov] : accepted)
        for (const auto& image : images(pair)) add(cf, image, prov);
    return cf;
}

std::vector<DominancePair> generate_closed_form(int n, int t) { return generate_closed_form_detailed(n, t).pair_list(); }

std::vector<DominancePair> equivalence_closure(std::span<const DominancePair> pairs) {
    std::vector<DominancePair> out;
    out.reserve(pairs.size() * 4);
    for (const auto& p : pairs)
        for (const auto& image : images(p)) out.push_back(image);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CharacterizationReport verify_characterization(int n, int t, unsigned workers) {
    if (t != 1 && t != 2) throw DomainError("verification supports t = 1 and t = 2");
    require_scan_length(n);

    CharacterizationReport report;
    report.n = n;
    report.t = t;
    const auto brute = enumerate_dominant_pairs(n, t, workers);
    ClosedForm cf = generate_closed_form_detailed(n, t);
    const auto generated = cf.pair_list();

    report.brute_count = brute.size();
    report.generated_count = generated.size();
    std::set_difference(brute.begin(), brute.end(), generated.begin(), generated.end(),
                        std::back_inserter(report.missing));
    for (const auto& pair : generated)
        if (pair.t != t || !is_dominant(pair.u, pair.v, t)) report.spurious.push_back(pair);
    report.filtered = std::move(cf.filtered);
    return report;
}

WordSet dominators_of(const BinaryWord& v, int t) {
    const int n = v.size();
    require_scan_length(n);
    require_deletions(t, n);
    const WordSet ball_v = deletion_ball(v, t);
    std::vector<BinaryWord> out;
    for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << n); ++ub) {
        const BinaryWord u(ub, n);
        if (u != v && ball_contained(u, v, ball_v, t)) out.push_back(u);
    }
    return WordSet(n, std::move(out));
}

WordSet subordinates_of(const BinaryWord& u, int t) {
    const int n = u.size();
    require_scan_length(n);
    require_deletions(t, n);
    std::vector<BinaryWord> out;
    for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << n); ++vb) {
        const BinaryWord v(vb, n);
        if (v == u || lcs_length(u, v) < n - t) continue;
        if (ball_contained(u, v, deletion_ball(v, t), t)) out.push_back(v);
    }
    return WordSet(n, std::move(out));
}

}  // namespace delcode
