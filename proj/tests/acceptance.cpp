// Acceptance gate: one PASS/FAIL line per criterion. A criterion passes only
// when its check holds and it finishes inside its pinned time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "delcode/code.hpp"
#include "delcode/dominance.hpp"
#include "delcode/search.hpp"
#include "delcode/word.hpp"
#include "oracles.hpp"

using namespace delcode;

namespace {

using Clock = std::chrono::steady_clock;
using Millis = std::chrono::duration<double, std::milli>;

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << what;
            else detail << "; " << what;
            ok = false;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    Millis limit;
    std::function<void(Verdict&)> check;
};

BinaryWord W(std::string_view s) { return BinaryWord::parse(s); }

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

std::string format_pairs(const std::vector<DominancePair>& pairs, std::size_t limit = 10) {
    std::string out;
    for (std::size_t i = 0; i < pairs.size() && i < limit; ++i) {
        if (!out.empty()) out += ", ";
        out += "(" + pairs[i].u.str() + "," + pairs[i].v.str() + ")";
    }
    if (pairs.size() > limit) out += ", ...";
    return out;
}

SearchConfig search_config(int n, int t, bool basic_only, bool force_constants) {
    SearchConfig c;
    c.n = n;
    c.t = t;
    c.basic_only = basic_only;
    c.force_constants = force_constants;
    c.parallelism = workers();
    return c;
}

const Code kExample{{W("00000"), W("11111"), W("00011"), W("11000"), W("10101"), W("01110")}};

// Each fixture is timed on its own against the per-fixture limit.
void distance_fixtures(Verdict& v) {
    struct Fixture {
        const char* x;
        const char* y;
        bool levenshtein;
        int expected;
    };
    const Fixture fixtures[] = {
        {"00000", "11111", false, 5},
        {"00011", "10101", false, 2},
        {"0100", "110101", true, 4},
    };
    for (const auto& f : fixtures) {
        const auto start = Clock::now();
        const int d = f.levenshtein ? levenshtein_indel(W(f.x), W(f.y)) : deletion_distance(W(f.x), W(f.y));
        const Millis elapsed = Clock::now() - start;
        const std::string label = std::string(f.levenshtein ? "d_L(" : "dd(") + f.x + "," + f.y + ")";
        v.require(d == f.expected, label + "=" + std::to_string(d) + ", expected " + std::to_string(f.expected));
        v.require(elapsed.count() < 1.0, label + " took " + std::to_string(elapsed.count()) + " ms");
    }
}

void example_code(Verdict& v) {
    const auto check = check_t_deletion_correcting(kExample, 1);
    v.require(check.correcting, "six-word code is not 1-deletion-correcting");
}

void characterization_one(Verdict& v) {
    for (int n = 2; n <= 12; ++n) {
        const auto r = verify_characterization(n, 1, workers());
        const std::string at = "n=" + std::to_string(n) + ": ";
        v.require(r.missing.empty(), at + "missing " + format_pairs(r.missing));
        v.require(r.spurious.empty(), at + "spurious " + format_pairs(r.spurious));
        v.require(r.brute_count == static_cast<std::size_t>(4 * n - 2),
                  at + "brute count " + std::to_string(r.brute_count) + " != 4n-2");
        if (n <= 7) {
            std::size_t oracle_count = 0;
            const auto words = oracle::all_strings(n);
            for (const auto& a : words)
                for (const auto& b : words) oracle_count += oracle::dominates(a, b, 1);
            v.require(r.brute_count == oracle_count, at + "brute count disagrees with the string oracle");
        }
    }
}

void characterization_two(Verdict& v) {
    for (int n = 3; n <= 10; ++n) {
        const auto r = verify_characterization(n, 2, workers());
        const std::string at = "n=" + std::to_string(n) + ": ";
        v.require(r.missing.empty(), at + "missing " + format_pairs(r.missing));
        v.require(r.spurious.empty(), at + "spurious " + format_pairs(r.spurious));
        v.require(r.generated_count == r.brute_count, at + "generated and brute counts differ");
    }
}

// Every single (double) deletion of x equals y only when x and y are constant
// words over the same symbol; and constant words do have that property.
void constant_words(Verdict& v) {
    for (int t = 1; t <= 2; ++t)
        for (int n = t + 1; n <= 10; ++n)
            for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << n); ++xb) {
                const BinaryWord x(xb, n);
                for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << (n - t)); ++yb) {
                    const BinaryWord y(yb, n - t);
                    bool every = true;
                    for (int i = 1; i <= n && every; ++i) {
                        if (t == 1) {
                            every = delete_at(x, i) == y;
                            continue;
                        }
                        for (int j = i + 1; j <= n && every; ++j) every = delete_at(delete_at(x, j), i) == y;
                    }
                    const bool constant_pair = x.is_constant() && y.is_constant() && x.at(1) == y.at(1);
                    if (every != constant_pair) {
                        v.require(false, "t=" + std::to_string(t) + " x=" + x.str() + " y=" + y.str());
                        return;
                    }
                }
            }
}

void monotonicity(Verdict& v) {
    for (int n = 2; n <= 9; ++n) {
        const auto words = all_words(n);
        for (const auto& u : words)
            for (const auto& w : words)
                if (is_dominant(u, w, 1) && !is_dominant(u, w, 2)) {
                    v.require(false, "(" + u.str() + "," + w.str() + ") is 1-dominant but not 2-dominant");
                    return;
                }
    }
}

void search_cross_validation(Verdict& v) {
    const auto r5 = max_code_size(search_config(5, 1, true, true));
    v.require(r5.exhausted && r5.optimum == 6, "L2(5,1) = " + std::to_string(r5.optimum) + ", expected 6");
    v.require(r5.witness.size() == 6 && is_t_deletion_correcting(r5.witness, 1), "invalid witness at n=5");
    for (int n = 2; n <= 7; ++n)
        for (int t = 1; t <= std::min(2, n - 1); ++t) {
            std::vector<int> optima;
            for (bool basic_only : {false, true})
                for (bool force : {false, true}) {
                    const auto r = max_code_size(search_config(n, t, basic_only, force));
                    const std::string at = "n=" + std::to_string(n) + " t=" + std::to_string(t) + ": ";
                    v.require(r.exhausted, at + "budget exhausted");
                    v.require(static_cast<int>(r.witness.size()) == r.optimum &&
                                  is_t_deletion_correcting(r.witness, t),
                              at + "invalid witness");
                    optima.push_back(r.optimum);
                }
            v.require(std::equal(optima.begin() + 1, optima.end(), optima.begin()),
                      "n=" + std::to_string(n) + " t=" + std::to_string(t) + ": optima differ across flags");
        }
}

void vt_baseline(Verdict& v) {
    for (int n = 1; n <= 10; ++n) {
        std::vector<BinaryWord> all;
        for (int a = 0; a <= n; ++a) {
            const auto code = vt_code(n, a);
            all.insert(all.end(), code.begin(), code.end());
            if (n >= 2)
                v.require(is_t_deletion_correcting(code, 1),
                          "VT_" + std::to_string(a) + "(" + std::to_string(n) + ") is not 1-deletion-correcting");
        }
        v.require(all.size() == (std::size_t{1} << n) && WordSet(n, all).size() == all.size(),
                  "residue classes do not partition the words of length " + std::to_string(n));
    }
    for (int n = 2; n <= 7; ++n) {
        const auto r = max_code_size(search_config(n, 1, false, false));
        const auto size = vt_code(n, 0).size();
        v.require(r.exhausted && static_cast<std::size_t>(r.optimum) == size,
                  "n=" + std::to_string(n) + ": |VT_0| = " + std::to_string(size) + ", L2 = " +
                      std::to_string(r.optimum));
    }
}

void equivalence_invariance(Verdict& v) {
    using Map = BinaryWord (*)(const BinaryWord&) noexcept;
    const Map maps[] = {&complement, &reverse, &reverse_complement};
    for (int n = 2; n <= 8; ++n) {
        const auto words = all_words(n);
        for (int t = 1; t <= std::min(2, n - 1); ++t) {
            const std::string at = "n=" + std::to_string(n) + " t=" + std::to_string(t) + ": ";
            // Dominance and pairwise correction; a code corrects t deletions
            // exactly when every pair of its words does, so checking all pairs
            // covers every code.
            for (const auto& a : words)
                for (const auto& b : words) {
                    const bool dominant = is_dominant(a, b, t);
                    const bool correcting = a == b || is_t_deletion_correcting(Code({a, b}), t);
                    for (auto map : maps) {
                        if (is_dominant(map(a), map(b), t) != dominant) {
                            v.require(false, at + "dominance changes for (" + a.str() + "," + b.str() + ")");
                            return;
                        }
                        if (a != b && is_t_deletion_correcting(Code({map(a), map(b)}), t) != correcting) {
                            v.require(false, at + "correction changes for {" + a.str() + "," + b.str() + "}");
                            return;
                        }
                    }
                }
            // The maps permute the pruned candidate set as well.
            const auto candidates = build_candidates(n, t, true);
            for (auto map : maps)
                for (const auto& c : candidates)
                    if (!std::binary_search(candidates.begin(), candidates.end(), map(c))) {
                        v.require(false, at + "candidate set not closed under a symmetry");
                        return;
                    }
            // Optimum: images of an optimal code are codes of the same size.
            // The exhaustive pair check above already makes every map an
            // automorphism of the conflict graph; the search runs where it
            // finishes in desk time.
            if (n == 8 && t == 1) continue;
            const auto r = max_code_size(search_config(n, t, false, false));
            v.require(r.exhausted, at + "search budget exhausted");
            for (auto map : maps) {
                const auto image = map_code(r.witness, map);
                v.require(static_cast<int>(image.size()) == r.optimum && is_t_deletion_correcting(image, t),
                          at + "image of an optimal code is not an optimal code");
            }
        }
    }
}

}  // namespace

int main() {
    using std::chrono::minutes;
    using std::chrono::seconds;
    const std::vector<Criterion> criteria{
        {1, "distance fixtures", Millis(3.0), distance_fixtures},
        {2, "six-word example code corrects one deletion", Millis(10.0), example_code},
        {3, "single-deletion dominance characterization, 2 <= n <= 12", minutes(2), characterization_one},
        {4, "double-deletion dominance characterization, 3 <= n <= 10", minutes(5), characterization_two},
        {5, "only constant words collapse under all deletions, n <= 10", seconds(10), constant_words},
        {6, "1-dominance implies 2-dominance, n <= 9", minutes(1), monotonicity},
        {7, "search optimum and pruning/forcing cross-validation, n <= 7", minutes(5), search_cross_validation},
        {8, "VT codes: correction, partition and optimality, n <= 10", minutes(2), vt_baseline},
        {9, "invariance under complement and reversal, n <= 8", minutes(1), equivalence_invariance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        const auto start = Clock::now();
        try {
            c.check(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const Millis elapsed = Clock::now() - start;
        v.require(elapsed <= c.limit, "over time limit");
        char timing[96];
        std::snprintf(timing, sizeof timing, "%.3f ms, limit %.0f ms", elapsed.count(), c.limit.count());
        std::cout << (v.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " (" << timing << ")";
        if (!v.ok) std::cout << ": " << v.detail.str();
        std::cout << std::endl;
        failures += !v.ok;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
