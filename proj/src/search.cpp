#include "delcode/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "delcode/dominance.hpp"
#include "delcode/error.hpp"

namespace delcode {

bool VertexSet::none() const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
}

std::size_t VertexSet::first() const noexcept {
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        if (blocks_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[k]));
    return npos;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept {
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] &= o.blocks_[k];
    return *this;
}

ConflictGraph::ConflictGraph(std::vector<BinaryWord> vertices, int t) : t_(t), vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    const std::size_t n = vertices_.size();
    for (const auto& w : vertices_)
        if (w.size() != vertices_.front().size()) throw DomainError("conflict graph vertices must share one length");
    adjacency_.assign(n, VertexSet(n));
    degrees_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (deletion_distance(vertices_[i], vertices_[j]) <= t) {
                adjacency_[i].set(j);
                adjacency_[j].set(i);
                ++degrees_[i];
                ++degrees_[j];
            }
}

std::optional<std::size_t> ConflictGraph::index_of(const BinaryWord& w) const noexcept {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
    if (it == vertices_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

ConflictGraph build_conflict_graph(std::span<const BinaryWord> candidates, int t) {
    return ConflictGraph(std::vector<BinaryWord>(candidates.begin(), candidates.end()), t);
}

std::vector<BinaryWord> build_candidates(int n, int t, bool basic_only) {
    if (n < 1 || n > 20) throw DomainError("candidate length must be in 1..20");
    std::vector<BinaryWord> words;
    words.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) words.emplace_back(b, n);
    if (!basic_only) return words;

    std::vector<bool> dominant(words.size(), false);
    for (const auto& pair : enumerate_dominant_pairs(n, t)) dominant[pair.u.bits()] = true;
    std::vector<BinaryWord> kept;
    for (const auto& w : words)
        if (!dominant[w.bits()]) kept.push_back(w);
    return kept;
}

void SearchConfig::validate() const {
    if (t < 1 || t > 3) throw DomainError("search supports t in 1..3");
    if (t >= n) throw DomainError("search needs t < n (for t >= n every pair of words conflicts)");
    const int cap = t == 1 ? 12 : 10;
    if (n > cap)
        throw DomainError("search length " + std::to_string(n) + " exceeds cap " + std::to_string(cap) + " for t=" +
                          std::to_string(t));
    if (parallelism < 1 || parallelism > 64) throw DomainError("parallelism must be in 1..64");
    if (time_budget.count() <= 0) throw DomainError("time budget must be positive");
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Mode {
    Maximize,   // largest independent set
    Enumerate,  // every independent set of exactly `target` vertices
    Reach,      // stop at the first independent set of `target` vertices
};

struct Outcome {
    std::size_t best = 0;
    std::vector<std::size_t> best_set;  // graph indices
    std::vector<std::vector<std::size_t>> all;
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

// Branch and bound over bitsets. Vertices are relabelled to positions in
// (degree desc, packed asc) order. The bound partitions the open vertices
// into conflict cliques, each contributing at most one vertex: every word x
// of length n - t yields the clique of candidates containing x, and the
// cover greedily takes the largest such clique on what remains.
class Solver {
public:
    Solver(const ConflictGraph& graph, Clock::time_point deadline) : graph_(graph), deadline_(deadline) {
        const std::size_t n = graph.size();
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return graph.degree(a) > graph.degree(b); });
        position_.resize(n);
        for (std::size_t p = 0; p < n; ++p) position_[order_[p]] = p;
        conflict_.assign(n, VertexSet(n));
        compatible_.assign(n, VertexSet(n));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (p == q) continue;
                if (graph.adjacent(order_[p], order_[q]))
                    conflict_[p].set(q);
                else
                    compatible_[p].set(q);
            }
        if (n == 0) return;
        const int length = graph.vertices().front().size() - graph.t();
        std::vector<VertexSet> cliques;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << length); ++b) {
            const BinaryWord x(b, length);
            VertexSet members(n);
            for (std::size_t p = 0; p < n; ++p)
                if (is_subsequence(x, graph.vertices()[order_[p]])) members.set(p);
            if (members.count() >= 2) cliques.push_back(std::move(members));
        }
        // Drop cliques contained in another one; they can never be the
        // largest choice.
        std::vector<bool> dropped(cliques.size(), false);
        for (std::size_t i = 0; i < cliques.size(); ++i)
            for (std::size_t j = 0; j < cliques.size() && !dropped[i]; ++j)
                if (i != j && !dropped[j] && contains(cliques[j], cliques[i]) &&
                    (cliques[i].count() < cliques[j].count() || j < i))
                    dropped[i] = true;
        for (std::size_t i = 0; i < cliques.size(); ++i)
            if (!dropped[i]) cliques_.push_back(std::move(cliques[i]));
    }

    // `chosen` and `allowed` use graph indices; `allowed` (when given) limits
    // the vertices that may be added.
    Outcome run(Mode mode, const std::vector<std::size_t>& chosen, const VertexSet* allowed, std::size_t target,
                unsigned threads) {
        const std::size_t n = graph_.size();
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                if (graph_.adjacent(chosen[i], chosen[j]))
                    throw DomainError("forced codewords " + graph_.vertices()[chosen[i]].str() + " and " +
                                      graph_.vertices()[chosen[j]].str() + " conflict");

        VertexSet open(n);
        for (std::size_t p = 0; p < n; ++p)
            if (!allowed || allowed->test(order_[p])) open.set(p);
        std::vector<std::size_t> base;
        for (auto g : chosen) {
            const auto p = position_[g];
            base.push_back(p);
            open &= compatible_[p];
        }

        State state(mode, target);
        state.best = base.size();
        state.best_set = base;
        if (mode == Mode::Maximize) {
            // Greedy incumbent, low-degree vertices first, so that even a
            // search cut short by the budget reports a useful lower bound.
            std::vector<std::size_t> greedy = base;
            VertexSet rest = open;
            for (std::size_t p = n; p-- > 0;)
                if (rest.test(p)) {
                    greedy.push_back(p);
                    rest &= compatible_[p];
                }
            if (greedy.size() > base.size()) {
                state.best = greedy.size();
                state.best_set = std::move(greedy);
            }
        }
        if (mode != Mode::Maximize && base.size() >= target) {
            state.best_set = base;
            state.all.push_back(base);
            state.reached = true;
        } else if (!open.none()) {
            search_root(state, open, base, threads);
        }

        Outcome out;
        out.best = state.best.load();
        out.nodes = state.nodes.load();
        out.timed_out = state.timed_out.load();
        for (auto p : state.best_set) out.best_set.push_back(order_[p]);
        for (const auto& set : state.all) {
            auto& g = out.all.emplace_back();
            for (auto p : set) g.push_back(order_[p]);
        }
        if (mode == Mode::Reach && !state.reached) out.best_set.clear();
        return out;
    }

private:
    struct State {
        State(Mode m, std::size_t t) : mode(m), target(t) {}

        Mode mode;
        std::size_t target;
        std::atomic<std::size_t> best{0};
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> stop{false};
        std::atomic<bool> timed_out{false};
        bool reached = false;
        std::mutex mu;
        std::vector<std::size_t> best_set;
        std::vector<std::vector<std::size_t>> all;
    };

    struct Worker {
        std::vector<std::size_t> current;
        std::uint64_t nodes = 0;
    };

    bool pruned(const State& s, std::size_t bound) const {
        if (s.mode == Mode::Maximize) return bound <= s.best.load(std::memory_order_relaxed);
        return bound < s.target;
    }

    static bool contains(const VertexSet& outer, const VertexSet& inner) {
        for (std::size_t b = 0; b < outer.block_count(); ++b)
            if (inner.data()[b] & ~outer.data()[b]) return false;
        return true;
    }

    // Fills `vertices` and `bounds` so that bounds[i] is an upper bound on the
    // independent set size within vertices[0..i].
    void cover(const VertexSet& open, std::vector<std::size_t>& vertices, std::vector<std::size_t>& bounds) const {
        vertices.clear();
        bounds.clear();
        VertexSet rest = open;
        const std::size_t blocks = rest.block_count();
        std::uint64_t* r = rest.data();
        std::size_t k = 0;
        for (;;) {
            std::size_t best = 0;
            const VertexSet* chosen = nullptr;
            for (const auto& c : cliques_) {
                std::size_t size = 0;
                const std::uint64_t* q = c.data();
                for (std::size_t b = 0; b < blocks; ++b) size += static_cast<std::size_t>(std::popcount(q[b] & r[b]));
                if (size > best) {
                    best = size;
                    chosen = &c;
                }
            }
            if (best <= 1) break;
            ++k;
            const std::uint64_t* q = chosen->data();
            for (std::size_t b = 0; b < blocks; ++b) {
                std::uint64_t bits = q[b] & r[b];
                r[b] &= ~bits;
                for (; bits; bits &= bits - 1) {
                    vertices.push_back(b * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                    bounds.push_back(k);
                }
            }
        }
        // Whatever is left has no open conflict clique of size two; each
        // vertex is its own clique.
        for (std::size_t b = 0; b < blocks; ++b)
            for (std::uint64_t bits = r[b]; bits; bits &= bits - 1) {
                vertices.push_back(b * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bounds.push_back(++k);
            }
    }

    void record(State& s, const std::vector<std::size_t>& set) {
        const std::size_t size = set.size();
        switch (s.mode) {
            case Mode::Maximize: {
                if (size <= s.best.load()) return;
                std::lock_guard lock(s.mu);
                if (size > s.best.load()) {
                    s.best.store(size);
                    s.best_set = set;
                }
                return;
            }
            case Mode::Enumerate: {
                if (size != s.target) return;
                std::lock_guard lock(s.mu);
                s.all.push_back(set);
                if (size > s.best.load()) s.best.store(size);
                return;
            }
            case Mode::Reach: {
                if (size < s.target) return;
                std::lock_guard lock(s.mu);
                if (!s.reached) {
                    s.reached = true;
                    s.best.store(size);
                    s.best_set = set;
                }
                s.stop.store(true);
                return;
            }
        }
    }

    bool tick(State& s, Worker& w) const {
        // One clock read per node: a bound computation costs far more.
        ++w.nodes;
        if (Clock::now() > deadline_) {
            s.timed_out.store(true);
            s.stop.store(true);
        }
        return !s.stop.load(std::memory_order_relaxed);
    }

    // Includes vertices[i] with the later vertices already excluded.
    void branch(State& s, Worker& w, const VertexSet& open, std::size_t v) {
        w.current.push_back(v);
        VertexSet next = open;
        next &= compatible_[v];
        if (next.none() || (s.mode != Mode::Maximize && w.current.size() >= s.target))
            record(s, w.current);
        else
            expand(s, w, next);
        w.current.pop_back();
    }

    void expand(State& s, Worker& w, VertexSet open) {
        if (!tick(s, w)) return;
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> bounds;
        cover(open, vertices, bounds);
        for (std::size_t i = vertices.size(); i-- > 0;) {
            if (pruned(s, w.current.size() + bounds[i])) return;
            branch(s, w, open, vertices[i]);
            open.reset(vertices[i]);
            if (s.stop.load(std::memory_order_relaxed)) return;
        }
    }

    void search_root(State& s, const VertexSet& open, const std::vector<std::size_t>& base, unsigned threads) {
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> bounds;
        cover(open, vertices, bounds);
        std::atomic<std::size_t> next_task{0};
        const std::size_t n = graph_.size();

        auto work = [&] {
            Worker w;
            w.current = base;
            for (;;) {
                const std::size_t k = next_task.fetch_add(1);
                if (k >= vertices.size() || s.stop.load()) break;
                const std::size_t i = vertices.size() - 1 - k;
                if (pruned(s, base.size() + bounds[i])) break;  // bounds only shrink from here on
                VertexSet prefix(n);
                for (std::size_t j = 0; j <= i; ++j) prefix.set(vertices[j]);
                ++w.nodes;
                branch(s, w, prefix, vertices[i]);
            }
            s.nodes.fetch_add(w.nodes);
        };

        if (threads <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
        }
    }

    const ConflictGraph& graph_;
    Clock::time_point deadline_;
    std::vector<std::size_t> order_;     // position -> graph index
    std::vector<std::size_t> position_;  // graph index -> position
    std::vector<VertexSet> conflict_;
    std::vector<VertexSet> compatible_;
    std::vector<VertexSet> cliques_;  // by position
};

std::vector<std::size_t> forced_indices(const ConflictGraph& graph, const SearchConfig& config) {
    if (!config.force_constants) return {};
    std::vector<std::size_t> out;
    for (int symbol : {0, 1}) {
        const auto idx = graph.index_of(BinaryWord::constant(symbol, config.n));
        if (!idx) throw std::logic_error("constant word missing from candidate set");
        out.push_back(*idx);
    }
    return out;
}

Code to_code(const ConflictGraph& graph, const std::vector<std::size_t>& indices) {
    std::vector<BinaryWord> words;
    for (auto i : indices) words.push_back(graph.vertices()[i]);
    return Code(std::move(words));
}

// Lexicographically smallest optimal code: add the smallest vertex that still
// admits a completion to `optimum` vertices, one at a time.
std::optional<std::vector<std::size_t>> canonical_witness(Solver& solver, const ConflictGraph& graph,
                                                          std::vector<std::size_t> chosen, std::size_t optimum,
                                                          unsigned threads, std::uint64_t& nodes) {
    const std::size_t n = graph.size();
    for (std::size_t idx = 0; idx < n && chosen.size() < optimum; ++idx) {
        if (std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
        if (std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return graph.adjacent(c, idx); })) continue;
        VertexSet later(n);
        for (std::size_t j = idx + 1; j < n; ++j) later.set(j);
        auto trial = chosen;
        trial.push_back(idx);
        const Outcome o = solver.run(Mode::Reach, trial, &later, optimum, threads);
        nodes += o.nodes;
        if (o.timed_out) return std::nullopt;
        if (!o.best_set.empty()) chosen.push_back(idx);
    }
    if (chosen.size() != optimum) return std::nullopt;
    return chosen;
}

}  // namespace

SearchResult max_code_size(const SearchConfig& config) {
    config.validate();
    const auto start = Clock::now();
    const auto deadline = start + config.time_budget;

    const auto candidates = build_candidates(config.n, config.t, config.basic_only);
    const ConflictGraph graph = build_conflict_graph(candidates, config.t);
    const auto forced = forced_indices(graph, config);

    Solver solver(graph, deadline);
    const Outcome o = solver.run(Mode::Maximize, forced, nullptr, 0, config.parallelism);

    SearchResult result;
    result.optimum = static_cast<int>(o.best);
    result.node_count = o.nodes;
    result.exhausted = !o.timed_out;
    std::vector<std::size_t> witness = o.best_set;
    if (witness.empty()) witness.push_back(0);  // any single word is a code
    if (config.canonical && result.exhausted) {
        std::uint64_t extra = 0;
        auto canon = canonical_witness(solver, graph, forced, o.best, config.parallelism, extra);
        result.node_count += extra;
        if (canon)
            witness = *canon;
        else
            result.exhausted = false;
    }
    result.witness = to_code(graph, witness);
    result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

EnumerationResult enumerate_optimal_codes(const SearchConfig& config) {
    config.validate();
    if (config.n > kEnumerationCap)
        throw DomainError("enumeration of optimal codes is capped at n=" + std::to_string(kEnumerationCap));
    const auto start = Clock::now();
    const auto deadline = start + config.time_budget;

    EnumerationResult result;
    SearchConfig plain = config;
    plain.basic_only = false;
    plain.force_constants = false;
    plain.canonical = false;
    const SearchResult target = max_code_size(plain);
    result.optimum = target.optimum;
    result.node_count = target.node_count;
    if (!target.exhausted) {
        result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        return result;
    }

    const auto candidates = build_candidates(config.n, config.t, true);
    const ConflictGraph graph = build_conflict_graph(candidates, config.t);
    Solver solver(graph, deadline);
    const Outcome o =
        solver.run(Mode::Enumerate, {}, nullptr, static_cast<std::size_t>(target.optimum), config.parallelism);
    result.node_count += o.nodes;
    result.exhausted = !o.timed_out;

    std::vector<Code> codes;
    for (const auto& set : o.all) codes.push_back(canonical_form(to_code(graph, set)));
    std::sort(codes.begin(), codes.end(), [](const Code& a, const Code& b) { return a.words() < b.words(); });
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    result.codes = std::move(codes);
    result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

}  // namespace delcode
