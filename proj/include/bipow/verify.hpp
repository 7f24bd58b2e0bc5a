#pragma once

// Independent checkers and brute-force oracles. Nothing here reuses the
// constructors' code paths: distances come from fresh capped BFS runs and
// crossing counts from a fresh side labeling, so construction bugs cannot
// certify themselves.

#include <optional>
#include <sstream>
#include <stdexcept>

#include "bipow/graph.hpp"
#include "bipow/ham.hpp"

namespace bipow {

struct Report {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(const std::string& why) {
        pass = false;
        failures.push_back(why);
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"pass", pass}, {"failures", failures}};
    }
};

namespace detail {

// d_G(u, v) if <= cap, else -1.
inline int capped_distance(const Graph& g, int u, int v, int cap) {
    return bfs_distance(g, u, cap)[static_cast<size_t>(v)];
}

inline Report check_bipower_sequence(const Graph& g, const std::vector<int>& seq, int t, bool cyclic) {
    Report r;
    std::vector<char> used(static_cast<size_t>(g.n), 0);
    for (int v : seq) {
        if (v < 0 || v >= g.n) {
            r.fail("vertex " + std::to_string(v) + " out of range");
            return r;
        }
        if (used[static_cast<size_t>(v)]) r.fail("vertex " + std::to_string(v) + " repeated");
        used[static_cast<size_t>(v)] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!used[static_cast<size_t>(v)]) r.fail("vertex " + std::to_string(v) + " missing");
    size_t steps = seq.size() - (cyclic ? 0 : 1);
    for (size_t i = 0; r.pass && i < steps; ++i) {
        int u = seq[i], v = seq[(i + 1) % seq.size()];
        int d = capped_distance(g, u, v, t);
        if (d < 0)
            r.fail("d(" + std::to_string(u) + "," + std::to_string(v) + ") > " + std::to_string(t));
        else if (d % 2 == 0)
            r.fail("d(" + std::to_string(u) + "," + std::to_string(v) + ") = " + std::to_string(d) + " even");
    }
    return r;
}

}  // namespace detail

// Is seq a Hamiltonian (x,y)-path of bipower(G, t)? Edge criterion checked by
// capped BFS against G itself.
inline Report verify_bipower_path(const Graph& g, const std::vector<int>& seq, int x, int y, int t) {
    Report r;
    if (seq.size() < 2) {
        r.fail("path too short");
        return r;
    }
    if (seq.front() != x) r.fail("path does not start at " + std::to_string(x));
    if (seq.back() != y) r.fail("path does not end at " + std::to_string(y));
    Report inner = detail::check_bipower_sequence(g, seq, t, /*cyclic=*/false);
    if (!inner.pass) {
        r.pass = false;
        r.failures.insert(r.failures.end(), inner.failures.begin(), inner.failures.end());
    }
    return r;
}

inline Report verify_bipower_cycle(const Graph& g, const std::vector<int>& seq, int t) {
    Report r;
    if (seq.size() < 4) {
        r.fail("cycle must have length >= 4");
        return r;
    }
    Report inner = detail::check_bipower_sequence(g, seq, t, /*cyclic=*/true);
    if (!inner.pass) {
        r.pass = false;
        r.failures.insert(r.failures.end(), inner.failures.begin(), inner.failures.end());
    }
    return r;
}

// Number of times the walk F (path, or cycle if cyclic) crosses tree edge e:
// side changes of the T-e component indicator along consecutive pairs.
inline int crossing_count(const Graph& t, const std::vector<int>& seq, std::pair<int, int> e,
                          bool cyclic) {
    auto [eu, ev] = e;
    if (!t.has_edge(eu, ev)) throw std::invalid_argument("crossing_count: e is not a tree edge");
    // side label: BFS from eu in T - e
    std::vector<char> side(static_cast<size_t>(t.n), 0);
    std::vector<int> queue{eu};
    side[static_cast<size_t>(eu)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : t.adj[static_cast<size_t>(x)]) {
            if ((x == eu && y == ev) || (x == ev && y == eu)) continue;
            if (!side[static_cast<size_t>(y)]) {
                side[static_cast<size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
    }
    int crossings = 0;
    size_t steps = seq.size() - (cyclic ? 0 : 1);
    for (size_t i = 0; i < steps; ++i) {
        int u = seq[i], v = seq[(i + 1) % seq.size()];
        if (side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)]) ++crossings;
    }
    return crossings;
}

// ---------------------------------------------------------------------------
// brute-force oracles

struct OracleBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Backtracking search shared by the path and cycle oracles. Extending with
// the smallest feasible neighbor first yields the lexicographically smallest
// certificate. Prunes: the unvisited region plus the active endpoints must
// stay connected, and every unvisited vertex must keep enough usable
// neighbors to be entered and left.
class HamSearch {
public:
    explicit HamSearch(const Graph& g) : g_(g), state_(static_cast<size_t>(g.n), FREE) {}

    std::optional<std::vector<int>> path(int x, int y) {
        target_ = y;
        cyclic_ = false;
        seq_ = {x};
        state_[static_cast<size_t>(x)] = USED;
        if (g_.n == 1) return x == y ? std::optional(seq_) : std::nullopt;
        return extend(x) ? std::optional(seq_) : std::nullopt;
    }

    std::optional<std::vector<int>> cycle() {
        if (g_.n < 3) return std::nullopt;
        target_ = 0;
        cyclic_ = true;
        seq_ = {0};
        state_[0] = USED;
        return extend(0) ? std::optional(seq_) : std::nullopt;
    }

private:
    enum : char { FREE = 0, USED = 1 };

    bool extend(int cur) {
        if (static_cast<int>(seq_.size()) == g_.n) {
            if (cyclic_) return g_.has_edge(cur, 0);
            return cur == target_;
        }
        if (!feasible(cur)) return false;
        for (int next : g_.adj[static_cast<size_t>(cur)]) {
            if (state_[static_cast<size_t>(next)] == USED) continue;
            if (!cyclic_ && next == target_ && static_cast<int>(seq_.size()) != g_.n - 1) continue;
            seq_.push_back(next);
            state_[static_cast<size_t>(next)] = USED;
            if (extend(next)) return true;
            state_[static_cast<size_t>(next)] = FREE;
            seq_.pop_back();
        }
        return false;
    }

    bool feasible(int cur) {
        int start = cyclic_ ? 0 : target_;
        // degree prune: every unvisited v (other than the path target) will
        // need two distinct neighbors in {unvisited} + {cur} (+ start for
        // cycles); the path target needs one.
        int forced_from_cur = 0;
        for (int v = 0; v < g_.n; ++v) {
            if (state_[static_cast<size_t>(v)] == USED) continue;
            int avail = 0;
            bool touches_cur = false;
            for (int w : g_.adj[static_cast<size_t>(v)]) {
                if (state_[static_cast<size_t>(w)] == FREE || w == cur || (cyclic_ && w == start)) {
                    ++avail;
                    if (w == cur) touches_cur = true;
                }
            }
            int need = (!cyclic_ && v == target_) ? 1 : 2;
            if (avail < need) return false;
            if (avail == need && touches_cur && need == 2) {
                // v must consume a slot of cur; cur has one (two when it is
                // the anchor of a cycle, which also takes the closing edge)
                int slots = (cyclic_ && cur == start) ? 2 : 1;
                if (++forced_from_cur > slots) return false;
            }
        }
        // connectivity prune: unvisited vertices plus cur in one piece
        int free_count = 0, first_free = -1;
        for (int v = 0; v < g_.n; ++v)
            if (state_[static_cast<size_t>(v)] == FREE) {
                ++free_count;
                if (first_free < 0) first_free = v;
            }
        if (free_count == 0) return true;
        std::vector<char> seen(static_cast<size_t>(g_.n), 0);
        std::vector<int> queue{cur};
        seen[static_cast<size_t>(cur)] = 1;
        int reached = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int w : g_.adj[static_cast<size_t>(queue[head])]) {
                if (seen[static_cast<size_t>(w)] || state_[static_cast<size_t>(w)] == USED) continue;
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
        return reached == free_count;
    }

    const Graph& g_;
    std::vector<char> state_;
    std::vector<int> seq_;
    int target_ = -1;
    bool cyclic_ = false;
};

}  // namespace detail

// Lexicographically smallest Hamiltonian (x,y)-path, or nullopt.
inline std::optional<HamPath> brute_ham_path(const Graph& g, int x, int y, int max_n = 20) {
    if (g.n > max_n)
        throw OracleBoundError("brute_ham_path: n = " + std::to_string(g.n) + " exceeds bound " +
                               std::to_string(max_n));
    if (x < 0 || x >= g.n || y < 0 || y >= g.n) throw std::out_of_range("brute_ham_path: endpoint");
    if (x == y && g.n > 1) return std::nullopt;
    detail::HamSearch search(g);
    auto seq = search.path(x, y);
    if (!seq) return std::nullopt;
    return HamPath{std::move(*seq)};
}

// Lexicographically smallest Hamiltonian cycle (anchored at vertex 0), or nullopt.
inline std::optional<HamCycle> brute_ham_cycle(const Graph& g, int max_n = 20) {
    if (g.n > max_n)
        throw OracleBoundError("brute_ham_cycle: n = " + std::to_string(g.n) + " exceeds bound " +
                               std::to_string(max_n));
    if (g.n < 3) return std::nullopt;
    detail::HamSearch search(g);
    auto seq = search.cycle();
    if (!seq) return std::nullopt;
    // smaller of the two traversal directions
    std::vector<int> rev{(*seq)[0]};
    rev.insert(rev.end(), seq->rbegin(), std::prev(seq->rend()));
    if (rev < *seq) *seq = std::move(rev);
    return HamCycle{std::move(*seq)};
}

// S independent in G with |S| > n/2 certifies that G has no Hamiltonian
// cycle: on a cycle, each vertex of an independent set needs two distinct
// neighbors outside the set.
inline Report independence_nonham_witness(const Graph& g, const std::vector<int>& s) {
    Report r;
    for (int v : s)
        if (v < 0 || v >= g.n) {
            r.fail("vertex " + std::to_string(v) + " out of range");
            return r;
        }
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) r.fail("vertex " + std::to_string(s[i]) + " listed twice");
            if (g.has_edge(s[i], s[j]))
                r.fail("S not independent: edge " + std::to_string(s[i]) + "-" + std::to_string(s[j]));
        }
    if (2 * s.size() <= static_cast<size_t>(g.n))
        r.fail("|S| = " + std::to_string(s.size()) + " not greater than n/2 = " +
               std::to_string(g.n) + "/2");
    return r;
}

}  // namespace bipow
