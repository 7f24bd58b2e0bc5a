#pragma once

// Finite-truncation machinery for infinite locally finite bipartite graphs:
// lazy neighbor oracles, matching-saturated ball truncations, matched
// quotients, normal spanning trees, tree lifting, cycle sequences with the
// double-crossing conditions, stabilization extraction, end-degree cut
// bounds, Menger-style disjoint paths, and a finite faithfulness proxy.
//
// Ends are proxied by boundary-touching components of truncations; everything
// asserted here is finitely checkable.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "bipow/graph.hpp"
#include "bipow/ham.hpp"
#include "bipow/matching.hpp"
#include "bipow/verify.hpp"

namespace bipow {

using LazyVertex = long long;
using LazyEdge = std::pair<LazyVertex, LazyVertex>;  // normalized first < second

inline LazyEdge lazy_edge(LazyVertex a, LazyVertex b) {
    return a < b ? LazyEdge{a, b} : LazyEdge{b, a};
}

struct LazyGraph {
    std::string family;
    LazyVertex base = 0;
    std::function<std::vector<LazyVertex>(LazyVertex)> neighbors;  // finite, sorted
    std::function<LazyVertex(LazyVertex)> mate;                    // involution along edges
};

// ---------------------------------------------------------------------------
// built-in families

namespace detail {

inline long long floor_div2(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
inline long long mod2(long long x) { return ((x % 2) + 2) % 2; }

}  // namespace detail

// Vertices are the integers; matched pairs are (2i, 2i+1).
inline LazyGraph double_ray() {
    LazyGraph g;
    g.family = "double-ray";
    g.base = 0;
    g.neighbors = [](LazyVertex v) { return std::vector<LazyVertex>{v - 1, v + 1}; };
    g.mate = [](LazyVertex v) { return detail::mod2(v) == 0 ? v + 1 : v - 1; };
    return g;
}

// Z x {0,1} encoded as 2i+j; rails along each side, matched rungs.
inline LazyGraph ladder() {
    LazyGraph g;
    g.family = "ladder";
    g.base = 0;
    g.neighbors = [](LazyVertex v) {
        long long i = detail::floor_div2(v), j = detail::mod2(v);
        std::vector<LazyVertex> nb{2 * (i - 1) + j, 2 * i + (1 - j), 2 * (i + 1) + j};
        std::sort(nb.begin(), nb.end());
        return nb;
    };
    g.mate = [](LazyVertex v) { return detail::mod2(v) == 0 ? v + 1 : v - 1; };
    return g;
}

// Infinite binary tree with every node n (heap order, n >= 1) expanded into a
// matched edge 2n -- 2n+1; the 2n+1 half hangs the two children.
inline LazyGraph matched_binary_tree() {
    LazyGraph g;
    g.family = "matched-tree";
    g.base = 2;
    g.neighbors = [](LazyVertex v) {
        long long n = detail::floor_div2(v);
        std::vector<LazyVertex> nb;
        if (detail::mod2(v) == 0) {
            nb.push_back(v + 1);          // mate
            if (n > 1) nb.push_back(2 * (n / 2) + 1);  // parent's upper half
        } else {
            nb.push_back(v - 1);          // mate
            nb.push_back(2 * (2 * n));    // left child's lower half
            nb.push_back(2 * (2 * n + 1));
        }
        std::sort(nb.begin(), nb.end());
        return nb;
    };
    g.mate = [](LazyVertex v) { return detail::mod2(v) == 0 ? v + 1 : v - 1; };
    return g;
}

inline LazyGraph family_by_name(const std::string& name) {
    if (name == "double-ray") return double_ray();
    if (name == "ladder") return ladder();
    if (name == "matched-tree") return matched_binary_tree();
    throw std::invalid_argument("unknown family: " + name);
}

// ---------------------------------------------------------------------------
// truncation

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Truncation {
    Graph graph;                    // induced subgraph, dense ids
    Matching matching;              // induced matching; perfect by saturation
    std::vector<LazyVertex> label;  // dense id -> lazy label
    std::map<LazyVertex, int> id;   // lazy label -> dense id
    std::vector<int> boundary;      // dense ids with unexplored neighbors
    int radius = 0;
};

// Ball of radius r around the base, closed under the matching oracle. Dense
// ids are assigned layer by layer (distance from base, then lazy label), so
// nested truncations agree on the relative order of shared vertices.
inline Truncation truncate_saturated(const LazyGraph& lg, int r) {
    if (r < 0) throw std::invalid_argument("truncate_saturated: negative radius");
    std::map<LazyVertex, int> dist;  // lazy -> distance from base
    std::vector<LazyVertex> frontier{lg.base};
    dist[lg.base] = 0;
    for (int d = 0; d < r; ++d) {
        std::vector<LazyVertex> next;
        for (LazyVertex v : frontier)
            for (LazyVertex w : lg.neighbors(v))
                if (dist.emplace(w, d + 1).second) next.push_back(w);
        frontier = std::move(next);
    }
    // mate closure: an absent mate is adjacent to a ball vertex, so it sits
    // at distance exactly r+1
    std::vector<LazyVertex> ball;
    for (const auto& [v, d] : dist) ball.push_back(v);
    for (LazyVertex v : ball) {
        LazyVertex m = lg.mate(v);
        dist.emplace(m, r + 1);
    }

    Truncation t;
    t.radius = r;
    std::vector<std::pair<std::pair<int, LazyVertex>, LazyVertex>> order;
    for (const auto& [v, d] : dist) order.push_back({{d, v}, v});
    std::sort(order.begin(), order.end());
    for (const auto& entry : order) {
        t.id.emplace(entry.second, static_cast<int>(t.label.size()));
        t.label.push_back(entry.second);
    }

    int n = static_cast<int>(t.label.size());
    t.graph = Graph(n);
    t.matching = Matching(n);
    for (int u = 0; u < n; ++u) {
        LazyVertex lu = t.label[static_cast<size_t>(u)];
        bool open = false;
        for (LazyVertex w : lg.neighbors(lu)) {
            auto it = t.id.find(w);
            if (it == t.id.end()) {
                open = true;
                continue;
            }
            // symmetry spot-check on every included pair
            auto back = lg.neighbors(w);
            if (!std::binary_search(back.begin(), back.end(), lu))
                throw OracleError("neighbor oracle asymmetric on (" + std::to_string(lu) + ", " +
                                  std::to_string(w) + ")");
            if (u < it->second) t.graph.add_edge(u, it->second);
        }
        if (open) t.boundary.push_back(u);
        LazyVertex lm = lg.mate(lu);
        if (lg.mate(lm) != lu)
            throw OracleError("matching oracle is not an involution at " + std::to_string(lu));
        auto nb = lg.neighbors(lu);
        if (!std::binary_search(nb.begin(), nb.end(), lm))
            throw OracleError("matching oracle returns a non-edge at " + std::to_string(lu));
        t.matching.mate[static_cast<size_t>(u)] = t.id.at(lm);
    }
    return t;
}

// ---------------------------------------------------------------------------
// matched quotient

struct Quotient {
    Graph graph;                            // one vertex per matching edge
    std::vector<std::pair<int, int>> pairs; // quotient vertex -> host pair (u < v)
};

// Graph on the M-edges: two pairs adjacent when some host edge joins them.
inline Quotient matched_quotient(const Graph& g, const Matching& m) {
    if (!m.valid_in(g, /*require_perfect=*/true))
        throw std::invalid_argument("matched_quotient: matching not perfect");
    Quotient q;
    q.pairs = m.pairs();  // sorted by smaller endpoint
    std::vector<int> pair_of(static_cast<size_t>(g.n));
    for (int i = 0; i < static_cast<int>(q.pairs.size()); ++i) {
        pair_of[static_cast<size_t>(q.pairs[static_cast<size_t>(i)].first)] = i;
        pair_of[static_cast<size_t>(q.pairs[static_cast<size_t>(i)].second)] = i;
    }
    q.graph = Graph(static_cast<int>(q.pairs.size()));
    for (auto [u, v] : g.edges()) {
        int pu = pair_of[static_cast<size_t>(u)], pv = pair_of[static_cast<size_t>(v)];
        if (pu != pv && !q.graph.has_edge(pu, pv)) q.graph.add_edge(pu, pv);
    }
    return q;
}

// ---------------------------------------------------------------------------
// normal spanning trees (depth-first; finite surrogate)

struct RootedTree {
    Graph tree;
    int root = 0;
    std::vector<int> parent;  // -1 at root
};

inline RootedTree normal_spanning_tree(const Graph& g, int root) {
    if (!is_connected(g)) throw std::invalid_argument("normal_spanning_tree: graph not connected");
    RootedTree rt;
    rt.root = root;
    rt.tree = Graph(g.n);
    rt.parent.assign(static_cast<size_t>(g.n), -2);
    rt.parent[static_cast<size_t>(root)] = -1;
    // iterative DFS, children in ascending order
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nb = g.adj[static_cast<size_t>(v)];
        if (idx == nb.size()) {
            stack.pop_back();
            continue;
        }
        int w = nb[idx++];
        if (rt.parent[static_cast<size_t>(w)] == -2) {
            rt.parent[static_cast<size_t>(w)] = v;
            rt.tree.add_edge(v, w);
            stack.push_back({w, 0});
        }
    }
    return rt;
}

// Every non-tree edge of g joins tree-comparable vertices (checked with
// entry/exit stamps of the rooted tree).
inline bool is_normal_tree(const Graph& g, const RootedTree& rt) {
    std::vector<int> tin(static_cast<size_t>(g.n)), tout(static_cast<size_t>(g.n));
    int clock = 0;
    std::vector<std::pair<int, size_t>> stack{{rt.root, 0}};
    tin[static_cast<size_t>(rt.root)] = clock++;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nb = rt.tree.adj[static_cast<size_t>(v)];
        if (idx == nb.size()) {
            tout[static_cast<size_t>(v)] = clock++;
            stack.pop_back();
            continue;
        }
        int w = nb[idx++];
        if (w == rt.parent[static_cast<size_t>(v)]) continue;
        tin[static_cast<size_t>(w)] = clock++;
        stack.push_back({w, 0});
    }
    auto ancestor = [&](int a, int b) {  // a ancestor of b
        return tin[static_cast<size_t>(a)] <= tin[static_cast<size_t>(b)] &&
               tout[static_cast<size_t>(b)] <= tout[static_cast<size_t>(a)];
    };
    for (auto [u, v] : g.edges()) {
        if (rt.tree.has_edge(u, v)) continue;
        if (!ancestor(u, v) && !ancestor(v, u)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// lifting

using EdgeChoice = std::map<std::pair<int, int>, std::pair<int, int>>;  // quotient edge -> host edge

// Spanning tree of G containing all of M, with one host edge per quotient-tree
// edge. The default choice is the lexicographically smallest edge in the cut.
inline Graph lift_tree(const Graph& g, const Matching& m, const Quotient& q, const Graph& qtree,
                       const EdgeChoice* choice = nullptr) {
    Graph t(g.n);
    for (auto [u, v] : m.pairs()) t.add_edge(u, v);
    for (auto [pi, pj] : qtree.edges()) {
        auto [a1, b1] = q.pairs[static_cast<size_t>(pi)];
        auto [a2, b2] = q.pairs[static_cast<size_t>(pj)];
        std::optional<std::pair<int, int>> best;
        for (int u : {a1, b1})
            for (int v : {a2, b2}) {
                if (!g.has_edge(u, v)) continue;
                auto e = std::minmax(u, v);
                std::pair<int, int> cand{e.first, e.second};
                if (!best || cand < *best) best = cand;
            }
        if (!best) throw std::invalid_argument("lift_tree: quotient edge has empty host cut");
        if (choice) {
            auto it = choice->find({pi, pj});
            if (it != choice->end()) {
                auto [u, v] = it->second;
                bool in_cut = g.has_edge(u, v) &&
                              ((u == a1 || u == b1) ? (v == a2 || v == b2) : false);
                if (!in_cut) {
                    std::swap(u, v);
                    in_cut = g.has_edge(u, v) && (u == a1 || u == b1) && (v == a2 || v == b2);
                }
                if (!in_cut) throw std::invalid_argument("lift_tree: edge choice outside the cut");
                best = std::minmax(u, v);
            }
        }
        t.add_edge(best->first, best->second);
    }
    if (!is_tree(t)) throw std::logic_error("lift_tree: result is not a spanning tree");
    return t;
}

// ---------------------------------------------------------------------------
// cycle sequences

struct CycleStep {
    int radius = 0;
    Truncation trunc;
    Graph tree;                  // lifted spanning tree of the truncation
    std::vector<int> cycle;      // Hamiltonian cycle of bipower(tree, 3), dense ids
    bool quotient_tree_normal = false;
    bool nested_in_previous = true;  // lazy-label containment of tree in next step
    bool cond_cover = false;         // V(T_i) covered by C_i
    bool cond_crossings = false;     // every non-matching tree edge crossed exactly twice

    std::set<LazyVertex> lazy_vertices() const {
        return {label_begin(), label_end()};
    }
    std::set<LazyEdge> lazy_edges(const Graph& g) const {
        std::set<LazyEdge> out;
        for (auto [u, v] : g.edges())
            out.insert(lazy_edge(trunc.label[static_cast<size_t>(u)], trunc.label[static_cast<size_t>(v)]));
        return out;
    }
    std::vector<LazyEdge> lazy_cycle_edges() const {
        std::vector<LazyEdge> out;
        for (size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            out.push_back(lazy_edge(trunc.label[static_cast<size_t>(u)], trunc.label[static_cast<size_t>(v)]));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<LazyVertex>::const_iterator label_begin() const { return trunc.label.begin(); }
    std::vector<LazyVertex>::const_iterator label_end() const { return trunc.label.end(); }
};

struct CycleSequence {
    std::vector<CycleStep> steps;
    std::vector<int> requested;  // schedule as given
};

namespace detail {

// Spanning tree of q containing the frozen edge set (lazy pair keys from the
// previous step); falls back from the depth-first tree to a union-find
// extension when the DFS tree misses a frozen edge.
inline Graph quotient_spanning_tree(const Quotient& q, int root,
                                    const std::set<LazyEdge>& frozen,
                                    const std::vector<LazyVertex>& pair_key,
                                    bool* normal_out) {
    RootedTree rt = normal_spanning_tree(q.graph, root);
    auto key_edge = [&](int i, int j) {
        return lazy_edge(pair_key[static_cast<size_t>(i)], pair_key[static_cast<size_t>(j)]);
    };
    bool contains_frozen = true;
    if (!frozen.empty()) {
        std::set<LazyEdge> tree_keys;
        for (auto [i, j] : rt.tree.edges()) tree_keys.insert(key_edge(i, j));
        for (const auto& f : frozen)
            if (!tree_keys.count(f)) {
                contains_frozen = false;
                break;
            }
    }
    if (contains_frozen) {
        if (normal_out) *normal_out = is_normal_tree(q.graph, rt);
        return rt.tree;
    }
    if (normal_out) *normal_out = false;
    Graph t(q.graph.n);
    UnionFind uf(q.graph.n);
    std::map<LazyEdge, std::pair<int, int>> by_key;
    for (auto [i, j] : q.graph.edges()) by_key[key_edge(i, j)] = {i, j};
    for (const auto& f : frozen) {
        auto it = by_key.find(f);
        if (it == by_key.end()) throw std::logic_error("frozen quotient edge vanished");
        uf.unite(it->second.first, it->second.second);
        t.add_edge(it->second.first, it->second.second);
    }
    for (const auto& [key, e] : by_key)
        if (uf.unite(e.first, e.second)) t.add_edge(e.first, e.second);
    return t;
}

}  // namespace detail

// For each radius: saturated truncation, lifted spanning tree, Hamiltonian
// cycle of its third bi-power, and the two engine conditions. Radii too small
// to carry a cycle (n < 4) are advanced automatically.
inline CycleSequence cycle_sequence(const LazyGraph& lg, const std::vector<int>& schedule) {
    if (schedule.empty()) throw std::invalid_argument("cycle_sequence: empty schedule");
    for (size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("cycle_sequence: schedule must be strictly increasing");

    CycleSequence seq;
    seq.requested = schedule;
    std::set<LazyEdge> frozen_qtree;
    int min_radius = 0;
    for (int r : schedule) {
        int radius = std::max(r, min_radius);
        Truncation trunc = truncate_saturated(lg, radius);
        while (trunc.graph.n < 4) trunc = truncate_saturated(lg, ++radius);
        min_radius = radius + 1;

        Quotient q = matched_quotient(trunc.graph, trunc.matching);
        std::vector<LazyVertex> pair_key;
        pair_key.reserve(q.pairs.size());
        int root = -1;
        for (int i = 0; i < static_cast<int>(q.pairs.size()); ++i) {
            auto [a, b] = q.pairs[static_cast<size_t>(i)];
            pair_key.push_back(std::min(trunc.label[static_cast<size_t>(a)],
                                        trunc.label[static_cast<size_t>(b)]));
            if (a == trunc.id.at(lg.base) || b == trunc.id.at(lg.base)) root = i;
        }

        CycleStep step;
        step.radius = radius;
        Graph qtree = detail::quotient_spanning_tree(q, root, frozen_qtree, pair_key,
                                                     &step.quotient_tree_normal);
        frozen_qtree.clear();
        for (auto [i, j] : qtree.edges())
            frozen_qtree.insert(lazy_edge(pair_key[static_cast<size_t>(i)], pair_key[static_cast<size_t>(j)]));

        step.tree = lift_tree(trunc.graph, trunc.matching, q, qtree);
        Matching tree_m = trunc.matching;  // same pairs, contained in the lifted tree
        step.cycle = ham_cycle(step.tree, tree_m).seq;
        step.trunc = std::move(trunc);

        // engine conditions, checked by the independent verifier
        step.cond_cover = verify_bipower_cycle(step.tree, step.cycle, 3).pass;
        step.cond_crossings = true;
        for (auto [u, v] : step.tree.edges()) {
            if (tree_m.mate[static_cast<size_t>(u)] == v) continue;
            if (crossing_count(step.tree, step.cycle, {u, v}, /*cyclic=*/true) != 2)
                step.cond_crossings = false;
        }
        seq.steps.push_back(std::move(step));
    }

    // lazy-label nesting between consecutive steps
    for (size_t i = 1; i < seq.steps.size(); ++i) {
        auto prev_e = seq.steps[i - 1].lazy_edges(seq.steps[i - 1].tree);
        auto cur_e = seq.steps[i].lazy_edges(seq.steps[i].tree);
        bool nested = true;
        for (const auto& e : prev_e)
            if (!cur_e.count(e)) nested = false;
        seq.steps[i].nested_in_previous = nested;
    }
    return seq;
}

// ---------------------------------------------------------------------------
// stabilization

struct WindowReport {
    int window = 0;                      // index of the truncation whose cut is watched
    int candidates = 0;                  // later cycles considered
    int class_size = 0;                  // largest agreement class
    std::vector<LazyEdge> signature;     // the class's intersection with the window cut
    std::vector<int> extracted;          // indices of the surviving subsequence
};

struct StabilizationReport {
    std::vector<WindowReport> windows;
    std::vector<int> heads;  // first member of each nested class chain
    bool all_nonempty = true;
};

// Finite pigeonhole extraction: for each window (edges leaving V(T_i)),
// partition the later cycles by their intersection with the window and keep
// the largest class; classes nest across windows.
inline StabilizationReport stabilization_check(const CycleSequence& seq) {
    if (seq.steps.size() < 2) throw std::invalid_argument("stabilization_check: need >= 2 steps");
    StabilizationReport rep;
    std::vector<int> current(seq.steps.size());
    std::iota(current.begin(), current.end(), 0);
    rep.heads.push_back(0);
    for (int w = 0; w + 1 < static_cast<int>(seq.steps.size()); ++w) {
        auto inside = seq.steps[static_cast<size_t>(w)].lazy_vertices();
        std::map<std::vector<LazyEdge>, std::vector<int>> classes;
        for (int j : current) {
            if (j <= w) continue;
            std::vector<LazyEdge> sig;
            for (const auto& e : seq.steps[static_cast<size_t>(j)].lazy_cycle_edges())
                if (inside.count(e.first) != inside.count(e.second)) sig.push_back(e);
            classes[std::move(sig)].push_back(j);
        }
        WindowReport wr;
        wr.window = w;
        for (const auto& [sig, members] : classes) wr.candidates += static_cast<int>(members.size());
        const std::vector<int>* best = nullptr;
        const std::vector<LazyEdge>* best_sig = nullptr;
        for (const auto& [sig, members] : classes) {
            // largest class; ties go to the class reaching furthest (the
            // finite stand-in for "infinitely many cycles"), then to the
            // earliest start
            if (!best || members.size() > best->size() ||
                (members.size() == best->size() &&
                 (members.back() > best->back() ||
                  (members.back() == best->back() && members.front() < best->front())))) {
                best = &members;
                best_sig = &sig;
            }
        }
        if (!best) {
            rep.all_nonempty = false;
            rep.windows.push_back(std::move(wr));
            break;
        }
        wr.class_size = static_cast<int>(best->size());
        wr.signature = *best_sig;
        wr.extracted = *best;
        current = *best;
        rep.heads.push_back(current.front());
        rep.windows.push_back(std::move(wr));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// end degree via cut counts

// max over e in F of the number of Gp-edges between the two components of
// T - e. When matching and boundary are given, every component of T - F must
// be mate-closed even if it touches the truncation boundary.
inline int end_degree_bound(const Graph& gp, const Graph& t, const std::vector<std::pair<int, int>>& f,
                            const Matching* m = nullptr, const std::vector<int>* boundary = nullptr) {
    if (!is_tree(t)) throw std::invalid_argument("end_degree_bound: T is not a tree");
    if (gp.n != t.n) throw std::invalid_argument("end_degree_bound: vertex sets differ");
    for (auto [u, v] : f)
        if (!t.has_edge(u, v)) throw std::invalid_argument("end_degree_bound: F not within E(T)");
    if (m && boundary) {
        std::vector<char> removed(static_cast<size_t>(t.n), 0);
        Graph tf = t;
        // components of T - F
        Graph cut(t.n);
        for (auto [u, v] : t.edges()) {
            bool in_f = false;
            for (auto [a, b] : f)
                if ((a == u && b == v) || (a == v && b == u)) in_f = true;
            if (!in_f) cut.add_edge(u, v);
        }
        std::vector<char> is_boundary(static_cast<size_t>(t.n), 0);
        for (int b : *boundary) is_boundary[static_cast<size_t>(b)] = 1;
        for (const auto& comp : connected_components(cut)) {
            std::vector<char> in_comp(static_cast<size_t>(t.n), 0);
            for (int v : comp) in_comp[static_cast<size_t>(v)] = 1;
            for (int v : comp) {
                int mv = m->mate[static_cast<size_t>(v)];
                if (is_boundary[static_cast<size_t>(v)] && (mv < 0 || !in_comp[static_cast<size_t>(mv)]))
                    throw std::invalid_argument(
                        "end_degree_bound: component of T-F touches the boundary without mate closure");
            }
        }
    }
    int bound = 0;
    for (auto e : f) {
        std::vector<char> side(static_cast<size_t>(t.n), 0);
        std::vector<int> queue{e.first};
        side[static_cast<size_t>(e.first)] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int y : t.adj[static_cast<size_t>(queue[head])]) {
                if ((queue[head] == e.first && y == e.second) ||
                    (queue[head] == e.second && y == e.first))
                    continue;
                if (!side[static_cast<size_t>(y)]) {
                    side[static_cast<size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
        int count = 0;
        for (auto [u, v] : gp.edges())
            if (side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)]) ++count;
        bound = std::max(bound, count);
    }
    return bound;
}

// ---------------------------------------------------------------------------
// Menger: vertex-disjoint (A,B)-paths

struct DisjointPathsResult {
    int count = 0;
    std::vector<int> separator;  // vertex cut of size == count
};

// Unit-vertex-capacity max-flow (vertex splitting + augmenting paths).
inline DisjointPathsResult disjoint_paths(const Graph& g, const std::vector<int>& a,
                                          const std::vector<int>& b) {
    std::vector<char> in_a(static_cast<size_t>(g.n), 0), in_b(static_cast<size_t>(g.n), 0);
    for (int v : a) in_a[static_cast<size_t>(v)] = 1;
    for (int v : b) {
        if (in_a[static_cast<size_t>(v)]) throw std::invalid_argument("disjoint_paths: A and B intersect");
        in_b[static_cast<size_t>(v)] = 1;
    }
    // nodes: 2v = v_in, 2v+1 = v_out, 2n = source, 2n+1 = sink. Only the
    // in->out arcs carry unit capacity, so every min-cut arc names a vertex.
    int nn = 2 * g.n + 2, src = 2 * g.n, snk = 2 * g.n + 1;
    int big = g.n + 1;
    std::vector<std::vector<int>> cap(static_cast<size_t>(nn), std::vector<int>(static_cast<size_t>(nn), 0));
    for (int v = 0; v < g.n; ++v) cap[static_cast<size_t>(2 * v)][static_cast<size_t>(2 * v + 1)] = 1;
    for (auto [u, v] : g.edges()) {
        cap[static_cast<size_t>(2 * u + 1)][static_cast<size_t>(2 * v)] = big;
        cap[static_cast<size_t>(2 * v + 1)][static_cast<size_t>(2 * u)] = big;
    }
    for (int v : a) cap[static_cast<size_t>(src)][static_cast<size_t>(2 * v)] = big;
    for (int v : b) cap[static_cast<size_t>(2 * v + 1)][static_cast<size_t>(snk)] = big;

    DisjointPathsResult out;
    std::vector<int> parent(static_cast<size_t>(nn));
    auto augment = [&]() -> bool {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<size_t>(src)] = src;
        std::vector<int> queue{src};
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y = 0; y < nn; ++y) {
                if (parent[static_cast<size_t>(y)] >= 0 || cap[static_cast<size_t>(x)][static_cast<size_t>(y)] <= 0)
                    continue;
                parent[static_cast<size_t>(y)] = x;
                if (y == snk) {
                    for (int v = snk; v != src; v = parent[static_cast<size_t>(v)]) {
                        --cap[static_cast<size_t>(parent[static_cast<size_t>(v)])][static_cast<size_t>(v)];
                        ++cap[static_cast<size_t>(v)][static_cast<size_t>(parent[static_cast<size_t>(v)])];
                    }
                    return true;
                }
                queue.push_back(y);
            }
        }
        return false;
    };
    while (augment()) ++out.count;

    // min cut: vertices whose in->out arc is saturated and crosses the
    // residual-reachable frontier
    std::vector<char> reach(static_cast<size_t>(nn), 0);
    std::vector<int> queue{src};
    reach[static_cast<size_t>(src)] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int y = 0; y < nn; ++y)
            if (!reach[static_cast<size_t>(y)] && cap[static_cast<size_t>(queue[head])][static_cast<size_t>(y)] > 0) {
                reach[static_cast<size_t>(y)] = 1;
                queue.push_back(y);
            }
    for (int v = 0; v < g.n; ++v)
        if (reach[static_cast<size_t>(2 * v)] && !reach[static_cast<size_t>(2 * v + 1)])
            out.separator.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// faithfulness proxy

struct SeparatorReport {
    std::vector<int> separator;
    int host_boundary_components = 0;
    int sub_boundary_components = 0;
    bool pass = true;
    std::string detail;
};

struct FaithfulnessReport {
    bool pass = true;
    std::vector<SeparatorReport> separators;
};

// Finite shadow of ray-equivalence agreement: for each sampled separator S,
// the boundary-touching components of H-S must correspond one-to-one with
// those of G-S (H spanning means H-components always refine G-components).
inline FaithfulnessReport faithfulness_check(const Graph& g, const Graph& h,
                                             const std::vector<std::vector<int>>& separators,
                                             const std::vector<int>& boundary) {
    if (g.n != h.n) throw std::invalid_argument("faithfulness_check: H is not spanning");
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v)) throw std::invalid_argument("faithfulness_check: H is not a subgraph of G");
    std::vector<char> is_boundary(static_cast<size_t>(g.n), 0);
    for (int b : boundary) is_boundary[static_cast<size_t>(b)] = 1;

    FaithfulnessReport rep;
    for (const auto& s : separators) {
        SeparatorReport sr;
        sr.separator = s;
        std::vector<char> removed(static_cast<size_t>(g.n), 0);
        for (int v : s) removed[static_cast<size_t>(v)] = 1;
        auto g_comps = connected_components(g, &removed);
        auto h_comps = connected_components(h, &removed);
        std::vector<int> g_comp_of(static_cast<size_t>(g.n), -1);
        for (int i = 0; i < static_cast<int>(g_comps.size()); ++i)
            for (int v : g_comps[static_cast<size_t>(i)]) g_comp_of[static_cast<size_t>(v)] = i;
        auto touches = [&](const std::vector<int>& comp) {
            for (int v : comp)
                if (is_boundary[static_cast<size_t>(v)]) return true;
            return false;
        };
        std::vector<int> sub_count(g_comps.size(), 0);
        for (const auto& hc : h_comps) {
            if (!touches(hc)) continue;
            ++sr.sub_boundary_components;
            ++sub_count[static_cast<size_t>(g_comp_of[static_cast<size_t>(hc.front())])];
        }
        for (int i = 0; i < static_cast<int>(g_comps.size()); ++i) {
            if (!touches(g_comps[static_cast<size_t>(i)])) continue;
            ++sr.host_boundary_components;
            if (sub_count[static_cast<size_t>(i)] != 1) {
                sr.pass = false;
                sr.detail = "boundary component of G-S split into " +
                            std::to_string(sub_count[static_cast<size_t>(i)]) + " components of H-S";
            }
        }
        rep.pass = rep.pass && sr.pass;
        rep.separators.push_back(std::move(sr));
    }
    return rep;
}

}  // namespace bipow
