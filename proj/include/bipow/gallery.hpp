#pragma once

// Deterministic builders for the example families (the layered
// non-Hamiltonicity construction and the subdivided bi-star) and seeded
// generators for random test instances.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "bipow/graph.hpp"
#include "bipow/matching.hpp"

namespace bipow {

struct LayeredGraph {
    Graph g;
    std::vector<int> v_first;  // layer V_0
    std::vector<int> v_last;   // layer V_{s+1}
};

// Layers V_0,...,V_{s+1} with |V_0| = |V_{s+1}| = floor(sk/2)+1 and |V_i| = k,
// complete join between consecutive layers. For s >= t the union of the two
// outer layers is independent in the t-th bi-power and larger than n/2, so the
// bi-power is not Hamiltonian no matter how connected the base graph is.
inline LayeredGraph layered_counterexample(int k, int t, int s) {
    if (k < 1 || t < 1) throw std::invalid_argument("layered_counterexample: k, t must be positive");
    if (s % 2 != 0) throw std::invalid_argument("layered_counterexample: s must be even");
    if (s < t) throw std::invalid_argument("layered_counterexample: s must be >= t");
    int outer = s * k / 2 + 1;
    std::vector<std::vector<int>> layers(static_cast<size_t>(s + 2));
    int next = 0;
    for (int i = 0; i <= s + 1; ++i) {
        int size = (i == 0 || i == s + 1) ? outer : k;
        for (int j = 0; j < size; ++j) layers[static_cast<size_t>(i)].push_back(next++);
    }
    LayeredGraph out;
    out.g = Graph(next);
    for (int i = 0; i <= s; ++i)
        for (int u : layers[static_cast<size_t>(i)])
            for (int v : layers[static_cast<size_t>(i + 1)]) out.g.add_edge(u, v);
    out.v_first = layers.front();
    out.v_last = layers.back();
    return out;
}

// Two adjacent centers (0 and 1), each carrying k pendant paths of length 3.
// n = 2 + 6k. Its third bi-power has a perfect matching but no Hamiltonian
// cycle, so a perfect matching of the bi-power is not enough.
inline Graph subdivided_bistar(int k) {
    if (k < 3) throw std::invalid_argument("subdivided_bistar: k must be >= 3");
    Graph g(2 + 6 * k);
    g.add_edge(0, 1);
    int next = 2;
    for (int center = 0; center <= 1; ++center) {
        for (int leg = 0; leg < k; ++leg) {
            g.add_edge(center, next);
            g.add_edge(next, next + 1);
            g.add_edge(next + 1, next + 2);
            next += 3;
        }
    }
    return g;
}

struct MatchedGraph {
    Graph g;
    Matching m;
};

namespace detail {

// Portable bounded draw (uniform_int_distribution varies across stdlibs).
inline int draw(std::mt19937& gen, int bound) {
    return static_cast<int>(gen() % static_cast<std::uint32_t>(bound));
}

}  // namespace detail

// Tree on 2*half_n vertices with perfect matching {(0,1),(2,3),...}: each new
// matched pair hangs off a uniformly chosen existing vertex.
inline MatchedGraph random_matched_tree(int half_n, std::uint32_t seed) {
    if (half_n < 1) throw std::invalid_argument("random_matched_tree: half_n must be >= 1");
    std::mt19937 gen(seed);
    MatchedGraph out{Graph(2 * half_n), Matching(2 * half_n)};
    out.m.match(0, 1);
    out.g.add_edge(0, 1);
    for (int i = 1; i < half_n; ++i) {
        int u = 2 * i, v = 2 * i + 1;
        out.m.match(u, v);
        out.g.add_edge(u, v);
        out.g.add_edge(u, detail::draw(gen, u));
    }
    return out;
}

// random_matched_tree plus extra part-respecting non-duplicate edges; caps at
// the complete bipartite graph on the tree's parts.
inline MatchedGraph random_bipartite_with_pm(int half_n, int extra_edges, std::uint32_t seed) {
    if (extra_edges < 0) throw std::invalid_argument("random_bipartite_with_pm: negative extra_edges");
    MatchedGraph out = random_matched_tree(half_n, seed);
    std::mt19937 gen(seed + 0x9e3779b9u);  // separate stream from the tree's
    Bipartition b = bipartition(out.g);
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < out.g.n; ++u)
        for (int v = u + 1; v < out.g.n; ++v)
            if (b.side[static_cast<size_t>(u)] != b.side[static_cast<size_t>(v)] && !out.g.has_edge(u, v))
                candidates.emplace_back(u, v);
    for (int i = 0; i < extra_edges && !candidates.empty(); ++i) {
        size_t pick = static_cast<size_t>(detail::draw(gen, static_cast<int>(candidates.size())));
        out.g.add_edge(candidates[pick].first, candidates[pick].second);
        candidates[pick] = candidates.back();
        candidates.pop_back();
    }
    return out;
}

}  // namespace bipow
