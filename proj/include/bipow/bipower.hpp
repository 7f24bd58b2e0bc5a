#pragma once

// Graph powers. power(G,t) joins vertices at distance <= t; bipower(G,t)
// joins vertices at odd distance <= t, which keeps bipartite graphs
// bipartite on the same parts. Both are computed by capped BFS from each
// vertex, so disconnected inputs work componentwise for free.

#include <stdexcept>

#include "bipow/graph.hpp"

namespace bipow {

inline Graph bipower(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("bipower: t must be >= 1");
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u) {
        auto dist = bfs_distance(g, u, t);
        for (int v = u + 1; v < g.n; ++v) {
            int d = dist[static_cast<size_t>(v)];
            if (d > 0 && d % 2 == 1) out.add_edge(u, v);
        }
    }
    return out;
}

inline Graph power(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("power: t must be >= 1");
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u) {
        auto dist = bfs_distance(g, u, t);
        for (int v = u + 1; v < g.n; ++v)
            if (dist[static_cast<size_t>(v)] > 0) out.add_edge(u, v);
    }
    return out;
}

}  // namespace bipow
