#pragma once

// Hamiltonian path / cycle construction in third bi-powers.
//
// tree_ham_path builds, for a tree T with perfect matching M and a matching
// edge xy, a Hamiltonian (x,y)-path of T_B^3 that crosses every non-matching
// tree edge exactly twice. laceable_ham_path extends this to any cross-part
// vertex pair of a connected bipartite graph with a perfect matching, via a
// spanning tree containing M. ham_cycle closes a tree path with its anchor
// matching edge.

#include <numeric>
#include <stdexcept>

#include "bipow/graph.hpp"
#include "bipow/matching.hpp"

namespace bipow {

struct HamPath {
    std::vector<int> seq;
};

struct HamCycle {
    std::vector<int> seq;  // closing edge seq.back() -- seq.front() implicit
};

namespace detail {

// One component of T - {x, y} restricted to the current piece, together with
// the matching edge anchoring the recursion inside it.
struct Attachment {
    std::vector<int> comp;
    int anchor_x;  // x_i of the recursion (mate of the contact vertex)
    int anchor_y;  // y_i of the recursion
};

class TreeHamBuilder {
public:
    TreeHamBuilder(const Graph& t, const Matching& m) : t_(t), m_(m),
        in_piece_(static_cast<size_t>(t.n), 0), seen_(static_cast<size_t>(t.n), 0) {}

    // piece: sorted vertex list of the current subtree; x, y mates in piece.
    // Appends the Hamiltonian (x,y)-path to out (forward) or its reverse.
    void build(const std::vector<int>& piece, int x, int y, bool reversed, std::vector<int>& out) {
        if (piece.size() == 2) {
            out.push_back(reversed ? y : x);
            out.push_back(reversed ? x : y);
            return;
        }
        for (int v : piece) in_piece_[static_cast<size_t>(v)] = 1;
        seen_[static_cast<size_t>(x)] = seen_[static_cast<size_t>(y)] = 1;

        // Components of T[piece] - {x, y}, ordered by smallest vertex.
        // Each is attached to exactly one of x, y by exactly one tree edge.
        std::vector<Attachment> at_x, at_y;
        for (int s : piece) {
            if (seen_[static_cast<size_t>(s)]) continue;
            Attachment a;
            a.comp.push_back(s);
            seen_[static_cast<size_t>(s)] = 1;
            int contact_of = -1, contact = -1;
            for (size_t head = 0; head < a.comp.size(); ++head) {
                for (int w : t_.adj[static_cast<size_t>(a.comp[head])]) {
                    if (!in_piece_[static_cast<size_t>(w)]) continue;
                    if (w == x || w == y) {
                        contact_of = w;
                        contact = a.comp[head];
                        continue;
                    }
                    if (!seen_[static_cast<size_t>(w)]) {
                        seen_[static_cast<size_t>(w)] = 1;
                        a.comp.push_back(w);
                    }
                }
            }
            std::sort(a.comp.begin(), a.comp.end());
            int mate = m_.mate[static_cast<size_t>(contact)];
            // contact is adjacent to x or y, so its mate lies in the component
            a.anchor_y = contact_of == x ? contact : mate;
            a.anchor_x = contact_of == x ? mate : contact;
            (contact_of == x ? at_x : at_y).push_back(std::move(a));
        }
        for (int v : piece) {
            in_piece_[static_cast<size_t>(v)] = 0;
            seen_[static_cast<size_t>(v)] = 0;
        }

        // P = x, segments of components at y (mate-first), segments of
        // components at x (mate-first), y. Reversal flips everything.
        size_t mark = out.size();
        out.push_back(x);
        for (const auto& a : at_y) build(a.comp, a.anchor_x, a.anchor_y, /*reversed=*/true, out);
        for (const auto& a : at_x) build(a.comp, a.anchor_x, a.anchor_y, /*reversed=*/true, out);
        out.push_back(y);
        if (reversed) std::reverse(out.begin() + static_cast<std::ptrdiff_t>(mark), out.end());
    }

private:
    const Graph& t_;
    const Matching& m_;
    std::vector<char> in_piece_;
    std::vector<char> seen_;
};

inline std::vector<int> all_vertices(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace detail

inline HamPath tree_ham_path(const Graph& t, const Matching& m, int x, int y) {
    if (!is_tree(t)) throw std::invalid_argument("tree_ham_path: not a tree");
    if (!m.valid_in(t, /*require_perfect=*/true))
        throw std::invalid_argument("tree_ham_path: matching not perfect in T");
    if (x < 0 || x >= t.n || m.mate[static_cast<size_t>(x)] != y)
        throw std::invalid_argument("tree_ham_path: xy is not a matching edge");
    HamPath p;
    p.seq.reserve(static_cast<size_t>(t.n));
    detail::TreeHamBuilder builder(t, m);
    builder.build(detail::all_vertices(t.n), x, y, /*reversed=*/false, p.seq);
    return p;
}

namespace detail {

class LaceBuilder {
public:
    LaceBuilder(const Graph& t, const Matching& m) : t_(t), m_(m), tree_builder_(t, m),
        in_piece_(static_cast<size_t>(t.n), 0) {}

    void build(const std::vector<int>& piece, int x, int y, std::vector<int>& out) {
        if (m_.mate[static_cast<size_t>(x)] == y) {
            tree_builder_.build(piece, x, y, /*reversed=*/false, out);
            return;
        }
        for (int v : piece) in_piece_[static_cast<size_t>(v)] = 1;

        // Unique tree path from x to y inside the piece.
        std::vector<int> parent(static_cast<size_t>(t_.n), -2);
        std::vector<int> queue{x};
        parent[static_cast<size_t>(x)] = -1;
        for (size_t head = 0; head < queue.size() && parent[static_cast<size_t>(y)] == -2; ++head) {
            for (int w : t_.adj[static_cast<size_t>(queue[head])]) {
                if (!in_piece_[static_cast<size_t>(w)] || parent[static_cast<size_t>(w)] != -2) continue;
                parent[static_cast<size_t>(w)] = queue[head];
                queue.push_back(w);
            }
        }
        std::vector<int> path;
        for (int v = y; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
        std::reverse(path.begin(), path.end());

        // First non-matching edge along the path; one exists since consecutive
        // path edges cannot both be matching edges and xy is not in M.
        size_t split = 0;
        while (m_.mate[static_cast<size_t>(path[split])] == path[split + 1]) ++split;
        int u = path[split], v = path[split + 1];  // u on x's side of the cut

        // Split the piece at edge uv: side1 contains x (and u), side2 contains y.
        std::vector<int> side1 = side_of(piece, u, v);
        std::vector<int> side2;
        side2.reserve(piece.size() - side1.size());
        for (int w : piece) in_piece_[static_cast<size_t>(w)] = 1;
        for (int w : side1) in_piece_[static_cast<size_t>(w)] = 0;
        for (int w : piece)
            if (in_piece_[static_cast<size_t>(w)]) side2.push_back(w);
        for (int w : piece) in_piece_[static_cast<size_t>(w)] = 0;

        // Split position parity decides which endpoints anchor the halves:
        // even split means u is in x's bipartition class, so the join uses the
        // mates' edge (tree-distance 3); odd split joins across uv itself.
        if (split % 2 == 0) {
            int yq = m_.mate[static_cast<size_t>(u)];  // in side1
            int xq = m_.mate[static_cast<size_t>(v)];  // in side2
            build(side1, x, yq, out);
            build(side2, xq, y, out);
        } else {
            build(side1, x, u, out);
            build(side2, v, y, out);
        }
    }

private:
    // Vertices of the piece on u's side of tree edge uv, sorted.
    std::vector<int> side_of(const std::vector<int>& piece, int u, int v) {
        for (int w : piece) in_piece_[static_cast<size_t>(w)] = 1;
        std::vector<int> side{u};
        in_piece_[static_cast<size_t>(u)] = 0;
        in_piece_[static_cast<size_t>(v)] = 0;
        for (size_t head = 0; head < side.size(); ++head) {
            for (int w : t_.adj[static_cast<size_t>(side[head])]) {
                if (!in_piece_[static_cast<size_t>(w)]) continue;
                in_piece_[static_cast<size_t>(w)] = 0;
                side.push_back(w);
            }
        }
        for (int w : piece) in_piece_[static_cast<size_t>(w)] = 0;
        std::sort(side.begin(), side.end());
        return side;
    }

    const Graph& t_;
    const Matching& m_;
    TreeHamBuilder tree_builder_;
    std::vector<char> in_piece_;
};

}  // namespace detail

inline HamPath laceable_ham_path(const Graph& g, const Matching& m, int x, int y) {
    if (!is_connected(g)) throw std::invalid_argument("laceable_ham_path: graph not connected");
    if (!m.valid_in(g, /*require_perfect=*/true))
        throw std::invalid_argument("laceable_ham_path: matching not perfect");
    Bipartition b = bipartition(g);
    if (x < 0 || x >= g.n || y < 0 || y >= g.n ||
        b.side[static_cast<size_t>(x)] == b.side[static_cast<size_t>(y)])
        throw std::invalid_argument("laceable_ham_path: x, y must be in distinct bipartition sets");
    Graph t = spanning_tree_with_matching(g, m);
    HamPath p;
    p.seq.reserve(static_cast<size_t>(g.n));
    detail::LaceBuilder builder(t, m);
    builder.build(detail::all_vertices(g.n), x, y, p.seq);
    return p;
}

// Close the tree path on the matching edge xy with smallest x.
inline HamCycle ham_cycle(const Graph& g, const Matching& m) {
    if (g.n < 4) throw std::invalid_argument("ham_cycle: order must be at least 4");
    if (!is_connected(g)) throw std::invalid_argument("ham_cycle: graph not connected");
    if (!m.valid_in(g, /*require_perfect=*/true))
        throw std::invalid_argument("ham_cycle: matching not perfect");
    if (!try_bipartition(g)) throw std::invalid_argument("ham_cycle: graph not bipartite");
    Graph t = spanning_tree_with_matching(g, m);
    int x = 0;
    int y = m.mate[0];
    HamPath p = tree_ham_path(t, tree_perfect_matching(t), x, y);
    HamCycle c;
    c.seq = std::move(p.seq);  // edge y--x closes the cycle and lies in M
    return c;
}

}  // namespace bipow
