#include <doctest.h>

#include "bipow/gallery.hpp"
#include "bipow/ham.hpp"
#include "bipow/verify.hpp"

using namespace bipow;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Matching path_matching(int n) {
    Matching m(n);
    for (int i = 0; i + 1 < n; i += 2) m.match(i, i + 1);
    return m;
}

}  // namespace

TEST_CASE("tree_ham_path fixed examples") {
    // K2
    Graph k2 = path(2);
    CHECK(tree_ham_path(k2, path_matching(2), 0, 1).seq == std::vector<int>{0, 1});

    // P4, matching edge (0,1): 0, then the component {2,3} at 1, then 1
    HamPath p = tree_ham_path(path(4), path_matching(4), 0, 1);
    CHECK(p.seq == std::vector<int>{0, 3, 2, 1});
    CHECK(verify_bipower_path(path(4), p.seq, 0, 1, 3).pass);

    // caterpillar: edges 01 12 23 14 45, M = {01,23,45}, x=0, y=1
    Graph t(6);
    t.add_edge(0, 1);
    t.add_edge(1, 2);
    t.add_edge(2, 3);
    t.add_edge(1, 4);
    t.add_edge(4, 5);
    Matching m(6);
    m.match(0, 1);
    m.match(2, 3);
    m.match(4, 5);
    HamPath q = tree_ham_path(t, m, 0, 1);
    CHECK(q.seq == std::vector<int>{0, 3, 2, 5, 4, 1});
    CHECK(verify_bipower_path(t, q.seq, 0, 1, 3).pass);
}

TEST_CASE("tree_ham_path crosses non-matching edges exactly twice") {
    for (std::uint32_t seed : {1u, 2u, 3u, 4u, 5u}) {
        MatchedGraph mg = random_matched_tree(15, seed);
        for (auto [x, y] : mg.m.pairs()) {
            HamPath p = tree_ham_path(mg.g, mg.m, x, y);
            CHECK(verify_bipower_path(mg.g, p.seq, x, y, 3).pass);
            for (auto [u, v] : mg.g.edges()) {
                if (mg.m.mate[static_cast<size_t>(u)] == v) continue;
                CHECK(crossing_count(mg.g, p.seq, {u, v}, false) == 2);
            }
        }
    }
}

TEST_CASE("tree_ham_path argument checks") {
    CHECK_THROWS_AS(tree_ham_path(cycle(4), path_matching(4), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(tree_ham_path(path(4), path_matching(4), 0, 2), std::invalid_argument);
    Matching imperfect(4);
    imperfect.match(0, 1);
    CHECK_THROWS_AS(tree_ham_path(path(4), imperfect, 0, 1), std::invalid_argument);
}

TEST_CASE("laceable_ham_path fixed examples") {
    Graph c4 = cycle(4);
    Matching m(4);
    m.match(0, 1);
    m.match(2, 3);
    HamPath p = laceable_ham_path(c4, m, 0, 3);
    CHECK(p.seq == std::vector<int>{0, 1, 2, 3});
    CHECK(verify_bipower_path(c4, p.seq, 0, 3, 3).pass);

    HamPath q = laceable_ham_path(path(4), path_matching(4), 0, 3);
    CHECK(q.seq == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("laceable_ham_path covers all cross pairs on small graphs") {
    for (std::uint32_t seed : {7u, 8u, 9u}) {
        MatchedGraph mg = random_bipartite_with_pm(6, 8, seed);
        Bipartition b = bipartition(mg.g);
        for (int x = 0; x < mg.g.n; ++x)
            for (int y = 0; y < mg.g.n; ++y) {
                if (b.side[static_cast<size_t>(x)] == b.side[static_cast<size_t>(y)]) continue;
                HamPath p = laceable_ham_path(mg.g, mg.m, x, y);
                CHECK(verify_bipower_path(mg.g, p.seq, x, y, 3).pass);
            }
    }
}

TEST_CASE("laceable_ham_path argument checks") {
    Graph c4 = cycle(4);
    Matching m(4);
    m.match(0, 1);
    m.match(2, 3);
    CHECK_THROWS_AS(laceable_ham_path(c4, m, 0, 2), std::invalid_argument);  // same part
    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(laceable_ham_path(disconnected, m, 0, 3), std::invalid_argument);
}

TEST_CASE("ham_cycle fixed examples") {
    HamCycle c = ham_cycle(path(4), path_matching(4));
    CHECK(c.seq == std::vector<int>{0, 3, 2, 1});
    CHECK(verify_bipower_cycle(path(4), c.seq, 3).pass);

    Graph c6 = cycle(6);
    Matching m6(6);
    m6.match(0, 1);
    m6.match(2, 3);
    m6.match(4, 5);
    HamCycle c2 = ham_cycle(c6, m6);
    CHECK(verify_bipower_cycle(c6, c2.seq, 3).pass);
    // closing edge is the matching edge at vertex 0
    CHECK(c2.seq.front() == 0);
    CHECK(c2.seq.back() == 1);
}

TEST_CASE("ham_cycle argument checks") {
    CHECK_THROWS_AS(ham_cycle(path(2), path_matching(2)), std::invalid_argument);  // n < 4
    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(ham_cycle(disconnected, path_matching(4)), std::invalid_argument);
    Graph k4 = cycle(4);
    k4.add_edge(0, 2);
    k4.add_edge(1, 3);
    CHECK_THROWS_AS(ham_cycle(k4, path_matching(4)), std::invalid_argument);  // not bipartite
}

TEST_CASE("ham_cycle on a deep path") {
    int n = 2000;
    Graph g = path(n);
    HamCycle c = ham_cycle(g, path_matching(n));
    CHECK(verify_bipower_cycle(g, c.seq, 3).pass);
}

TEST_CASE("constructions are deterministic") {
    MatchedGraph mg = random_bipartite_with_pm(10, 15, 99);
    HamPath a = laceable_ham_path(mg.g, mg.m, 0, 1);
    HamPath b = laceable_ham_path(mg.g, mg.m, 0, 1);
    CHECK(a.seq == b.seq);
    CHECK(ham_cycle(mg.g, mg.m).seq == ham_cycle(mg.g, mg.m).seq);
}
