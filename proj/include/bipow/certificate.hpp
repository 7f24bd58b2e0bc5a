#pragma once

// Hamiltonian-circle certificates: the full truncation pipeline bundled into
// a self-contained JSON document, plus an independent recheck that re-derives
// every claim from the document alone (no truncation or cycle construction is
// re-run; only verification-side code is used).

#include <cstdint>

#include "bipow/bipower.hpp"
#include "bipow/infinite.hpp"

namespace bipow {

// FNV-1a, used to tie a certificate to its generating input.
inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Certificate {
    nlohmann::json doc;
    bool pass = false;
};

namespace detail {

inline nlohmann::json lazy_edges_json(const std::set<LazyEdge>& edges) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [a, b] : edges) out.push_back({a, b});
    return out;
}

// Dense graph over an explicit lazy vertex list; id = position in the sorted list.
struct DenseView {
    Graph g;
    std::vector<LazyVertex> label;
    std::map<LazyVertex, int> id;

    explicit DenseView(const std::set<LazyVertex>& verts) {
        for (LazyVertex v : verts) {
            id.emplace(v, static_cast<int>(label.size()));
            label.push_back(v);
        }
        g = Graph(static_cast<int>(label.size()));
    }
};

}  // namespace detail

// Runs quotient -> spanning tree -> lift -> cycle sequence -> stabilization ->
// limit graph cut bound -> cycle cover -> faithfulness samples and records
// every outcome. Any failed stage marks the certificate failed (never thrown).
inline Certificate infinite_certificate(const LazyGraph& lg, const std::vector<int>& schedule) {
    Certificate cert;
    nlohmann::json& doc = cert.doc;
    doc["kind"] = "hamiltonian-circle-certificate";
    doc["version"] = 1;
    doc["family"] = lg.family;
    doc["schedule"] = schedule;
    {
        std::string input = lg.family;
        for (int r : schedule) input += " " + std::to_string(r);
        doc["input_hash"] = fnv1a_hex(input);
    }
    std::vector<std::string> failures;

    CycleSequence seq = cycle_sequence(lg, schedule);
    doc["steps"] = nlohmann::json::array();
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        const CycleStep& s = seq.steps[i];
        nlohmann::json js;
        js["radius"] = s.radius;
        js["vertices"] = s.trunc.label;  // sorted by (distance, label); recheck re-sorts
        nlohmann::json b = nlohmann::json::array();
        for (int v : s.trunc.boundary) b.push_back(s.trunc.label[static_cast<size_t>(v)]);
        js["boundary"] = b;
        nlohmann::json mp = nlohmann::json::array();
        for (auto [u, v] : s.trunc.matching.pairs())
            mp.push_back({std::min(s.trunc.label[static_cast<size_t>(u)], s.trunc.label[static_cast<size_t>(v)]),
                          std::max(s.trunc.label[static_cast<size_t>(u)], s.trunc.label[static_cast<size_t>(v)])});
        js["matching"] = mp;
        js["tree_edges"] = detail::lazy_edges_json(s.lazy_edges(s.tree));
        nlohmann::json cy = nlohmann::json::array();
        for (int v : s.cycle) cy.push_back(s.trunc.label[static_cast<size_t>(v)]);
        js["cycle"] = cy;
        js["cond_cover"] = s.cond_cover;
        js["cond_crossings"] = s.cond_crossings;
        js["nested_in_previous"] = s.nested_in_previous;
        js["quotient_tree_normal"] = s.quotient_tree_normal;
        doc["steps"].push_back(std::move(js));
        if (!s.cond_cover) failures.push_back("step " + std::to_string(i) + ": cycle does not cover the tree");
        if (!s.cond_crossings) failures.push_back("step " + std::to_string(i) + ": some non-matching tree edge not crossed exactly twice");
        if (!s.nested_in_previous) failures.push_back("step " + std::to_string(i) + ": tree not nested in the previous step's tree");
    }

    StabilizationReport stab = stabilization_check(seq);
    {
        nlohmann::json jst;
        jst["heads"] = stab.heads;
        jst["all_nonempty"] = stab.all_nonempty;
        jst["windows"] = nlohmann::json::array();
        for (const auto& w : stab.windows) {
            nlohmann::json jw;
            jw["window"] = w.window;
            jw["candidates"] = w.candidates;
            jw["class_size"] = w.class_size;
            nlohmann::json sig = nlohmann::json::array();
            for (const auto& [a, b] : w.signature) sig.push_back({a, b});
            jw["signature"] = sig;
            jw["extracted"] = w.extracted;
            jst["windows"].push_back(std::move(jw));
        }
        doc["stabilization"] = std::move(jst);
        if (!stab.all_nonempty) failures.push_back("stabilization produced an empty class");
    }

    // limit graph: the last tree plus the edges of the head cycles
    const CycleStep& last = seq.steps.back();
    std::set<LazyEdge> gp_edges = last.lazy_edges(last.tree);
    for (int h : stab.heads)
        for (const auto& e : seq.steps[static_cast<size_t>(h)].lazy_cycle_edges()) gp_edges.insert(e);
    doc["limit_graph"]["edges"] = detail::lazy_edges_json(gp_edges);

    {
        // dense view on the last truncation's ids
        Graph gp(last.trunc.graph.n);
        for (const auto& [a, b] : gp_edges) gp.add_edge(last.trunc.id.at(a), last.trunc.id.at(b));
        std::vector<std::pair<int, int>> f;
        for (auto [u, v] : last.tree.edges())
            if (last.trunc.matching.mate[static_cast<size_t>(u)] != v) f.emplace_back(u, v);
        int bound = end_degree_bound(gp, last.tree, f, &last.trunc.matching, &last.trunc.boundary);
        doc["limit_graph"]["cut_bound"] = bound;
        doc["limit_graph"]["cut_bound_ok"] = bound <= 3;
        if (bound > 3) failures.push_back("limit graph cut bound " + std::to_string(bound) + " exceeds 3");
    }

    // cycle cover: each truncation's vertices lie on a head cycle whose edges
    // the limit graph contains
    doc["cycle_cover"] = nlohmann::json::array();
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        int head = -1;
        for (int h : stab.heads)
            if (h >= static_cast<int>(i)) {
                head = h;
                break;
            }
        if (head < 0) head = static_cast<int>(seq.steps.size()) - 1;
        const CycleStep& hs = seq.steps[static_cast<size_t>(head)];
        auto hv = hs.lazy_vertices();
        bool ok = true;
        for (LazyVertex v : seq.steps[i].trunc.label)
            if (!hv.count(v)) ok = false;
        for (const auto& e : hs.lazy_cycle_edges())
            if (!gp_edges.count(e)) ok = false;
        doc["cycle_cover"].push_back({{"step", i}, {"head", head}, {"ok", ok}});
        if (!ok) failures.push_back("step " + std::to_string(i) + ": not covered by a limit-graph cycle");
    }

    // faithfulness samples: the last tree inside its third bi-power, cut at
    // the closed neighborhood of each matched pair (separators thick enough
    // that no distance-<=3 edge can bridge distinct tree components)
    {
        const Graph& t = last.tree;
        Graph gb = bipower(t, 3);
        std::vector<std::vector<int>> separators;
        std::vector<char> on_boundary(static_cast<size_t>(t.n), 0);
        for (int b : last.trunc.boundary) on_boundary[static_cast<size_t>(b)] = 1;
        for (auto [u, v] : last.trunc.matching.pairs()) {
            // fringe pairs have truncated neighborhoods; their cuts say
            // nothing about the limit and are skipped
            if (on_boundary[static_cast<size_t>(u)] || on_boundary[static_cast<size_t>(v)]) continue;
            // cut at the bushier endpoint of each matched pair: its closed
            // tree neighborhood is thick enough that no distance-<=3 edge
            // bridges two boundary-reaching components
            int w = t.degree(v) > t.degree(u) ? v : u;
            std::set<int> s{w};
            for (int x : t.adj[static_cast<size_t>(w)]) s.insert(x);
            separators.emplace_back(s.begin(), s.end());
        }
        FaithfulnessReport fr = faithfulness_check(gb, t, separators, last.trunc.boundary);
        nlohmann::json jf;
        jf["pass"] = fr.pass;
        jf["samples"] = separators.size();
        jf["separators"] = nlohmann::json::array();
        for (const auto& s : separators) {
            nlohmann::json js = nlohmann::json::array();
            for (int v : s) js.push_back(last.trunc.label[static_cast<size_t>(v)]);
            jf["separators"].push_back(std::move(js));
        }
        nlohmann::json jd = nlohmann::json::array();
        for (const auto& sr : fr.separators)
            if (!sr.pass) jd.push_back(sr.detail);
        jf["failures"] = std::move(jd);
        doc["faithfulness"] = std::move(jf);
        if (!fr.pass) failures.push_back("faithfulness proxy failed on a sampled separator");
    }

    cert.pass = failures.empty();
    doc["pass"] = cert.pass;
    doc["failures"] = failures;
    return cert;
}

// ---------------------------------------------------------------------------
// recheck: verify a stored certificate from its own content

namespace detail {

inline std::set<LazyEdge> lazy_edges_from_json(const nlohmann::json& j) {
    std::set<LazyEdge> out;
    for (const auto& e : j) out.insert(lazy_edge(e.at(0).get<LazyVertex>(), e.at(1).get<LazyVertex>()));
    return out;
}

}  // namespace detail

// Re-verifies every claim of the certificate without re-running construction:
// tree shape, matching, nesting, cycle validity (independent capped BFS),
// crossing counts, stabilization extraction, limit-graph cut bound, cycle
// cover, faithfulness samples, and the embedded input hash.
inline Report recheck(const nlohmann::json& doc) {
    Report r;
    if (doc.value("kind", "") != "hamiltonian-circle-certificate") {
        r.fail("not a hamiltonian-circle-certificate");
        return r;
    }
    {
        std::string input = doc.at("family").get<std::string>();
        for (const auto& x : doc.at("schedule")) input += " " + std::to_string(x.get<int>());
        if (doc.at("input_hash").get<std::string>() != fnv1a_hex(input))
            r.fail("input hash does not match family/schedule");
    }
    const auto& steps = doc.at("steps");
    if (steps.size() < 2) {
        r.fail("certificate needs at least 2 steps");
        return r;
    }

    struct DenseStep {
        detail::DenseView view;
        Graph tree;
        Matching m;
        std::vector<int> cycle;
        std::vector<int> boundary;
        std::set<LazyVertex> verts;
        std::set<LazyEdge> tree_edges;
        std::vector<LazyEdge> cycle_edges;  // sorted
    };
    std::vector<DenseStep> ds;

    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& js = steps[i];
        std::set<LazyVertex> verts;
        for (const auto& v : js.at("vertices")) verts.insert(v.get<LazyVertex>());
        detail::DenseView view(verts);
        int n = view.g.n;
        Graph tree(n);
        auto tedges = detail::lazy_edges_from_json(js.at("tree_edges"));
        for (const auto& [a, b] : tedges) {
            auto ia = view.id.find(a), ib = view.id.find(b);
            if (ia == view.id.end() || ib == view.id.end()) {
                r.fail("step " + std::to_string(i) + ": tree edge endpoint outside vertex set");
                return r;
            }
            tree.add_edge(ia->second, ib->second);
        }
        if (!is_tree(tree)) r.fail("step " + std::to_string(i) + ": tree_edges do not form a spanning tree");
        Matching m(n);
        for (const auto& e : js.at("matching")) {
            int u = view.id.at(e.at(0).get<LazyVertex>()), v = view.id.at(e.at(1).get<LazyVertex>());
            if (m.mate[static_cast<size_t>(u)] >= 0 || m.mate[static_cast<size_t>(v)] >= 0)
                r.fail("step " + std::to_string(i) + ": vertex matched twice");
            m.match(u, v);
        }
        if (!m.valid_in(tree, /*require_perfect=*/true))
            r.fail("step " + std::to_string(i) + ": matching not a perfect matching within the tree");
        std::vector<int> cycle;
        std::vector<LazyEdge> cycle_edges;
        for (const auto& v : js.at("cycle")) cycle.push_back(view.id.at(v.get<LazyVertex>()));
        for (size_t k = 0; k < cycle.size(); ++k)
            cycle_edges.push_back(lazy_edge(view.label[static_cast<size_t>(cycle[k])],
                                            view.label[static_cast<size_t>(cycle[(k + 1) % cycle.size()])]));
        std::sort(cycle_edges.begin(), cycle_edges.end());
        std::vector<int> boundary;
        for (const auto& v : js.at("boundary")) boundary.push_back(view.id.at(v.get<LazyVertex>()));

        // condition (1): Hamiltonian cycle of the tree's third bi-power
        Report cyc = verify_bipower_cycle(tree, cycle, 3);
        if (!cyc.pass) r.fail("step " + std::to_string(i) + ": cycle invalid: " + cyc.failures.front());
        // condition (2): crossings
        if (cyc.pass)
            for (auto [u, v] : tree.edges()) {
                if (m.mate[static_cast<size_t>(u)] == v) continue;
                if (crossing_count(tree, cycle, {u, v}, /*cyclic=*/true) != 2) {
                    r.fail("step " + std::to_string(i) + ": tree edge not crossed exactly twice");
                    break;
                }
            }
        if (i > 0) {
            for (LazyVertex v : ds.back().verts)
                if (!verts.count(v)) {
                    r.fail("step " + std::to_string(i) + ": vertex sets not nested");
                    break;
                }
            for (const auto& e : ds.back().tree_edges)
                if (!tedges.count(e)) {
                    r.fail("step " + std::to_string(i) + ": trees not nested");
                    break;
                }
        }
        ds.push_back(DenseStep{std::move(view), std::move(tree), std::move(m), std::move(cycle),
                               std::move(boundary), std::move(verts), std::move(tedges),
                               std::move(cycle_edges)});
    }

    // stabilization: re-run the extraction on the stored cycles
    {
        std::vector<int> current(ds.size());
        std::iota(current.begin(), current.end(), 0);
        std::vector<int> heads{0};
        const auto& jw = doc.at("stabilization").at("windows");
        for (size_t w = 0; w + 1 < ds.size(); ++w) {
            std::map<std::vector<LazyEdge>, std::vector<int>> classes;
            for (int j : current) {
                if (j <= static_cast<int>(w)) continue;
                std::vector<LazyEdge> sig;
                for (const auto& e : ds[static_cast<size_t>(j)].cycle_edges)
                    if (ds[w].verts.count(e.first) != ds[w].verts.count(e.second)) sig.push_back(e);
                classes[std::move(sig)].push_back(j);
            }
            const std::vector<int>* best = nullptr;
            for (const auto& [sig, members] : classes)
                if (!best || members.size() > best->size() ||
                    (members.size() == best->size() &&
                     (members.back() > best->back() ||
                      (members.back() == best->back() && members.front() < best->front()))))
                    best = &members;
            if (!best) {
                r.fail("stabilization window " + std::to_string(w) + " empty");
                break;
            }
            if (w < jw.size() && jw[w].at("extracted").get<std::vector<int>>() != *best)
                r.fail("stabilization window " + std::to_string(w) + " does not match the stored extraction");
            current = *best;
            heads.push_back(current.front());
        }
        if (doc.at("stabilization").at("heads").get<std::vector<int>>() != heads)
            r.fail("stored stabilization heads do not match re-extraction");
    }

    // limit graph and cut bound
    const DenseStep& last = ds.back();
    std::set<LazyEdge> gp_edges = last.tree_edges;
    for (int h : doc.at("stabilization").at("heads").get<std::vector<int>>())
        for (const auto& e : ds[static_cast<size_t>(h)].cycle_edges) gp_edges.insert(e);
    if (detail::lazy_edges_from_json(doc.at("limit_graph").at("edges")) != gp_edges)
        r.fail("stored limit graph does not match the heads' cycles");
    {
        Graph gp(last.view.g.n);
        for (const auto& [a, b] : gp_edges) gp.add_edge(last.view.id.at(a), last.view.id.at(b));
        std::vector<std::pair<int, int>> f;
        for (auto [u, v] : last.tree.edges())
            if (last.m.mate[static_cast<size_t>(u)] != v) f.emplace_back(u, v);
        int bound = end_degree_bound(gp, last.tree, f, &last.m, &last.boundary);
        if (bound != doc.at("limit_graph").at("cut_bound").get<int>())
            r.fail("stored cut bound does not match recomputation");
        if (bound > 3) r.fail("limit graph cut bound " + std::to_string(bound) + " exceeds 3");
    }

    // cycle cover
    for (const auto& jc : doc.at("cycle_cover")) {
        size_t i = jc.at("step").get<size_t>();
        int h = jc.at("head").get<int>();
        bool ok = true;
        for (LazyVertex v : ds[i].verts)
            if (!ds[static_cast<size_t>(h)].verts.count(v)) ok = false;
        for (const auto& e : ds[static_cast<size_t>(h)].cycle_edges)
            if (!gp_edges.count(e)) ok = false;
        if (!ok || !jc.at("ok").get<bool>())
            r.fail("cycle cover fails at step " + std::to_string(i));
    }

    // faithfulness samples on the stored separators
    {
        Graph gb = bipower(last.tree, 3);
        std::vector<std::vector<int>> separators;
        for (const auto& js : doc.at("faithfulness").at("separators")) {
            std::vector<int> s;
            for (const auto& v : js) s.push_back(last.view.id.at(v.get<LazyVertex>()));
            separators.push_back(std::move(s));
        }
        FaithfulnessReport fr = faithfulness_check(gb, last.tree, separators, last.boundary);
        if (!fr.pass) r.fail("faithfulness proxy fails on a stored separator");
        if (fr.pass != doc.at("faithfulness").at("pass").get<bool>())
            r.fail("stored faithfulness verdict does not match recomputation");
    }

    if (!doc.at("pass").get<bool>() && r.pass)
        r.fail("certificate marked failed but all rechecked claims hold");
    return r;
}

}  // namespace bipow
