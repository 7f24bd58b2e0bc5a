// Command-line front end. Exit codes: 0 = success / verification passed,
// 1 = verification failed or certificate absent, 2 = usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bipow/bipower.hpp"
#include "bipow/certificate.hpp"
#include "bipow/gallery.hpp"
#include "bipow/ham.hpp"
#include "bipow/infinite.hpp"
#include "bipow/matching.hpp"
#include "bipow/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bipow::Graph load_graph(const std::string& path) { return bipow::parse_graph_any(slurp(path)); }

bipow::Matching load_matching(const std::string& path, int n) {
    return bipow::parse_matching(slurp(path), n);
}

// Whitespace-separated vertex ids; the file may span lines and use # comments.
std::vector<int> load_sequence(const std::string& path) {
    std::istringstream in(slurp(path));
    std::vector<int> seq;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int v;
        while (ls >> v) seq.push_back(v);
    }
    return seq;
}

void emit_graph(const bipow::Graph& g, bool dot) {
    std::cout << (dot ? bipow::graph_to_dot(g) : bipow::serialize_graph(g));
}

std::string seq_line(const std::vector<int>& seq) {
    std::string out;
    for (size_t i = 0; i < seq.size(); ++i) out += (i ? " " : "") + std::to_string(seq[i]);
    return out + "\n";
}

nlohmann::json crossing_json(const bipow::Graph& t, const bipow::Matching* m,
                             const std::vector<int>& seq, bool cyclic) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [u, v] : t.edges()) {
        nlohmann::json e;
        e["edge"] = {u, v};
        e["crossings"] = bipow::crossing_count(t, seq, {u, v}, cyclic);
        if (m) e["matching"] = m->mate[static_cast<size_t>(u)] == v;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<int> parse_radii(const std::string& spec) {
    auto colon = spec.find(':');
    std::vector<int> radii;
    if (colon == std::string::npos) {
        radii.push_back(std::stoi(spec));
        return radii;
    }
    int a = std::stoi(spec.substr(0, colon)), b = std::stoi(spec.substr(colon + 1));
    if (a > b) throw std::runtime_error("bad radius range " + spec);
    for (int r = a; r <= b; ++r) radii.push_back(r);
    return radii;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian paths and cycles in third bi-powers of matched bipartite graphs"};
    app.require_subcommand(1);

    // ---- bipower / power
    struct {
        int t = 3;
        std::string graph;
        bool dot = false;
    } pw[2];
    const char* pw_name[2] = {"bipower", "power"};
    for (int i = 0; i < 2; ++i) {
        auto* c = app.add_subcommand(pw_name[i], i == 0 ? "Emit the t-th bi-power (odd distance <= t)"
                                                        : "Emit the t-th power (distance <= t)");
        c->add_option("--t", pw[i].t, "power parameter")->capture_default_str();
        c->add_flag("--dot", pw[i].dot, "emit DOT instead of edge list");
        c->add_option("graph", pw[i].graph, "graph file")->required();
    }

    // ---- match
    struct {
        std::string graph;
    } match_opt;
    {
        auto* c = app.add_subcommand("match", "Maximum matching of a bipartite graph");
        c->add_option("graph", match_opt.graph)->required();
    }

    // ---- spantree
    struct {
        std::string graph, matching;
        bool dot = false;
    } st_opt;
    {
        auto* c = app.add_subcommand("spantree", "Spanning tree containing a perfect matching");
        c->add_option("--matching", st_opt.matching, "matching file (lines \"u v\")")->required();
        c->add_flag("--dot", st_opt.dot);
        c->add_option("graph", st_opt.graph)->required();
    }

    // ---- hampath / hamcycle
    struct {
        std::string graph, matching, cert;
        int from = -1, to = -1;
    } hp_opt, hc_opt;
    {
        auto* c = app.add_subcommand("hampath", "Hamiltonian (x,y)-path of the third bi-power");
        c->add_option("--matching", hp_opt.matching)->required();
        c->add_option("--from", hp_opt.from)->required();
        c->add_option("--to", hp_opt.to)->required();
        c->add_option("--cert", hp_opt.cert, "write a JSON certificate with crossing counts");
        c->add_option("graph", hp_opt.graph)->required();
    }
    {
        auto* c = app.add_subcommand("hamcycle", "Hamiltonian cycle of the third bi-power");
        c->add_option("--matching", hc_opt.matching)->required();
        c->add_option("--cert", hc_opt.cert, "write a JSON certificate with crossing counts");
        c->add_option("graph", hc_opt.graph)->required();
    }

    // ---- verify
    struct {
        std::string kind, graph, cert, tree, matching;
        int t = 3, from = -1, to = -1;
    } vf_opt;
    {
        auto* c = app.add_subcommand("verify", "Check a path/cycle certificate against the bi-power");
        c->add_option("kind", vf_opt.kind)->required()->check(CLI::IsMember({"path", "cycle"}));
        c->add_option("--t", vf_opt.t)->capture_default_str();
        c->add_option("--tree", vf_opt.tree, "tree file for crossing-count reporting");
        c->add_option("--matching", vf_opt.matching,
                      "with --tree: require crossings == 2 on non-matching tree edges");
        c->add_option("--from", vf_opt.from, "required path start (default: first of cert)");
        c->add_option("--to", vf_opt.to, "required path end (default: last of cert)");
        c->add_option("graph", vf_opt.graph)->required();
        c->add_option("cert", vf_opt.cert, "vertex sequence file")->required();
    }

    // ---- oracle
    struct {
        std::string kind, graph;
        int from = -1, to = -1, bound = 20;
    } or_opt;
    {
        auto* c = app.add_subcommand("oracle", "Brute-force smallest Hamiltonian path/cycle");
        c->add_option("kind", or_opt.kind)->required()->check(CLI::IsMember({"path", "cycle"}));
        c->add_option("--from", or_opt.from);
        c->add_option("--to", or_opt.to);
        c->add_option("--bound", or_opt.bound, "size refusal bound")->capture_default_str();
        c->add_option("graph", or_opt.graph)->required();
    }

    // ---- gen
    struct {
        std::string kind, matching_out, sets_out;
        int k = 3, t = 3, s = 4, half_n = 4, extra = 0;
        unsigned seed = 0;
        bool dot = false;
        CLI::Option* seed_opt = nullptr;
    } gen_opt;
    {
        auto* c = app.add_subcommand("gen", "Generate example families and random instances");
        c->add_option("kind", gen_opt.kind)
            ->required()
            ->check(CLI::IsMember({"layered", "bistar", "matched-tree", "bipartite"}));
        c->add_option("--k", gen_opt.k)->capture_default_str();
        c->add_option("--t", gen_opt.t)->capture_default_str();
        c->add_option("--s", gen_opt.s)->capture_default_str();
        c->add_option("--half-n", gen_opt.half_n)->capture_default_str();
        c->add_option("--extra", gen_opt.extra)->capture_default_str();
        gen_opt.seed_opt = c->add_option("--seed", gen_opt.seed, "PRNG seed (required for random kinds)");
        c->add_option("--matching-out", gen_opt.matching_out, "write the matching here");
        c->add_option("--sets-out", gen_opt.sets_out, "write marked vertex sets here (layered)");
        c->add_flag("--dot", gen_opt.dot);
    }

    // ---- quotient
    struct {
        std::string graph, matching;
        bool dot = false;
    } qt_opt;
    {
        auto* c = app.add_subcommand("quotient", "Matched quotient: one vertex per matching edge");
        c->add_option("--matching", qt_opt.matching)->required();
        c->add_flag("--dot", qt_opt.dot);
        c->add_option("graph", qt_opt.graph)->required();
    }

    // ---- infinite / recheck
    struct {
        std::string family, radii = "1:8";
    } inf_opt;
    {
        auto* c = app.add_subcommand("infinite", "Hamiltonian-circle certificate for a built-in family");
        c->add_option("--family", inf_opt.family)
            ->required()
            ->check(CLI::IsMember({"double-ray", "ladder", "matched-tree"}));
        c->add_option("--radii", inf_opt.radii, "schedule a:b")->capture_default_str();
    }
    struct {
        std::string cert;
    } rc_opt;
    {
        auto* c = app.add_subcommand("recheck", "Re-verify a stored certificate without reconstruction");
        c->add_option("cert", rc_opt.cert)->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (int i = 0; i < 2; ++i)
            if (app.got_subcommand(pw_name[i])) {
                bipow::Graph g = load_graph(pw[i].graph);
                emit_graph(i == 0 ? bipow::bipower(g, pw[i].t) : bipow::power(g, pw[i].t), pw[i].dot);
                return 0;
            }
        if (app.got_subcommand("match")) {
            bipow::Graph g = load_graph(match_opt.graph);
            std::cout << bipow::serialize_matching(bipow::maximum_matching(g, bipow::bipartition(g)));
            return 0;
        }
        if (app.got_subcommand("spantree")) {
            bipow::Graph g = load_graph(st_opt.graph);
            emit_graph(bipow::spanning_tree_with_matching(g, load_matching(st_opt.matching, g.n)),
                       st_opt.dot);
            return 0;
        }
        if (app.got_subcommand("hampath") || app.got_subcommand("hamcycle")) {
            bool is_path = app.got_subcommand("hampath");
            auto& o = is_path ? hp_opt : hc_opt;
            bipow::Graph g = load_graph(o.graph);
            bipow::Matching m = load_matching(o.matching, g.n);
            std::vector<int> seq;
            if (is_path)
                seq = bipow::laceable_ham_path(g, m, o.from, o.to).seq;
            else
                seq = bipow::ham_cycle(g, m).seq;
            std::cout << seq_line(seq);
            if (!o.cert.empty()) {
                bipow::Graph t = bipow::spanning_tree_with_matching(g, m);
                nlohmann::json j;
                j["kind"] = is_path ? "ham-path" : "ham-cycle";
                j["t"] = 3;
                j["sequence"] = seq;
                j["input_hash"] = bipow::fnv1a_hex(bipow::serialize_graph(g) + bipow::serialize_matching(m));
                j["tree_edges"] = nlohmann::json::array();
                for (auto [u, v] : t.edges()) j["tree_edges"].push_back({u, v});
                j["crossings"] = crossing_json(t, &m, seq, /*cyclic=*/!is_path ? true : false);
                std::ofstream out(o.cert, std::ios::binary);
                out << j.dump(2) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand("verify")) {
            bipow::Graph g = load_graph(vf_opt.graph);
            std::vector<int> seq = load_sequence(vf_opt.cert);
            bipow::Report rep;
            bool cyclic = vf_opt.kind == "cycle";
            if (cyclic) {
                rep = bipow::verify_bipower_cycle(g, seq, vf_opt.t);
            } else {
                int x = vf_opt.from >= 0 ? vf_opt.from : (seq.empty() ? -1 : seq.front());
                int y = vf_opt.to >= 0 ? vf_opt.to : (seq.empty() ? -1 : seq.back());
                rep = bipow::verify_bipower_path(g, seq, x, y, vf_opt.t);
            }
            nlohmann::json j = rep.to_json();
            if (!vf_opt.tree.empty() && rep.pass) {
                bipow::Graph t = load_graph(vf_opt.tree);
                std::optional<bipow::Matching> m;
                if (!vf_opt.matching.empty()) m = load_matching(vf_opt.matching, t.n);
                j["crossings"] = crossing_json(t, m ? &*m : nullptr, seq, cyclic);
                if (m)
                    for (auto [u, v] : t.edges())
                        if (m->mate[static_cast<size_t>(u)] != v &&
                            bipow::crossing_count(t, seq, {u, v}, cyclic) != 2)
                            rep.fail("tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                                     " not crossed exactly twice");
                j["pass"] = rep.pass;
                j["failures"] = rep.failures;
            }
            std::cout << j.dump(2) << "\n";
            return rep.pass ? 0 : 1;
        }
        if (app.got_subcommand("oracle")) {
            bipow::Graph g = load_graph(or_opt.graph);
            std::optional<std::vector<int>> seq;
            if (or_opt.kind == "path") {
                if (or_opt.from < 0 || or_opt.to < 0)
                    throw std::runtime_error("oracle path needs --from and --to");
                if (auto p = bipow::brute_ham_path(g, or_opt.from, or_opt.to, or_opt.bound))
                    seq = p->seq;
            } else if (auto c = bipow::brute_ham_cycle(g, or_opt.bound)) {
                seq = c->seq;
            }
            if (!seq) {
                std::cout << "none\n";
                return 1;
            }
            std::cout << seq_line(*seq);
            return 0;
        }
        if (app.got_subcommand("gen")) {
            bool randomized = gen_opt.kind == "matched-tree" || gen_opt.kind == "bipartite";
            if (randomized && gen_opt.seed_opt->count() == 0)
                throw CLI::RequiredError("--seed (randomized generator)");
            bipow::Graph g;
            std::optional<bipow::Matching> m;
            std::string sets;
            if (gen_opt.kind == "layered") {
                auto lg = bipow::layered_counterexample(gen_opt.k, gen_opt.t, gen_opt.s);
                g = lg.g;
                sets = "v_first";
                for (int v : lg.v_first) sets += " " + std::to_string(v);
                sets += "\nv_last";
                for (int v : lg.v_last) sets += " " + std::to_string(v);
                sets += "\n";
            } else if (gen_opt.kind == "bistar") {
                g = bipow::subdivided_bistar(gen_opt.k);
            } else if (gen_opt.kind == "matched-tree") {
                auto mg = bipow::random_matched_tree(gen_opt.half_n, gen_opt.seed);
                g = mg.g;
                m = mg.m;
            } else {
                auto mg = bipow::random_bipartite_with_pm(gen_opt.half_n, gen_opt.extra, gen_opt.seed);
                g = mg.g;
                m = mg.m;
            }
            emit_graph(g, gen_opt.dot);
            if (!gen_opt.matching_out.empty()) {
                if (!m) throw std::runtime_error("this family has no generated matching");
                std::ofstream out(gen_opt.matching_out, std::ios::binary);
                out << bipow::serialize_matching(*m);
            }
            if (!gen_opt.sets_out.empty()) {
                if (sets.empty()) throw std::runtime_error("this family has no marked sets");
                std::ofstream out(gen_opt.sets_out, std::ios::binary);
                out << sets;
            }
            return 0;
        }
        if (app.got_subcommand("quotient")) {
            bipow::Graph g = load_graph(qt_opt.graph);
            bipow::Quotient q = bipow::matched_quotient(g, load_matching(qt_opt.matching, g.n));
            emit_graph(q.graph, qt_opt.dot);
            for (int i = 0; i < static_cast<int>(q.pairs.size()); ++i)
                std::cout << "# pair " << i << " = " << q.pairs[static_cast<size_t>(i)].first << " "
                          << q.pairs[static_cast<size_t>(i)].second << "\n";
            return 0;
        }
        if (app.got_subcommand("infinite")) {
            auto cert = bipow::infinite_certificate(bipow::family_by_name(inf_opt.family),
                                                    parse_radii(inf_opt.radii));
            std::cout << cert.doc.dump(2) << "\n";
            return cert.pass ? 0 : 1;
        }
        if (app.got_subcommand("recheck")) {
            bipow::Report rep = bipow::recheck(nlohmann::json::parse(slurp(rc_opt.cert)));
            std::cout << rep.to_json().dump(2) << "\n";
            return rep.pass ? 0 : 1;
        }
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
