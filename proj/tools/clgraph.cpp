// Command-line surface for the chordal line graph toolkit.
//
// Exit codes are part of the contract:
//   0  affirmative / success
//   1  negative / not in class / inverse rejected
//   2  usage or parse error
//   3  internal invariant violation (paranoid re-verification failed)

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clg/canon.hpp"
#include "clg/chordal.hpp"
#include "clg/generators.hpp"
#include "clg/graph.hpp"
#include "clg/isocheck.hpp"
#include "clg/linegraph.hpp"
#include "clg/reductions.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

clg::Graph read_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return clg::parse_graph(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw clg::ParseError(0, "cannot open '" + path + "'");
    return clg::parse_graph(in);
}

std::string join(const std::vector<clg::Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

// Relabels an arbitrary-id graph onto {1..n} in ascending id order.
clg::LabeledGraph relabel(const clg::Graph& g, std::vector<std::pair<clg::Vertex, int>>* map_out) {
    const auto& vs = g.vertices();
    std::vector<clg::Edge> es;
    auto pos = [&](clg::Vertex v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()) + 1;
    };
    for (const auto& [u, v] : g.edges()) es.push_back(clg::make_edge(pos(u), pos(v)));
    if (map_out)
        for (clg::Vertex v : vs) map_out->emplace_back(v, pos(v));
    return clg::LabeledGraph(static_cast<int>(vs.size()), es);
}

int cmd_recognize(const std::string& cls, const std::string& input) {
    clg::Graph g = read_graph(input);
    if (cls == "chordal") {
        auto res = clg::is_chordal(g);
        if (res.chordal) {
            std::cout << "chordal\nperfect elimination order: " << join(res.peo) << "\n";
            return kExitYes;
        }
        std::cout << "not chordal\nchordless cycle: " << join(res.hole) << "\n";
        return kExitNo;
    }
    if (cls == "line") {
        if (clg::is_line_graph(g)) {
            std::cout << "line graph\n";
            return kExitYes;
        }
        std::cout << "not a line graph\n";
        if (auto claw = clg::detail::find_claw(g))
            std::cout << "induced claw (center first): " << join(*claw) << "\n";
        else
            std::cout << "no Krausz edge-clique cover exists\n";
        return kExitNo;
    }
    if (cls == "chordal-line") {
        auto res = clg::is_chordal_line(g);
        if (res.yes()) {
            std::cout << "chordal line graph\nroot order: " << res.root.order() << "\n";
            return kExitYes;
        }
        if (res.status == clg::ChordalLineResult::Status::NotChordal)
            std::cout << "not chordal\nchordless cycle: " << join(res.hole) << "\n";
        else
            std::cout << "not a line graph\n";
        return kExitNo;
    }
    // hat
    if (clg::is_hat(g)) {
        clg::Graph core = clg::unhat(g);
        std::cout << "hat image\ncore: " << join(core.vertices()) << "\n";
        return kExitYes;
    }
    std::cout << "not a hat image\n";
    return kExitNo;
}

int cmd_canon(const std::string& input, bool witness, bool paranoid) {
    clg::Graph g = read_graph(input);
    clg::CanonicalForm form;
    try {
        form = clg::canon(g, clg::CanonOptions{paranoid, nullptr});
    } catch (const clg::NotChordalLineCanonError& e) {
        std::cerr << "not a chordal line graph: " << e.what() << "\n";
        return kExitNo;
    }
    std::cout << clg::serialize_graph(form.graph);
    if (witness)
        for (const auto& [v, p] : form.witness) std::cout << "c " << v << " " << p << "\n";
    return kExitYes;
}

int cmd_transform(const std::string& op, const std::string& input) {
    clg::Graph g = read_graph(input);
    if (op == "hat") {
        clg::HatImage h = clg::hat(g);
        for (const auto& [v, e] : h.pendant)
            std::cout << "# pendant " << v << " encodes edge " << e.first << " " << e.second << "\n";
        std::cout << clg::serialize_graph(relabel(h.graph, nullptr));
        return kExitYes;
    }
    if (op == "unhat") {
        clg::Graph back;
        try {
            back = clg::unhat(g);
        } catch (const clg::NotHatImageError& e) {
            std::cerr << e.what() << "\n";
            return kExitNo;
        }
        std::vector<std::pair<clg::Vertex, int>> map;
        clg::LabeledGraph out = relabel(back, &map);
        for (const auto& [orig, fresh] : map)
            std::cout << "# vertex " << fresh << " was core vertex " << orig << "\n";
        std::cout << clg::serialize_graph(out);
        return kExitYes;
    }
    if (op == "linegraph") {
        clg::LineGraphResult lr;
        try {
            lr = clg::line_graph(g);
        } catch (const clg::EdgelessInputError& e) {
            std::cerr << e.what() << "\n";
            return kExitNo;
        }
        for (clg::Vertex v : lr.graph.vertices()) {
            clg::Edge e = lr.source_of(v);
            std::cout << "# vertex " << v << " is edge " << e.first << " " << e.second << "\n";
        }
        std::cout << clg::serialize_graph(relabel(lr.graph, nullptr));
        return kExitYes;
    }
    // rootgraph
    clg::RootGraphResult r;
    try {
        r = clg::root_graph(g);
    } catch (const clg::NotLineGraphError& e) {
        std::cerr << e.what() << "\n";
        if (!e.claw.empty()) std::cerr << "induced claw (center first): " << join(e.claw) << "\n";
        return kExitNo;
    } catch (const clg::DisconnectedError& e) {
        std::cerr << e.what() << "\n";
        return kExitNo;
    }
    for (const auto& [e, v] : r.edge_to_vertex)
        std::cout << "# edge " << e.first << " " << e.second << " is vertex " << v << "\n";
    std::cout << clg::serialize_graph(relabel(r.root, nullptr));
    return kExitYes;
}

int cmd_iso(const std::string& a, const std::string& b, bool mapping) {
    clg::Graph ga = read_graph(a);
    clg::Graph gb = read_graph(b);
    auto res = clg::are_isomorphic(ga, gb);
    if (!res.isomorphic) {
        std::cout << "not isomorphic\n";
        return kExitNo;
    }
    std::cout << "isomorphic\n";
    if (mapping)
        for (const auto& [u, v] : res.mapping) std::cout << u << " " << v << "\n";
    return kExitYes;
}

int cmd_gen(const std::string& kind, int blocks, int n, double p, double triangles,
            clg::Seed seed, int count, int max_edges, const std::string& out_dir) {
    auto make = [&](clg::Seed s) -> clg::Graph {
        if (kind == "cactus") return clg::gen_triangle_cactus(blocks, triangles, s);
        if (kind == "chordal-line") return clg::gen_chordal_line(blocks, triangles, s);
        if (kind == "chordal") return clg::gen_chordal(n, p, s);
        return clg::gen_random(n, p, s);
    };
    std::vector<std::pair<std::string, clg::Graph>> batch;
    if (kind == "roots-exhaustive") {
        auto roots = clg::enumerate_small_roots(max_edges);
        int i = 0;
        for (const auto& g : roots)
            batch.emplace_back("root_" + std::to_string(i++), g);
    } else {
        const int param = (kind == "chordal" || kind == "random") ? n : blocks;
        for (int i = 0; i < count; ++i) {
            clg::Seed s = seed + static_cast<clg::Seed>(i);
            batch.emplace_back(kind + "_b" + std::to_string(param) + "_s" + std::to_string(s),
                               make(s));
        }
    }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& [name, g] : batch) {
            std::ofstream f(out_dir + "/" + name + ".txt");
            f << clg::serialize_graph(relabel(g, nullptr));
        }
        std::cout << batch.size() << " graphs written to " << out_dir << "\n";
        return kExitYes;
    }
    bool first = true;
    for (const auto& [name, g] : batch) {
        if (batch.size() > 1) {
            if (!first) std::cout << "\n";  // readability only; single graphs stay bit-frozen
            std::cout << "# " << name << "\n";
        }
        std::cout << clg::serialize_graph(relabel(g, nullptr));
        first = false;
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordal line graph toolkit"};
    app.require_subcommand(1);

    std::string input = "-", input_b, cls, op, kind, out_dir;
    bool witness = false, paranoid = false, mapping = false;
    int blocks = 1, n = 1, count = 1, max_edges = 1;
    double p = 0.5, triangles = 0.5;
    std::uint64_t seed = 1;

    auto* rec = app.add_subcommand("recognize", "class membership with witnesses");
    rec->add_option("--class", cls, "chordal | line | chordal-line | hat")
        ->required()
        ->check(CLI::IsMember({"chordal", "line", "chordal-line", "hat"}));
    rec->add_option("input", input, "edge-list file, '-' for stdin");

    auto* can = app.add_subcommand("canon", "canonical form of a chordal line graph");
    can->add_flag("--witness", witness, "append the vertex-to-position map");
    can->add_flag("--paranoid", paranoid, "re-verify the witness before printing");
    can->add_option("input", input, "edge-list file, '-' for stdin");

    auto* tra = app.add_subcommand("transform", "apply a graph transformation");
    tra->add_option("--op", op, "hat | unhat | linegraph | rootgraph")
        ->required()
        ->check(CLI::IsMember({"hat", "unhat", "linegraph", "rootgraph"}));
    tra->add_option("input", input, "edge-list file, '-' for stdin");

    auto* iso = app.add_subcommand("iso", "exact isomorphism test");
    iso->add_option("a", input, "first graph")->required();
    iso->add_option("b", input_b, "second graph")->required();
    iso->add_flag("--mapping", mapping, "print a verified bijection");

    auto* gen = app.add_subcommand("gen", "seeded corpus generation");
    gen->add_option("--kind", kind, "cactus | chordal-line | chordal | random | roots-exhaustive")
        ->required()
        ->check(CLI::IsMember({"cactus", "chordal-line", "chordal", "random", "roots-exhaustive"}));
    gen->add_option("--blocks", blocks, "blocks for cactus kinds");
    gen->add_option("--n", n, "order for chordal/random kinds");
    gen->add_option("--p", p, "edge probability / fill ratio");
    gen->add_option("--triangles", triangles, "triangle fraction for cactus kinds");
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--count", count, "number of graphs (seeds seed..seed+count-1)");
    gen->add_option("--max-edges", max_edges, "edge count for roots-exhaustive");
    gen->add_option("--out", out_dir, "write one file per graph into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (rec->parsed()) return cmd_recognize(cls, input);
        if (can->parsed()) return cmd_canon(input, witness, paranoid);
        if (tra->parsed()) return cmd_transform(op, input);
        if (iso->parsed()) return cmd_iso(input, input_b, mapping);
        if (gen->parsed())
            return cmd_gen(kind, blocks, n, p, triangles, seed, count, max_edges, out_dir);
    } catch (const clg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const clg::TooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}
