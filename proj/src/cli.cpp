#include "wmp/cli.hpp"

#include <fstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wmp/classify.hpp"
#include "wmp/clique.hpp"
#include "wmp/expr.hpp"
#include "wmp/graph6.hpp"
#include "wmp/patterns.hpp"
#include "wmp/perfection.hpp"
#include "wmp/product.hpp"
#include "wmp/sweep.hpp"

namespace wmp {

namespace {

using nlohmann::json;

// A graph argument is a family expression, or @file with the graph6
// string on the file's first non-empty line.
Graph load_graph(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return parse_expr(arg);
    std::ifstream in(arg.substr(1));
    if (!in) throw Error("cannot open '" + arg.substr(1) + "'");
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty()) return parse_graph6(line);
    }
    throw Error("no graph6 line in '" + arg.substr(1) + "'");
}

void print_graph(const Graph& g, const std::string& format,
                 std::ostream& out) {
    if (format == "graph6") {
        out << encode_graph6(g) << "\n";
    } else if (format == "edges") {
        out << g.size() << " " << g.edge_count() << "\n";
        for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    } else {  // adj
        for (int u = 0; u < g.size(); ++u) {
            for (int v = 0; v < g.size(); ++v)
                out << (g.adjacent(u, v) ? '1' : '0');
            out << "\n";
        }
    }
}

json witness_json(const HoleWitness& w) {
    return json{{"kind", w.kind == HoleWitness::hole ? "hole" : "antihole"},
                {"cycle", w.cycle}};
}

struct Options {
    std::vector<std::string> graphs;
    std::string format = "graph6";
    bool as_json = false;
    bool fail_on_imperfect = false;
    bool fail_on_noniso = false;
    int max_size = 42;
    int max_n = 5;
    int jobs = 0;
};

int run_product(const Options& o, bool weak, std::ostream& out) {
    Graph g = load_graph(o.graphs[0]), h = load_graph(o.graphs[1]);
    ProductGraph p =
        weak ? weak_modular_product(g, h) : tensor_product(g, h);
    print_graph(p.graph, o.format, out);
    return 0;
}

int run_classify(const Options& o, std::ostream& out) {
    Graph g = load_graph(o.graphs[0]), h = load_graph(o.graphs[1]);
    Classification c = classify(g, h);
    if (o.as_json) {
        json rec{{"left", o.graphs[0]},
                 {"right", o.graphs[1]},
                 {"verdict", c.perfect ? "perfect" : "imperfect"}};
        if (c.perfect) {
            rec["case"] = *c.case_id;
            rec["orientation"] = *c.orientation;
        }
        out << rec.dump() << "\n";
    } else {
        out << (c.perfect ? "PERFECT" : "IMPERFECT") << "\n"
            << explain(c) << "\n";
    }
    return c.perfect || !o.fail_on_imperfect ? 0 : 1;
}

int run_oracle(const Options& o, std::ostream& out, std::ostream& err) {
    Graph subject = load_graph(o.graphs[0]);
    bool pair = o.graphs.size() == 2;
    if (pair) {
        Graph h = load_graph(o.graphs[1]);
        if (long{subject.size()} * h.size() > o.max_size) {
            err << "product has " << long{subject.size()} * h.size()
                << " vertices, above the cap of " << o.max_size
                << "; raise --max-size to force\n";
            return 2;
        }
        subject = weak_modular_product(subject, h).graph;
    } else if (subject.size() > o.max_size) {
        err << "graph has " << subject.size()
            << " vertices, above the cap of " << o.max_size
            << "; raise --max-size to force\n";
        return 2;
    }
    PerfectionVerdict v = is_perfect_oracle(subject);
    if (o.as_json) {
        json rec{{"left", o.graphs[0]},
                 {"verdict", v.perfect ? "perfect" : "imperfect"}};
        if (pair) rec["right"] = o.graphs[1];
        if (v.witness) rec["witness"] = witness_json(*v.witness);
        out << rec.dump() << "\n";
    } else {
        out << (v.perfect ? "PERFECT" : "IMPERFECT") << "\n";
        if (v.witness) {
            out << (v.witness->kind == HoleWitness::hole ? "odd hole:"
                                                         : "odd antihole:");
            for (int v2 : v.witness->cycle) out << " " << v2;
            out << "\n";
        }
    }
    return v.perfect || !o.fail_on_imperfect ? 0 : 1;
}

int run_iso(const Options& o, std::ostream& out) {
    Graph g = load_graph(o.graphs[0]), h = load_graph(o.graphs[1]);
    auto w = iso_via_product(g, h);
    if (o.as_json) {
        json rec{{"left", o.graphs[0]},
                 {"right", o.graphs[1]},
                 {"verdict", w ? "isomorphic" : "not isomorphic"}};
        if (w) rec["mapping"] = w->mapping;
        out << rec.dump() << "\n";
    } else if (w) {
        out << "isomorphic:";
        for (int x = 0; x < g.size(); ++x) out << " " << x << "->" << w->mapping[x];
        out << "\n";
    } else {
        out << "not isomorphic\n";
    }
    return w || !o.fail_on_noniso ? 0 : 1;
}

int run_sweep_cmd(const Options& o, std::ostream& out) {
    SweepReport r = run_sweep(o.max_n, o.jobs);
    if (o.as_json) {
        json cases = json::object();
        for (int id = 1; id <= 10; ++id)
            cases[std::to_string(id)] = r.perfect_by_case[id];
        json rec{{"max_n", r.max_n},       {"classes", r.classes},
                 {"pairs", r.pairs},       {"perfect_by_case", cases},
                 {"imperfect", r.imperfect}};
        rec["mismatches"] = json::array();
        for (const auto& m : r.mismatches)
            rec["mismatches"].push_back(
                {{"left", m.left},
                 {"right", m.right},
                 {"classifier", m.classifier_perfect ? "perfect" : "imperfect"},
                 {"oracle", m.oracle_perfect ? "perfect" : "imperfect"}});
        out << rec.dump() << "\n";
    } else {
        out << "classes up to " << r.max_n << " vertices: " << r.classes
            << ", ordered pairs: " << r.pairs << "\n";
        long perfect = 0;
        for (int id = 1; id <= 10; ++id) {
            perfect += r.perfect_by_case[id];
            out << "  case " << id << ": " << r.perfect_by_case[id] << "\n";
        }
        out << "  perfect: " << perfect << ", imperfect: " << r.imperfect
            << "\n";
        for (const auto& m : r.mismatches)
            out << "MISMATCH " << m.left << " " << m.right << " classifier="
                << (m.classifier_perfect ? "perfect" : "imperfect")
                << " oracle=" << (m.oracle_perfect ? "perfect" : "imperfect")
                << "\n";
        out << (r.ok() ? "all verdicts agree" : "verdict mismatches found")
            << "\n";
    }
    return r.ok() ? 0 : 1;
}

int run_catalog(std::ostream& out) {
    for (const Pattern& p : pattern_catalog())
        out << p.name << "\t n=" << p.graph.size()
            << " m=" << p.graph.edge_count() << "\t"
            << encode_graph6(p.graph) << "\n";
    return 0;
}

int run_complement(const Options& o, std::ostream& out) {
    print_graph(complement(load_graph(o.graphs[0])), o.format, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"weak modular products of graphs: construction, perfection "
                 "classification, exhaustive checking, isomorphism"};
    app.require_subcommand(1);
    Options o;

    auto add_graphs = [&](CLI::App* cmd, int count, const char* what) {
        cmd->add_option("graphs", o.graphs, what)
            ->expected(count)
            ->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "graph6|edges|adj")
            ->check(CLI::IsMember({"graph6", "edges", "adj"}));
    };

    auto* product = app.add_subcommand(
        "product", "weak modular product of two graphs");
    add_graphs(product, 2, "two graph expressions or @file.g6");
    add_format(product);

    auto* tensor =
        app.add_subcommand("tensor", "tensor product of two graphs");
    add_graphs(tensor, 2, "two graph expressions or @file.g6");
    add_format(tensor);

    auto* cls = app.add_subcommand(
        "classify", "polynomial perfection verdict for a product");
    add_graphs(cls, 2, "the two factors");
    cls->add_flag("--json", o.as_json, "one-line JSON record");
    cls->add_flag("--fail-on-imperfect", o.fail_on_imperfect,
                  "exit 1 when the product is imperfect");

    auto* oracle = app.add_subcommand(
        "oracle", "exhaustive perfection check of a graph, or of the "
                  "product of two");
    oracle->add_option("graphs", o.graphs, "one graph, or two factors")
        ->expected(1, 2)
        ->required();
    oracle->add_flag("--json", o.as_json, "one-line JSON record");
    oracle->add_flag("--fail-on-imperfect", o.fail_on_imperfect,
                     "exit 1 when imperfect");
    oracle->add_option("--max-size", o.max_size,
                       "largest vertex count the oracle will accept");

    auto* iso = app.add_subcommand(
        "iso", "isomorphism test via a maximum clique of the product");
    add_graphs(iso, 2, "two graphs of equal size (n*n <= 64)");
    iso->add_flag("--json", o.as_json, "one-line JSON record");
    iso->add_flag("--fail-on-noniso", o.fail_on_noniso,
                  "exit 1 when not isomorphic");

    auto* sweep = app.add_subcommand(
        "sweep", "classifier vs oracle over all class pairs up to a size");
    sweep->add_option("--max-n", o.max_n, "largest factor size (1..6; 6 is slow)")
        ->check(CLI::Range(1, 6));
    sweep->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
    sweep->add_flag("--json", o.as_json, "one-line JSON record");

    auto* catalog =
        app.add_subcommand("catalog", "list the named pattern graphs");

    auto* compl_cmd =
        app.add_subcommand("complement", "complement of a graph");
    add_graphs(compl_cmd, 1, "a graph expression or @file.g6");
    add_format(compl_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (product->parsed()) return run_product(o, true, out);
        if (tensor->parsed()) return run_product(o, false, out);
        if (cls->parsed()) return run_classify(o, out);
        if (oracle->parsed()) return run_oracle(o, out, err);
        if (iso->parsed()) return run_iso(o, out);
        if (sweep->parsed()) return run_sweep_cmd(o, out);
        if (catalog->parsed()) return run_catalog(out);
        if (compl_cmd->parsed()) return run_complement(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace wmp
