#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dhspan/acceptance.hpp"
#include "dhspan/ehrenborg.hpp"
#include "dhspan/enumerator.hpp"
#include "dhspan/errors.hpp"
#include "dhspan/families.hpp"
#include "dhspan/graph_io.hpp"
#include "dhspan/recognition.hpp"

namespace dhspan::cli {

namespace {

using nlohmann::json;

struct Context {
    std::istream& in;
    std::ostream& out;
    bool json = false;
    std::uint64_t seed = 0;

    Graph read(const std::string& source) const {
        std::string text;
        if (source == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream f(source);
            if (!f) throw InputError("cannot open " + source);
            text.assign(std::istreambuf_iterator<char>(f), {});
        }
        return json ? parse_graph_json(text) : parse_graph_text(text);
    }

    void write(const Graph& g) const {
        if (json)
            out << graph_to_json(g) << '\n';
        else
            write_graph_text(out, g);
    }
};

std::uint32_t parse_count(const std::string& s) {
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(s, &used);
        if (used == s.size() && v <= 1000000) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError("expected a nonnegative integer, got '" + s + "'");
}

VertexId parse_vertex(const std::string& s) { return vid(parse_count(s)); }

std::vector<std::uint32_t> parse_counts(const std::vector<std::string>& args) {
    std::vector<std::uint32_t> out;
    for (const auto& a : args) out.push_back(parse_count(a));
    return out;
}

Graph family_graph(const std::string& name, const std::vector<std::string>& args) {
    auto arity = [&](std::size_t k) {
        if (args.size() != k)
            throw InputError(name + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
    };
    if (name == "cycle") return arity(1), cycle(parse_count(args[0]));
    if (name == "path") return arity(1), path(parse_count(args[0]));
    if (name == "complete") return arity(1), complete(parse_count(args[0]));
    if (name == "edgeless") return arity(1), edgeless(parse_count(args[0]));
    if (name == "star") return arity(1), star(parse_count(args[0]));
    if (name == "wheel") return arity(1), wheel(parse_count(args[0]));
    if (name == "superprism") return arity(1), superprism(parse_count(args[0]));
    if (name == "complete-bipartite") return arity(2), complete_bipartite(parse_count(args[0]), parse_count(args[1]));
    if (name == "multipartite") return complete_multipartite(parse_counts(args));
    if (name == "gem") return arity(0), gem();
    if (name == "house") return arity(0), house();
    if (name == "domino") return arity(0), domino();
    if (name == "ferrers") return ferrers_young(FerrersDiagram(parse_counts(args))).graph;
    if (name == "inversion") return arity(1), inversion_graph(Permutation::parse(args[0]));
    if (name == "threshold") {
        arity(1);
        std::vector<ThresholdStep> steps;
        for (char c : args[0]) {
            if (c == 'i')
                steps.push_back(ThresholdStep::Isolated);
            else if (c == 'd')
                steps.push_back(ThresholdStep::Dominating);
            else
                throw InputError("threshold steps are letters i (isolated) and d (dominating)");
        }
        return threshold_graph(steps);
    }
    throw InputError("unknown family '" + name + "'");
}

void print_enumerator(const Context& ctx, const Enumerator& e, const Graph& g, json* into) {
    const mpz_class trees = tree_count(g);
    if (into) {
        (*into)["factored"] = e.fully_linear();
        (*into)["pretty"] = e.pretty();
        (*into)["enumerator"] = e.serialize();
        (*into)["trees"] = trees.get_str();
        return;
    }
    ctx.out << "form " << (e.fully_linear() ? "factored" : "expanded") << '\n';
    ctx.out << "pretty " << e.pretty() << '\n';
    ctx.out << e.serialize();
    ctx.out << "trees " << trees << '\n';
}

int cmd_count(const Context& ctx, const std::string& source) {
    const Graph g = ctx.read(source);
    const mpz_class t = tree_count(g);
    if (ctx.json)
        ctx.out << json{{"trees", t.get_str()}}.dump() << '\n';
    else
        ctx.out << t << '\n';
    return 0;
}

int cmd_enumerate(const Context& ctx, const std::string& source, const EnumerationLimits& limits) {
    const Graph g = ctx.read(source);
    const Enumerator e = graph_enumerator(g, limits);
    const mpq_class ones = e.evaluate(Point::constant(g, 1));
    if (ones != mpq_class(tree_count(g))) throw InvariantViolation("enumerator at all-ones differs from tree count");
    if (ctx.json) {
        json j;
        print_enumerator(ctx, e, g, &j);
        ctx.out << j.dump() << '\n';
    } else {
        print_enumerator(ctx, e, g, nullptr);
    }
    return 0;
}

int cmd_recognize(const Context& ctx, const std::string& source) {
    const Graph g = ctx.read(source);
    json j;
    std::ostringstream text;

    if (g.empty()) throw InputError("empty graph");
    if (!is_connected(g)) {
        j["distance_hereditary"] = false;
        j["reason"] = "disconnected";
        text << "not distance-hereditary; disconnected\n";
    } else if (auto r = recognize_dh(g); std::holds_alternative<ConstructionSequence>(r)) {
        const auto& seq = std::get<ConstructionSequence>(r);
        if (replay(seq) != g) throw InvariantViolation("construction sequence does not rebuild the input");
        j["distance_hereditary"] = true;
        j["construction"] = seq.to_string();
        text << "distance-hereditary; construction:\n" << seq.to_string();
    } else {
        j["distance_hereditary"] = false;
        if (g.vertex_count() <= kForbiddenSearchLimit) {
            const auto w = find_forbidden(g);
            if (!w) throw InvariantViolation("elimination failed but no forbidden subgraph exists");
            j["witness"] = w->to_string();
            text << "not distance-hereditary; witness: " << w->to_string() << '\n';
        } else {
            j["reason"] = "elimination stuck";
            text << "not distance-hereditary; elimination stuck on "
                 << std::get<NotDistanceHereditary>(r).reduced.vertex_count() << " vertices\n";
        }
    }

    const auto c = is_cograph(g);
    if (const auto* tree = std::get_if<CoTree>(&c)) {
        j["cograph"] = true;
        j["cotree"] = tree->to_string();
        text << "cograph; cotree: " << tree->to_string() << '\n';
    } else {
        const auto& p = std::get<InducedP4>(c).path;
        std::ostringstream w;
        w << "P4(" << p[0] << ' ' << p[1] << ' ' << p[2] << ' ' << p[3] << ')';
        j["cograph"] = false;
        j["p4"] = w.str();
        text << "not a cograph; witness: " << w.str() << '\n';
    }

    const bool threshold = is_threshold(g);
    j["threshold"] = threshold;
    text << (threshold ? "threshold\n" : "not threshold\n");

    if (ctx.json)
        ctx.out << j.dump() << '\n';
    else
        ctx.out << text.str();
    return 0;
}

int cmd_compose(const Context& ctx, const std::vector<std::string>& a, const EnumerationLimits& limits) {
    if (a.size() != 4) throw InputError("compose takes GRAPH1 VERTEX1 GRAPH2 VERTEX2");
    if (a[0] == "-" && a[2] == "-") throw InputError("only one graph can come from standard input");
    const Graph g1 = ctx.read(a[0]);
    const Graph g2 = ctx.read(a[2]);
    const VertexId v1 = parse_vertex(a[1]);
    const VertexId v2 = parse_vertex(a[3]);
    const auto c = compose(g1, v1, graph_enumerator(g1, limits), g2, v2, graph_enumerator(g2, limits));
    if (ctx.json) {
        json j;
        j["graph"] = json::parse(graph_to_json(c.composition.graph));
        print_enumerator(ctx, c.enumerator, c.composition.graph, &j);
        ctx.out << j.dump() << '\n';
    } else {
        write_graph_text(ctx.out, c.composition.graph);
        print_enumerator(ctx, c.enumerator, c.composition.graph, nullptr);
    }
    return 0;
}

int cmd_family(const Context& ctx, const std::string& name, const std::vector<std::string>& args) {
    ctx.write(family_graph(name, args));
    return 0;
}

struct EhrenborgArgs {
    std::string graph;
    std::string point;
    SearchOptions search;
};

Point parse_point(const Graph& g, const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != g.vertex_count())
        throw InputError("--point needs one value per vertex (" + std::to_string(g.vertex_count()) + ")");
    Point p;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        mpq_class q;
        if (q.set_str(parts[i], 10) != 0) throw InputError("bad rational '" + parts[i] + "'");
        q.canonicalize();
        p.set(g.vertices()[i], q);
    }
    return p;
}

int cmd_ehrenborg(const Context& ctx, EhrenborgArgs a) {
    std::vector<EhrenborgReport> reports;
    if (a.graph.empty() && !a.point.empty()) a.graph = "-";
    if (!a.graph.empty()) {
        const Graph g = ctx.read(a.graph);
        const auto parts = bipartition(g);
        if (!parts) throw InputError("graph is not bipartite");
        reports.push_back(check_numeric(g, *parts));
        const Point p = a.point.empty() ? Point::constant(g, 1) : parse_point(g, a.point);
        reports.push_back(check_polynomial(g, *parts, p));
    } else {
        a.search.seed = ctx.seed;
        reports = search_counterexample(a.search);
    }
    const bool violated = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.holds; });
    if (ctx.json) {
        json j;
        j["seed"] = ctx.seed;
        j["reports"] = json::array();
        for (const auto& r : reports) {
            j["reports"].push_back({{"hash", r.to_line().substr(0, 16)},
                                    {"vertices", r.vertices},
                                    {"edges", r.edges},
                                    {"lhs", r.lhs.get_str()},
                                    {"rhs", r.rhs.get_str()},
                                    {"ratio", r.ratio ? json(r.ratio->get_str()) : json(nullptr)},
                                    {"holds", r.holds}});
        }
        ctx.out << j.dump() << '\n';
    } else {
        ctx.out << "seed " << ctx.seed << '\n';
        for (const auto& r : reports) ctx.out << r.to_line() << '\n';
    }
    if (violated) throw InvariantViolation("COUNTEREXAMPLE to Ehrenborg's conjecture found, see VIOLATED lines");
    return 0;
}

int cmd_selftest(const Context& ctx) {
    bool all = true;
    json j = json::array();
    run_acceptance(ctx.seed, [&](const CriterionResult& r) {
        all = all && r.passed;
        if (ctx.json)
            j.push_back({{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"seconds", r.seconds},
                         {"limit_seconds", r.limit_seconds},
                         {"detail", r.detail}});
        else
            ctx.out << r.to_line() << std::endl;
    });
    if (ctx.json)
        ctx.out << json{{"seed", ctx.seed}, {"passed", all}, {"criteria", j}}.dump() << '\n';
    else
        ctx.out << (all ? "ALL PASS" : "SOME FAILED") << '\n';
    return all ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spanning-tree degree enumerators, distance-hereditary graphs and Ehrenborg checks", "dhspan"};
    app.require_subcommand(1);
    Context ctx{in, out};
    app.add_flag("--json", ctx.json, "Read and write the JSON forms");
    app.add_option("--seed", ctx.seed, "Seed for randomized commands")->default_val(0);

    EnumerationLimits limits;
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--max-vertices", limits.max_vertices, "Brute-force vertex limit")->default_val(9);
        sub->add_option("--max-trees", limits.max_trees, "Brute-force tree limit past the vertex limit")
            ->default_val(1000000);
    };

    std::string source = "-";
    auto* count = app.add_subcommand("count", "Print the number of spanning trees");
    count->add_option("graph", source, "Graph file, - for standard input");

    auto* enumerate = app.add_subcommand("enumerate", "Print the degree enumerator and the tree count");
    enumerate->add_option("graph", source, "Graph file, - for standard input");
    add_limits(enumerate);

    auto* recognize = app.add_subcommand("recognize", "Distance-hereditary, cograph and threshold verdicts");
    recognize->add_option("graph", source, "Graph file, - for standard input");

    std::vector<std::string> compose_args;
    auto* composecmd = app.add_subcommand("compose", "Compose two marked graphs and their enumerators");
    composecmd->add_option("args", compose_args, "GRAPH1 VERTEX1 GRAPH2 VERTEX2")->required();
    add_limits(composecmd);

    std::string family_name;
    std::vector<std::string> family_args;
    auto* family = app.add_subcommand("family", "Print a generated graph");
    family->add_option("name", family_name,
                       "cycle|path|complete|edgeless|star|wheel|superprism|complete-bipartite|multipartite|"
                       "gem|house|domino|ferrers|inversion|threshold")
        ->required();
    family->add_option("args", family_args, "Family parameters");

    EhrenborgArgs eh;
    auto* ehrenborg = app.add_subcommand("ehrenborg", "Check one bipartite graph, or search random ones");
    ehrenborg->add_option("graph", eh.graph, "Graph file (omit to search), - for standard input");
    ehrenborg->add_option("--point", eh.point, "Comma-separated nonnegative rationals, one per vertex");
    ehrenborg->add_option("--trials", eh.search.trials)->default_val(100);
    ehrenborg->add_option("--min-vertices", eh.search.min_vertices)->default_val(2);
    ehrenborg->add_option("--max-vertices", eh.search.max_vertices)->default_val(8);
    ehrenborg->add_option("--density", eh.search.edge_density)->default_val(0.5);
    ehrenborg->add_option("--polynomial-max-vertices", eh.search.polynomial_max_vertices)->default_val(9);
    ehrenborg->add_option("--ferrers", eh.search.ferrers_max_vertices, "Also sweep Ferrers-Young graphs")
        ->default_val(0);
    ehrenborg->add_option("--top", eh.search.top_k, "Keep the k tightest reports (0: all)")->default_val(0);

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return 1;
    }

    try {
        if (count->parsed()) return cmd_count(ctx, source);
        if (enumerate->parsed()) return cmd_enumerate(ctx, source, limits);
        if (recognize->parsed()) return cmd_recognize(ctx, source);
        if (composecmd->parsed()) return cmd_compose(ctx, compose_args, limits);
        if (family->parsed()) return cmd_family(ctx, family_name, family_args);
        if (ehrenborg->parsed()) return cmd_ehrenborg(ctx, eh);
        if (selftest->parsed()) return cmd_selftest(ctx);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 1;
    } catch (const EnvelopeExceeded& e) {
        err << "envelope exceeded: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        err << "invariant failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}

}  // namespace dhspan::cli
