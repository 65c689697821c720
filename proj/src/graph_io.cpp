#include "dhspan/graph_io.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dhspan/errors.hpp"

namespace dhspan {

namespace {

// Parses every line into integer tokens, dropping comments and blanks.
std::vector<std::vector<long long>> numeric_lines(std::istream& in) {
    std::vector<std::vector<long long>> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> tokens;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw InputError("line " + std::to_string(lineno) + ": not an integer: " + tok);
            tokens.push_back(value);
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

}  // namespace

Graph read_graph_text(std::istream& in) {
    auto lines = numeric_lines(in);
    if (lines.empty()) throw InputError("empty graph input");
    if (lines[0].size() != 2 || lines[0][0] < 0 || lines[0][1] < 0) throw InputError("header must be `n m`");
    const auto n = static_cast<std::size_t>(lines[0][0]);
    const auto m = static_cast<std::size_t>(lines[0][1]);
    if (lines.size() - 1 != m)
        throw InputError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& e = lines[i];
        if (e.size() != 2 || e[0] < 0 || e[1] < 0) throw InputError("edge lines must be `u v`");
        edges.emplace_back(static_cast<std::uint32_t>(e[0]), static_cast<std::uint32_t>(e[1]));
    }
    return Graph::from_edges(n, edges);
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const Graph& g) {
    if (!g.contiguous()) {
        out << "# ids:";
        for (VertexId v : g.vertices()) out << ' ' << v;
        out << '\n';
    }
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, w] : g.edges()) out << g.index_of(u) << ' ' << g.index_of(w) << '\n';
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    write_graph_text(os, g);
    return os.str();
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON graph: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw InputError("JSON graph needs `vertices` and `edges`");
    try {
        GraphBuilder b;
        for (const auto& v : doc.at("vertices")) b.add_vertex(vid(v.get<std::uint32_t>()));
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("JSON edge must be a pair");
            if (!b.add_edge(vid(e[0].get<std::uint32_t>()), vid(e[1].get<std::uint32_t>())))
                throw InputError("parallel edge in JSON graph");
        }
        return b.build();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON graph: ") + e.what());
    }
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (VertexId v : g.vertices()) doc["vertices"].push_back(raw(v));
    doc["edges"] = nlohmann::json::array();
    for (auto [u, w] : g.edges()) doc["edges"].push_back({raw(u), raw(w)});
    return doc.dump();
}

}  // namespace dhspan
