#include "dhspan/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>

#include "dhspan/errors.hpp"

namespace dhspan {

namespace {

[[noreturn]] void unknown_vertex(VertexId v) {
    std::ostringstream os;
    os << "unknown vertex " << v;
    throw InputError(os.str());
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_vertex(vid(static_cast<std::uint32_t>(i)));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InputError("edge endpoint out of range");
        if (!b.add_edge(vid(u), vid(v))) throw InputError("parallel edge " + std::to_string(u) + " " + std::to_string(v));
    }
    return b.build();
}

bool Graph::contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::size_t Graph::index_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) unknown_vertex(v);
    return static_cast<std::size_t>(it - ids_.begin());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const { return adj_[index_of(v)]; }

bool Graph::adjacent(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (VertexId w : adj_[i])
            if (ids_[i] < w) out.emplace_back(ids_[i], w);
    return out;
}

bool Graph::contiguous() const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (raw(ids_[i]) != i) return false;
    return true;
}

GraphBuilder::GraphBuilder(const Graph& g) : next_id_(g.next_id_) {
    for (std::size_t i = 0; i < g.ids_.size(); ++i)
        adj_.emplace(g.ids_[i], std::set<VertexId>(g.adj_[i].begin(), g.adj_[i].end()));
}

VertexId GraphBuilder::add_vertex() {
    VertexId v = vid(next_id_);
    add_vertex(v);
    return v;
}

void GraphBuilder::add_vertex(VertexId v) {
    if (!adj_.emplace(v, std::set<VertexId>{}).second) {
        std::ostringstream os;
        os << "duplicate vertex " << v;
        throw InputError(os.str());
    }
    next_id_ = std::max(next_id_, raw(v) + 1);
}

bool GraphBuilder::add_edge(VertexId u, VertexId v) {
    if (u == v) {
        std::ostringstream os;
        os << "self-loop at " << u;
        throw InputError(os.str());
    }
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end()) unknown_vertex(u);
    if (iv == adj_.end()) unknown_vertex(v);
    bool fresh = iu->second.insert(v).second;
    iv->second.insert(u);
    return fresh;
}

void GraphBuilder::remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) unknown_vertex(v);
    for (VertexId w : it->second) adj_.at(w).erase(v);
    adj_.erase(it);
}

const std::set<VertexId>& GraphBuilder::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) unknown_vertex(v);
    return it->second;
}

void GraphBuilder::reserve_ids(std::uint32_t id) { next_id_ = std::max(next_id_, id); }

Graph GraphBuilder::build() const {
    Graph g;
    g.ids_.reserve(adj_.size());
    g.adj_.reserve(adj_.size());
    std::size_t degree_sum = 0;
    for (const auto& [v, nb] : adj_) {
        g.ids_.push_back(v);
        g.adj_.emplace_back(nb.begin(), nb.end());
        degree_sum += nb.size();
    }
    g.edge_count_ = degree_sum / 2;
    g.next_id_ = next_id_;
    return g;
}

std::vector<VertexId> neighborhood(const Graph& g, VertexId v) {
    auto nb = g.neighbors(v);
    return {nb.begin(), nb.end()};
}

Extended add_pendant(const Graph& g, VertexId attach) {
    if (!g.contains(attach)) unknown_vertex(attach);
    GraphBuilder b(g);
    VertexId fresh = b.add_vertex();
    b.add_edge(fresh, attach);
    return {b.build(), fresh};
}

Extended duplicate(const Graph& g, VertexId v, bool with_edge) {
    auto nb = g.neighbors(v);
    GraphBuilder b(g);
    VertexId twin = b.add_vertex();
    for (VertexId w : nb) b.add_edge(twin, w);
    if (with_edge) b.add_edge(twin, v);
    return {b.build(), twin};
}

Extended cone(const Graph& g) {
    GraphBuilder b(g);
    VertexId apex = b.add_vertex();
    for (VertexId w : g.vertices()) b.add_edge(apex, w);
    return {b.build(), apex};
}

Composition compose_graphs(const Graph& g1, VertexId v1, const Graph& g2, VertexId v2) {
    auto n1 = g1.neighbors(v1);
    auto n2 = g2.neighbors(v2);
    const std::uint32_t offset = raw(g1.next_id());

    Composition out;
    GraphBuilder b(g1);
    b.remove_vertex(v1);
    for (VertexId u : g2.vertices()) {
        VertexId shifted = vid(raw(u) + offset);
        out.relabel.emplace(u, shifted);
        if (u != v2) b.add_vertex(shifted);
    }
    for (auto [u, w] : g2.edges())
        if (u != v2 && w != v2) b.add_edge(out.relabel.at(u), out.relabel.at(w));
    for (VertexId a : n1)
        for (VertexId c : n2) b.add_edge(a, out.relabel.at(c));
    b.reserve_ids(offset + raw(g2.next_id()));
    out.graph = b.build();
    return out;
}

BlowUp blow_up(const Graph& g, const std::map<VertexId, std::int64_t>& z) {
    for (VertexId v : g.vertices()) {
        auto it = z.find(v);
        if (it == z.end()) {
            std::ostringstream os;
            os << "missing multiplicity for vertex " << v;
            throw InputError(os.str());
        }
        if (it->second <= 0) throw InputError("multiplicities must be positive");
    }

    BlowUp out;
    GraphBuilder b(g);
    std::map<VertexId, std::vector<VertexId>> copies;
    for (VertexId v : g.vertices()) {
        copies[v].push_back(v);
        out.origin.emplace(v, v);
    }
    for (VertexId v : g.vertices()) {
        for (std::int64_t k = 1; k < z.at(v); ++k) {
            VertexId c = b.add_vertex();
            copies[v].push_back(c);
            out.origin.emplace(c, v);
        }
    }
    for (auto [u, w] : g.edges())
        for (VertexId cu : copies[u])
            for (VertexId cw : copies[w]) b.add_edge(cu, cw);
    out.graph = b.build();
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
    GraphBuilder b;
    for (VertexId v : keep) {
        if (!g.contains(v)) unknown_vertex(v);
        b.add_vertex(v);
    }
    for (VertexId v : keep)
        for (VertexId w : g.neighbors(v))
            if (v < w && b.contains(w)) b.add_edge(v, w);
    b.reserve_ids(raw(g.next_id()));
    return b.build();
}

Graph relabeled(const Graph& g, const std::map<VertexId, VertexId>& map) {
    auto image = [&](VertexId v) {
        auto it = map.find(v);
        if (it == map.end()) unknown_vertex(v);
        return it->second;
    };
    GraphBuilder b;
    for (VertexId v : g.vertices()) b.add_vertex(image(v));
    for (auto [u, w] : g.edges()) b.add_edge(image(u), image(w));
    return b.build();
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (VertexId w : g.neighbors_at(i)) adj[i].push_back(g.index_of(w));
    for (std::size_t s = 0; s < n; ++s) {
        auto& d = dist[s];
        std::queue<std::size_t> q;
        d[s] = 0;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t w : adj[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors_at(u)) {
            std::size_t j = g.index_of(w);
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == g.vertex_count();
}

std::optional<BipartitionCert> bipartition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors_at(u)) {
                std::size_t j = g.index_of(w);
                if (colour[j] < 0) {
                    colour[j] = 1 - colour[u];
                    stack.push_back(j);
                } else if (colour[j] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    BipartitionCert cert;
    for (std::size_t i = 0; i < n; ++i) (colour[i] == 0 ? cert.part1 : cert.part2).push_back(g.vertices()[i]);
    return cert;
}

void validate_bipartition(const Graph& g, const BipartitionCert& cert) {
    std::map<VertexId, int> side;
    for (VertexId v : cert.part1)
        if (!side.emplace(v, 0).second) throw InputError("bipartition repeats a vertex");
    for (VertexId v : cert.part2)
        if (!side.emplace(v, 1).second) throw InputError("bipartition parts overlap");
    if (side.size() != g.vertex_count()) throw InputError("bipartition does not cover the vertex set");
    for (auto& [v, s] : side)
        if (!g.contains(v)) throw InputError("bipartition names a vertex outside the graph");
    for (auto [u, w] : g.edges())
        if (side.at(u) == side.at(w)) throw InputError("bipartition has an edge inside a part");
}

std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint32_t x) {
        for (int i = 0; i < 4; ++i) {
            h ^= (x >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint32_t>(g.vertex_count()));
    for (VertexId v : g.vertices()) mix(raw(v));
    for (auto [u, w] : g.edges()) {
        mix(raw(u));
        mix(raw(w));
    }
    return h;
}

}  // namespace dhspan
