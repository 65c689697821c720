#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace dhspan {

/// Stable vertex label. Ids are never recycled inside one derivation, so an
/// enumerator variable x_v keeps meaning the same vertex through surgery.
enum class VertexId : std::uint32_t {};

constexpr VertexId vid(std::uint32_t raw) { return VertexId{raw}; }
constexpr std::uint32_t raw(VertexId v) { return static_cast<std::uint32_t>(v); }

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << raw(v); }

using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph over arbitrary (not necessarily
/// contiguous) vertex ids. Adjacency is kept as sorted neighbor vectors.
/// Build one through GraphBuilder or the surgery functions below.
class Graph {
public:
    Graph() = default;

    /// Contiguous ids 0..n-1. Throws InputError on loops, duplicates or
    /// out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return ids_.empty(); }

    /// Sorted ascending.
    std::span<const VertexId> vertices() const { return ids_; }
    bool contains(VertexId v) const;

    /// Position of v in vertices(); throws InputError for unknown vertices.
    std::size_t index_of(VertexId v) const;

    /// Sorted neighbor list; throws InputError for unknown vertices.
    std::span<const VertexId> neighbors(VertexId v) const;
    std::span<const VertexId> neighbors_at(std::size_t index) const { return adj_[index]; }
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    /// Every edge once, as (smaller, larger), lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Smallest id that has never been handed out in this graph's history.
    VertexId next_id() const { return vid(next_id_); }

    /// True when the ids are exactly 0..n-1.
    bool contiguous() const;

    /// Same vertex ids and same edges. next_id() is history, not structure.
    friend bool operator==(const Graph& a, const Graph& b) { return a.ids_ == b.ids_ && a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;

    std::vector<VertexId> ids_;
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
    std::uint32_t next_id_ = 0;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(const Graph& g);

    /// Adds a vertex with a fresh id.
    VertexId add_vertex();
    /// Adds a vertex with the given id; throws InputError if it exists.
    void add_vertex(VertexId v);
    /// Returns false if the edge already existed. Throws on loops and unknown endpoints.
    bool add_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);
    bool contains(VertexId v) const { return adj_.contains(v); }
    const std::set<VertexId>& neighbors(VertexId v) const;
    /// Raises the id watermark so ids below `id` are never handed out.
    void reserve_ids(std::uint32_t id);

    Graph build() const;

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    std::uint32_t next_id_ = 0;
};

/// Two-colouring of a bipartite graph.
struct BipartitionCert {
    std::vector<VertexId> part1;
    std::vector<VertexId> part2;
};

/// Graph plus the one vertex a surgery step added.
struct Extended {
    Graph graph;
    VertexId added;
};

struct Composition {
    Graph graph;
    /// Old id in the second operand -> id in the composed graph.
    std::map<VertexId, VertexId> relabel;
};

struct BlowUp {
    Graph graph;
    /// Vertex of the blown-up graph -> the vertex of the input it copies.
    std::map<VertexId, VertexId> origin;
};

// Neighborhood N_G(v), excluding v.
std::vector<VertexId> neighborhood(const Graph& g, VertexId v);

Extended add_pendant(const Graph& g, VertexId attach);

/// New twin of v: false twin (same open neighborhood) when !with_edge,
/// true twin (same closed neighborhood) when with_edge.
Extended duplicate(const Graph& g, VertexId v, bool with_edge);

/// Extension: a new apex adjacent to every vertex.
Extended cone(const Graph& g);

/// Disjoint union of g1 and g2 minus the marked vertices, plus every edge
/// between N_{g1}(v1) and N_{g2}(v2). g2's ids are shifted by g1.next_id().
Composition compose_graphs(const Graph& g1, VertexId v1, const Graph& g2, VertexId v2);

/// Replace each vertex v by z[v] pairwise non-adjacent copies; the first
/// copy keeps v's id. Throws InputError for missing or non-positive z.
BlowUp blow_up(const Graph& g, const std::map<VertexId, std::int64_t>& z);

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
Graph relabeled(const Graph& g, const std::map<VertexId, VertexId>& map);

bool is_connected(const Graph& g);
std::optional<BipartitionCert> bipartition(const Graph& g);
/// Throws InputError unless cert is a proper 2-colouring of g.
void validate_bipartition(const Graph& g, const BipartitionCert& cert);

/// All-pairs BFS distances by vertex index; -1 for unreachable.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// FNV-1a over the edge list; stable across runs and platforms.
std::uint64_t graph_hash(const Graph& g);

}  // namespace dhspan

template <>
struct std::hash<dhspan::VertexId> {
    std::size_t operator()(dhspan::VertexId v) const noexcept { return std::hash<std::uint32_t>{}(dhspan::raw(v)); }
};
