#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dhspan/graph.hpp"

namespace dhspan {

// ---- construction calculus: pendants and twins from a single vertex ----

enum class StepKind { Seed, Pendant, FalseTwin, TrueTwin };

struct ConstructionStep {
    StepKind kind;
    VertexId vertex;  // the vertex this step creates
    VertexId anchor;  // attach point (Pendant) or the original (twins); unused for Seed

    friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

struct ConstructionSequence {
    std::vector<ConstructionStep> steps;

    /// One line per step: `seed v`, `pendant v attach`, `ftwin v of`, `ttwin v of`.
    std::string to_string() const;
    static ConstructionSequence parse(const std::string& text);

    friend bool operator==(const ConstructionSequence&, const ConstructionSequence&) = default;
};

/// Rebuilds the graph a sequence describes, using its vertex ids verbatim.
/// Throws InputError when a step references a missing vertex.
Graph replay(const ConstructionSequence& seq);

/// Failure of the elimination: no pendant vertex and no twin pair left.
struct NotDistanceHereditary {
    Graph reduced;
};

using DhResult = std::variant<ConstructionSequence, NotDistanceHereditary>;

/// Pendant-then-false-twin-then-true-twin elimination, lowest ids first.
/// The returned sequence is the reverse of the elimination. Throws
/// InputError on disconnected input.
DhResult recognize_dh(const Graph& g);
bool is_distance_hereditary(const Graph& g);

// ---- forbidden induced subgraphs ----

enum class ForbiddenKind { LongCycle, Gem, House, Domino };

struct ForbiddenWitness {
    ForbiddenKind kind;
    /// LongCycle: cycle order. Others: vertex i plays the role of vertex i in
    /// families' gem()/house()/domino().
    std::vector<VertexId> vertices;

    std::string to_string() const;
};

std::string kind_name(ForbiddenKind k);

inline constexpr std::size_t kForbiddenSearchLimit = 12;

/// Exhaustive search, n <= 12 (EnvelopeExceeded above). Every witness is
/// re-verified as an induced copy before it is returned.
std::optional<ForbiddenWitness> find_forbidden(const Graph& g);
/// True iff the witness's induced subgraph is exactly its pattern.
bool verify_witness(const Graph& g, const ForbiddenWitness& w);

// ---- four-point condition ----

/// For all 4-sets, at least two of the three pairwise distance sums agree.
/// Throws InputError on disconnected input.
bool four_point_check(const Graph& g);

// ---- cographs ----

struct CoTree {
    enum class Kind { Leaf, Union, Join };
    struct Node {
        Kind kind;
        VertexId vertex{};             // leaves only
        std::vector<std::size_t> children;
    };
    std::vector<Node> nodes;
    std::size_t root = 0;

    /// Graph the cotree denotes.
    Graph realize() const;
    std::string to_string() const;
};

struct InducedP4 {
    std::array<VertexId, 4> path;  // a-b-c-d
};

using CographResult = std::variant<CoTree, InducedP4>;

CographResult is_cograph(const Graph& g);
bool cograph(const Graph& g);
bool verify_p4(const Graph& g, const InducedP4& p);

/// Repeated removal of an isolated or dominating vertex empties the graph.
bool is_threshold(const Graph& g);

}  // namespace dhspan
