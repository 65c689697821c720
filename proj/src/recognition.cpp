#include "dhspan/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "dhspan/errors.hpp"
#include "dhspan/families.hpp"

namespace dhspan {

namespace {

using AdjMap = std::map<VertexId, std::set<VertexId>>;

AdjMap adjacency_map(const Graph& g) {
    AdjMap adj;
    for (VertexId v : g.vertices()) {
        auto nb = g.neighbors(v);
        adj.emplace(v, std::set<VertexId>(nb.begin(), nb.end()));
    }
    return adj;
}

void erase_vertex(AdjMap& adj, VertexId v) {
    for (VertexId w : adj.at(v)) adj.at(w).erase(v);
    adj.erase(v);
}

Graph graph_of(const AdjMap& adj) {
    GraphBuilder b;
    for (const auto& [v, nb] : adj) b.add_vertex(v);
    for (const auto& [v, nb] : adj)
        for (VertexId w : nb)
            if (v < w) b.add_edge(v, w);
    return b.build();
}

// Lowest-id twin pair among vertices sharing `key(v)`: returns (keep, drop).
template <typename KeyFn>
std::optional<std::pair<VertexId, VertexId>> lowest_twins(const AdjMap& adj, KeyFn key) {
    std::map<std::set<VertexId>, std::vector<VertexId>> classes;
    for (const auto& [v, nb] : adj) classes[key(v, nb)].push_back(v);
    std::optional<std::pair<VertexId, VertexId>> best;
    for (const auto& [k, members] : classes) {
        if (members.size() < 2) continue;
        // members are in ascending id order
        if (!best || members[0] < best->first) best = std::make_pair(members[0], members[1]);
    }
    return best;
}

struct DenseGraph {
    std::size_t n = 0;
    std::vector<std::vector<char>> adj;

    explicit DenseGraph(const Graph& g) : n(g.vertex_count()), adj(n, std::vector<char>(n, 0)) {
        for (std::size_t i = 0; i < n; ++i)
            for (VertexId w : g.neighbors_at(i)) adj[i][g.index_of(w)] = 1;
    }
};

const Graph& pattern_graph(ForbiddenKind k) {
    static const Graph gem_g = gem();
    static const Graph house_g = house();
    static const Graph domino_g = domino();
    switch (k) {
        case ForbiddenKind::Gem: return gem_g;
        case ForbiddenKind::House: return house_g;
        case ForbiddenKind::Domino: return domino_g;
        case ForbiddenKind::LongCycle: break;
    }
    throw InvariantViolation("long cycles have no fixed pattern");
}

std::vector<std::size_t> sorted_degrees(const std::vector<std::vector<char>>& adj, const std::vector<std::size_t>& sub) {
    std::vector<std::size_t> deg;
    for (std::size_t a : sub) {
        std::size_t d = 0;
        for (std::size_t b : sub) d += adj[a][b] ? 1 : 0;
        deg.push_back(d);
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

// Ordering of `sub` under which its induced subgraph equals `pattern`.
std::optional<std::vector<std::size_t>> match_pattern(const DenseGraph& g, std::vector<std::size_t> sub,
                                                      const DenseGraph& pattern) {
    std::sort(sub.begin(), sub.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < sub.size() && ok; ++i)
            for (std::size_t j = i + 1; j < sub.size() && ok; ++j)
                ok = g.adj[sub[i]][sub[j]] == pattern.adj[i][j];
        if (ok) return sub;
    } while (std::next_permutation(sub.begin(), sub.end()));
    return std::nullopt;
}

// Induced cycle of length >= 5 with smallest vertex `start`; path holds indices.
bool extend_induced_path(const DenseGraph& g, std::vector<std::size_t>& path, std::vector<char>& on_path) {
    const std::size_t start = path.front();
    const std::size_t last = path.back();
    for (std::size_t v = start + 1; v < g.n; ++v) {
        if (on_path[v] || !g.adj[last][v]) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adj[path[i]][v];
        if (chord) continue;
        if (path.size() >= 2 && g.adj[start][v]) {
            if (path.size() + 1 >= 5) {
                path.push_back(v);
                return true;
            }
            continue;
        }
        path.push_back(v);
        on_path[v] = 1;
        if (extend_induced_path(g, path, on_path)) return true;
        on_path[v] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::string ConstructionSequence::to_string() const {
    std::ostringstream os;
    for (const auto& s : steps) {
        switch (s.kind) {
            case StepKind::Seed: os << "seed " << s.vertex; break;
            case StepKind::Pendant: os << "pendant " << s.vertex << ' ' << s.anchor; break;
            case StepKind::FalseTwin: os << "ftwin " << s.vertex << ' ' << s.anchor; break;
            case StepKind::TrueTwin: os << "ttwin " << s.vertex << ' ' << s.anchor; break;
        }
        os << '\n';
    }
    return os.str();
}

ConstructionSequence ConstructionSequence::parse(const std::string& text) {
    ConstructionSequence seq;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        std::uint32_t v = 0, a = 0;
        ConstructionStep step{};
        if (word == "seed") {
            if (!(ls >> v)) throw InputError("bad seed line: " + line);
            step = {StepKind::Seed, vid(v), vid(v)};
        } else {
            StepKind kind;
            if (word == "pendant")
                kind = StepKind::Pendant;
            else if (word == "ftwin")
                kind = StepKind::FalseTwin;
            else if (word == "ttwin")
                kind = StepKind::TrueTwin;
            else
                throw InputError("unknown construction step: " + word);
            if (!(ls >> v >> a)) throw InputError("bad construction line: " + line);
            step = {kind, vid(v), vid(a)};
        }
        std::string extra;
        if (ls >> extra) throw InputError("trailing text in construction line: " + line);
        seq.steps.push_back(step);
    }
    return seq;
}

Graph replay(const ConstructionSequence& seq) {
    if (seq.steps.empty() || seq.steps.front().kind != StepKind::Seed)
        throw InputError("construction must start with a seed");
    GraphBuilder b;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& s = seq.steps[i];
        if (s.kind == StepKind::Seed) {
            if (i != 0) throw InputError("seed step after the start of a construction");
            b.add_vertex(s.vertex);
            continue;
        }
        if (!b.contains(s.anchor)) {
            std::ostringstream os;
            os << "construction step references missing vertex " << s.anchor;
            throw InputError(os.str());
        }
        std::vector<VertexId> nb;
        if (s.kind != StepKind::Pendant) nb.assign(b.neighbors(s.anchor).begin(), b.neighbors(s.anchor).end());
        b.add_vertex(s.vertex);
        if (s.kind == StepKind::Pendant || s.kind == StepKind::TrueTwin) b.add_edge(s.vertex, s.anchor);
        for (VertexId w : nb) b.add_edge(s.vertex, w);
    }
    return b.build();
}

DhResult recognize_dh(const Graph& g) {
    if (g.empty()) throw InputError("distance-heredity needs a nonempty graph");
    if (!is_connected(g)) throw InputError("distance-heredity is defined for connected graphs");

    AdjMap adj = adjacency_map(g);
    std::vector<ConstructionStep> eliminated;
    while (adj.size() > 1) {
        auto pendant = std::find_if(adj.begin(), adj.end(), [](const auto& e) { return e.second.size() == 1; });
        if (pendant != adj.end()) {
            VertexId v = pendant->first;
            eliminated.push_back({StepKind::Pendant, v, *pendant->second.begin()});
            erase_vertex(adj, v);
            continue;
        }
        auto open = lowest_twins(adj, [](VertexId, const std::set<VertexId>& nb) { return nb; });
        if (open) {
            eliminated.push_back({StepKind::FalseTwin, open->second, open->first});
            erase_vertex(adj, open->second);
            continue;
        }
        auto closed = lowest_twins(adj, [](VertexId v, const std::set<VertexId>& nb) {
            auto c = nb;
            c.insert(v);
            return c;
        });
        if (closed) {
            eliminated.push_back({StepKind::TrueTwin, closed->second, closed->first});
            erase_vertex(adj, closed->second);
            continue;
        }
        return NotDistanceHereditary{graph_of(adj)};
    }

    ConstructionSequence seq;
    VertexId root = adj.begin()->first;
    seq.steps.push_back({StepKind::Seed, root, root});
    seq.steps.insert(seq.steps.end(), eliminated.rbegin(), eliminated.rend());
    return seq;
}

bool is_distance_hereditary(const Graph& g) { return std::holds_alternative<ConstructionSequence>(recognize_dh(g)); }

std::string kind_name(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::LongCycle: return "cycle";
        case ForbiddenKind::Gem: return "gem";
        case ForbiddenKind::House: return "house";
        case ForbiddenKind::Domino: return "domino";
    }
    return "?";
}

std::string ForbiddenWitness::to_string() const {
    std::ostringstream os;
    os << kind_name(kind) << '(';
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? " " : "") << vertices[i];
    os << ')';
    return os.str();
}

bool verify_witness(const Graph& g, const ForbiddenWitness& w) {
    std::set<VertexId> distinct(w.vertices.begin(), w.vertices.end());
    if (distinct.size() != w.vertices.size()) return false;
    for (VertexId v : w.vertices)
        if (!g.contains(v)) return false;
    const std::size_t k = w.vertices.size();
    if (w.kind == ForbiddenKind::LongCycle) {
        if (k < 5) return false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if (g.adjacent(w.vertices[i], w.vertices[j]) != consecutive) return false;
            }
        return true;
    }
    const Graph& pattern = pattern_graph(w.kind);
    if (k != pattern.vertex_count()) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.adjacent(w.vertices[i], w.vertices[j]) != pattern.adjacent(vid(i), vid(j))) return false;
    return true;
}

std::optional<ForbiddenWitness> find_forbidden(const Graph& g) {
    if (g.vertex_count() > kForbiddenSearchLimit)
        throw EnvelopeExceeded("forbidden-subgraph search is limited to " + std::to_string(kForbiddenSearchLimit) +
                               " vertices");
    const DenseGraph dense(g);
    auto to_ids = [&](const std::vector<std::size_t>& idx) {
        std::vector<VertexId> out;
        for (std::size_t i : idx) out.push_back(g.vertices()[i]);
        return out;
    };
    auto checked = [&](ForbiddenWitness w) {
        if (!verify_witness(g, w)) throw InvariantViolation("forbidden-subgraph witness failed verification");
        return w;
    };

    for (std::size_t s = 0; s < dense.n; ++s) {
        std::vector<std::size_t> path{s};
        std::vector<char> on_path(dense.n, 0);
        on_path[s] = 1;
        if (extend_induced_path(dense, path, on_path)) return checked({ForbiddenKind::LongCycle, to_ids(path)});
    }

    for (ForbiddenKind kind : {ForbiddenKind::Gem, ForbiddenKind::House, ForbiddenKind::Domino}) {
        const DenseGraph pattern(pattern_graph(kind));
        std::vector<std::size_t> all(pattern.n);
        for (std::size_t i = 0; i < pattern.n; ++i) all[i] = i;
        const auto want = sorted_degrees(pattern.adj, all);
        std::vector<std::size_t> sub;
        std::optional<std::vector<std::size_t>> found;
        std::function<void(std::size_t)> choose = [&](std::size_t from) {
            if (found) return;
            if (sub.size() == pattern.n) {
                if (sorted_degrees(dense.adj, sub) == want) found = match_pattern(dense, sub, pattern);
                return;
            }
            for (std::size_t v = from; v < dense.n && !found; ++v) {
                sub.push_back(v);
                choose(v + 1);
                sub.pop_back();
            }
        };
        choose(0);
        if (found) return checked({kind, to_ids(*found)});
    }
    return std::nullopt;
}

bool four_point_check(const Graph& g) {
    if (!is_connected(g)) throw InputError("four-point condition needs a connected graph");
    const auto d = distance_matrix(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t e = c + 1; e < n; ++e) {
                    int s1 = d[a][b] + d[c][e];
                    int s2 = d[a][c] + d[b][e];
                    int s3 = d[a][e] + d[b][c];
                    if (s1 != s2 && s1 != s3 && s2 != s3) return false;
                }
    return true;
}

namespace {

class CographDecomposer {
public:
    explicit CographDecomposer(const Graph& g) : g_(g), dense_(g) {}

    CographResult run() {
        CoTree tree;
        if (g_.empty()) return tree;
        std::vector<std::size_t> all(dense_.n);
        for (std::size_t i = 0; i < dense_.n; ++i) all[i] = i;
        auto root = build(all, tree);
        if (!root) return *witness_;
        tree.root = *root;
        return tree;
    }

private:
    std::vector<std::vector<std::size_t>> components(const std::vector<std::size_t>& set, bool complement) const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<char> seen(set.size(), 0);
        for (std::size_t s = 0; s < set.size(); ++s) {
            if (seen[s]) continue;
            std::vector<std::size_t> comp;
            std::vector<std::size_t> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                std::size_t i = stack.back();
                stack.pop_back();
                comp.push_back(set[i]);
                for (std::size_t j = 0; j < set.size(); ++j) {
                    if (seen[j] || i == j) continue;
                    bool edge = dense_.adj[set[i]][set[j]] != 0;
                    if (edge != complement) {
                        seen[j] = 1;
                        stack.push_back(j);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    std::optional<std::size_t> build(const std::vector<std::size_t>& set, CoTree& tree) {
        if (set.size() == 1) {
            tree.nodes.push_back({CoTree::Kind::Leaf, g_.vertices()[set[0]], {}});
            return tree.nodes.size() - 1;
        }
        CoTree::Kind kind = CoTree::Kind::Union;
        auto parts = components(set, false);
        if (parts.size() == 1) {
            kind = CoTree::Kind::Join;
            parts = components(set, true);
        }
        if (parts.size() == 1) {
            witness_ = find_p4(set);
            return std::nullopt;
        }
        std::vector<std::size_t> children;
        for (const auto& part : parts) {
            auto child = build(part, tree);
            if (!child) return std::nullopt;
            children.push_back(*child);
        }
        tree.nodes.push_back({kind, VertexId{}, std::move(children)});
        return tree.nodes.size() - 1;
    }

    // Both G[set] and its complement are connected, so an induced P4 exists.
    InducedP4 find_p4(const std::vector<std::size_t>& set) const {
        const auto& A = dense_.adj;
        for (std::size_t b : set)
            for (std::size_t c : set) {
                if (!A[b][c]) continue;
                for (std::size_t a : set) {
                    if (a == c || !A[a][b] || A[a][c]) continue;
                    for (std::size_t d : set) {
                        if (d == b || d == a || !A[c][d] || A[b][d] || A[a][d]) continue;
                        auto id = [&](std::size_t i) { return g_.vertices()[i]; };
                        return InducedP4{{id(a), id(b), id(c), id(d)}};
                    }
                }
            }
        throw InvariantViolation("prime subgraph without an induced P4");
    }

    const Graph& g_;
    DenseGraph dense_;
    std::optional<InducedP4> witness_;
};

}  // namespace

CographResult is_cograph(const Graph& g) {
    auto result = CographDecomposer(g).run();
    if (auto* p4 = std::get_if<InducedP4>(&result); p4 && !verify_p4(g, *p4))
        throw InvariantViolation("P4 witness failed verification");
    return result;
}

bool cograph(const Graph& g) { return std::holds_alternative<CoTree>(is_cograph(g)); }

bool verify_p4(const Graph& g, const InducedP4& p) {
    const auto& v = p.path;
    std::set<VertexId> distinct(v.begin(), v.end());
    if (distinct.size() != 4) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (g.adjacent(v[i], v[j]) != (j == i + 1)) return false;
    return true;
}

Graph CoTree::realize() const {
    GraphBuilder b;
    if (nodes.empty()) return b.build();
    std::function<std::vector<VertexId>(std::size_t)> walk = [&](std::size_t idx) {
        const Node& node = nodes.at(idx);
        if (node.kind == Kind::Leaf) {
            b.add_vertex(node.vertex);
            return std::vector<VertexId>{node.vertex};
        }
        std::vector<std::vector<VertexId>> parts;
        for (std::size_t c : node.children) parts.push_back(walk(c));
        std::vector<VertexId> all;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (node.kind == Kind::Join)
                for (std::size_t j = 0; j < i; ++j)
                    for (VertexId u : parts[i])
                        for (VertexId w : parts[j]) b.add_edge(u, w);
            all.insert(all.end(), parts[i].begin(), parts[i].end());
        }
        return all;
    };
    walk(root);
    return b.build();
}

std::string CoTree::to_string() const {
    if (nodes.empty()) return "empty";
    std::ostringstream os;
    std::function<void(std::size_t)> walk = [&](std::size_t idx) {
        const Node& node = nodes.at(idx);
        if (node.kind == Kind::Leaf) {
            os << node.vertex;
            return;
        }
        os << (node.kind == Kind::Union ? "union(" : "join(");
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i) os << ' ';
            walk(node.children[i]);
        }
        os << ')';
    };
    walk(root);
    return os.str();
}

bool is_threshold(const Graph& g) {
    AdjMap adj = adjacency_map(g);
    while (!adj.empty()) {
        const std::size_t n = adj.size();
        auto it = std::find_if(adj.begin(), adj.end(), [n](const auto& e) {
            return e.second.empty() || e.second.size() == n - 1;
        });
        if (it == adj.end()) return false;
        erase_vertex(adj, it->first);
    }
    return true;
}

}  // namespace dhspan
