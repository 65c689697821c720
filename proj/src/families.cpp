#include "dhspan/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "dhspan/errors.hpp"

namespace dhspan {

namespace {

GraphBuilder with_vertices(std::uint32_t n, std::uint32_t first = 0) {
    GraphBuilder b;
    for (std::uint32_t i = 0; i < n; ++i) b.add_vertex(vid(first + i));
    return b;
}

Graph from_pairs(std::uint32_t n, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> list(edges);
    return Graph::from_edges(n, list);
}

}  // namespace

FerrersDiagram::FerrersDiagram(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("Ferrers diagram needs at least one row");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw InputError("Ferrers diagram parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("Ferrers diagram parts must be weakly decreasing");
    }
}

std::uint32_t FerrersDiagram::cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

Permutation::Permutation(std::vector<std::uint32_t> values) : values_(std::move(values)) {
    std::vector<char> seen(values_.size() + 1, 0);
    for (std::uint32_t v : values_) {
        if (v == 0 || v > values_.size() || seen[v]) throw InputError("not a permutation of 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1U);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<std::uint32_t> values;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                values.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            } catch (const std::exception&) {
                throw InputError("bad permutation entry: " + tok);
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw InputError("bad permutation digit in: " + text);
            values.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    }
    return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    bool wide = values_.size() > 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (wide && i > 0) os << ',';
        os << values_[i];
    }
    return os.str();
}

Graph cycle(std::uint32_t n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    auto b = with_vertices(n);
    for (std::uint32_t i = 0; i < n; ++i) b.add_edge(vid(i), vid((i + 1) % n));
    return b.build();
}

Graph path(std::uint32_t n) {
    if (n < 1) throw InputError("path needs n >= 1");
    auto b = with_vertices(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) b.add_edge(vid(i), vid(i + 1));
    return b.build();
}

Graph complete(std::uint32_t n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    auto b = with_vertices(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) b.add_edge(vid(i), vid(j));
    return b.build();
}

Graph edgeless(std::uint32_t n) { return with_vertices(n).build(); }

Graph star(std::uint32_t leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(std::uint32_t a, std::uint32_t b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<std::uint32_t>& sizes) {
    if (sizes.empty()) throw InputError("complete multipartite graph needs at least one part");
    std::vector<std::uint32_t> part_of;
    for (std::uint32_t p = 0; p < sizes.size(); ++p) {
        if (sizes[p] == 0) throw InputError("part sizes must be positive");
        part_of.insert(part_of.end(), sizes[p], p);
    }
    const auto n = static_cast<std::uint32_t>(part_of.size());
    auto b = with_vertices(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) b.add_edge(vid(i), vid(j));
    return b.build();
}

Graph wheel(std::uint32_t n) { return cone(cycle(n)).graph; }

Graph gem() { return from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}); }

Graph house() { return from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}}); }

Graph domino() { return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}); }

Graph superprism(std::uint32_t n) {
    if (n < 4) throw InputError("superprism needs n >= 4");
    auto b = with_vertices(2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t j = (i + 1) % n;
        for (std::uint32_t a : {2 * i, 2 * i + 1})
            for (std::uint32_t c : {2 * j, 2 * j + 1}) b.add_edge(vid(a), vid(c));
    }
    return b.build();
}

FerrersGraph ferrers_young(const FerrersDiagram& d) {
    const std::uint32_t k = d.rows();
    const std::uint32_t cols = d.columns();
    auto b = with_vertices(k + cols);
    FerrersGraph out;
    for (std::uint32_t r = 0; r < k; ++r) {
        out.parts.part1.push_back(vid(r));
        for (std::uint32_t c = 0; c < d.parts()[r]; ++c) b.add_edge(vid(r), vid(k + c));
    }
    for (std::uint32_t c = 0; c < cols; ++c) out.parts.part2.push_back(vid(k + c));
    out.graph = b.build();
    return out;
}

std::vector<FerrersDiagram> ferrers_diagrams_up_to(std::uint32_t max_vertices) {
    std::vector<FerrersDiagram> out;
    std::vector<std::uint32_t> parts;
    // parts.size() + parts.front() <= max_vertices
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t cap) {
        if (!parts.empty()) out.emplace_back(parts);
        for (std::uint32_t p = 1; p <= cap; ++p) {
            std::uint32_t first = parts.empty() ? p : parts.front();
            if (parts.size() + 1 + first > max_vertices) break;
            parts.push_back(p);
            extend(p);
            parts.pop_back();
        }
    };
    extend(max_vertices);
    return out;
}

Graph threshold_graph(const std::vector<ThresholdStep>& creation) {
    if (creation.empty()) throw InputError("threshold creation sequence is empty");
    GraphBuilder b;
    std::vector<VertexId> added;
    for (ThresholdStep step : creation) {
        VertexId v = b.add_vertex();
        if (step == ThresholdStep::Dominating)
            for (VertexId u : added) b.add_edge(v, u);
        added.push_back(v);
    }
    return b.build();
}

Graph inversion_graph(const Permutation& w) {
    const std::uint32_t n = w.size();
    auto b = with_vertices(n, 1);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (w.at(i) > w.at(j)) b.add_edge(vid(i), vid(j));
    return b.build();
}

bool is_separable(const Permutation& w) {
    const auto& v = w.values();
    const std::size_t n = v.size();
    // pattern p at positions a<b<c<d: compare relative order of the four values
    auto matches = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, const int (&pat)[4]) {
        const std::uint32_t vals[4] = {v[a], v[b], v[c], v[d]};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if ((vals[i] < vals[j]) != (pat[i] < pat[j])) return false;
        return true;
    };
    static constexpr int p2413[4] = {2, 4, 1, 3};
    static constexpr int p3142[4] = {3, 1, 4, 2};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (matches(a, b, c, d, p2413) || matches(a, b, c, d, p3142)) return false;
    return true;
}

}  // namespace dhspan
