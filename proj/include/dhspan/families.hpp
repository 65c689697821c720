#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhspan/graph.hpp"

namespace dhspan {

/// Partition shape λ₁ ≥ … ≥ λ_k > 0.
class FerrersDiagram {
public:
    explicit FerrersDiagram(std::vector<std::uint32_t> parts);
    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::uint32_t rows() const { return static_cast<std::uint32_t>(parts_.size()); }
    std::uint32_t columns() const { return parts_.front(); }
    std::uint32_t cells() const;

private:
    std::vector<std::uint32_t> parts_;
};

/// Bijection on {1..n}, stored one-line: values()[i-1] = w(i).
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> values);
    static Permutation identity(std::uint32_t n);
    /// Accepts "2413" (n ≤ 9) or "2,4,1,3".
    static Permutation parse(const std::string& text);

    std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
    /// 1-based: at(i) = w(i).
    std::uint32_t at(std::uint32_t i) const { return values_[i - 1]; }
    const std::vector<std::uint32_t>& values() const { return values_; }
    std::string to_string() const;

private:
    std::vector<std::uint32_t> values_;
};

Graph cycle(std::uint32_t n);
Graph path(std::uint32_t n);
Graph complete(std::uint32_t n);
Graph edgeless(std::uint32_t n);
Graph star(std::uint32_t leaves);
Graph complete_bipartite(std::uint32_t a, std::uint32_t b);
Graph complete_multipartite(const std::vector<std::uint32_t>& sizes);
/// Apex id n over cycle(n).
Graph wheel(std::uint32_t n);

// Forbidden induced subgraphs of distance-hereditary graphs, labelled as
// usually drawn: gem = apex 0 over the path 1-2-3-4; house = cycle 0..4
// with chord 1-3; domino = cycle 0..5 with chord 0-3.
Graph gem();
Graph house();
Graph domino();

/// 4-regular graph on pairs {u_i, v_i}, i = 0..n-1, consecutive pairs
/// (cyclically) completely joined. u_i has id 2i and v_i has id 2i+1.
Graph superprism(std::uint32_t n);

struct FerrersGraph {
    Graph graph;
    BipartitionCert parts;  // part1 = rows (ids 0..k-1), part2 = columns
};
FerrersGraph ferrers_young(const FerrersDiagram& d);
/// All diagrams with rows + columns <= max_vertices.
std::vector<FerrersDiagram> ferrers_diagrams_up_to(std::uint32_t max_vertices);

enum class ThresholdStep { Isolated, Dominating };
Graph threshold_graph(const std::vector<ThresholdStep>& creation);

/// Vertices 1..n, edge ij (i<j) iff w(i) > w(j).
Graph inversion_graph(const Permutation& w);
/// Avoids both 2413 and 3142.
bool is_separable(const Permutation& w);

}  // namespace dhspan
