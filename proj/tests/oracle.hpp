#pragma once

// Test-only reference computations. Nothing here shares code with the
// library's deletion-contraction or determinant routines.

#include <numeric>
#include <vector>

#include "dhspan/graph.hpp"
#include "dhspan/polynomial.hpp"

namespace dhspan::oracle {

// Σ_T Π x_v^{deg_T(v)-1} by testing every (n-1)-edge subset for acyclicity.
inline SparsePoly subset_enumerator(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    SparsePoly out;
    if (n < 2 || m < n - 1) return out;
    std::vector<std::size_t> pick(n - 1);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a];
            return a;
        };
        std::vector<std::uint32_t> deg(n, 0);
        bool acyclic = true;
        for (std::size_t k : pick) {
            std::size_t a = g.index_of(edges[k].first), b = g.index_of(edges[k].second);
            std::size_t ra = find(a), rb = find(b);
            if (ra == rb) {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
            ++deg[a];
            ++deg[b];
        }
        if (acyclic) {
            Monomial mono;
            for (std::size_t i = 0; i < n; ++i)
                if (deg[i] > 1) mono.emplace_back(g.vertices()[i], deg[i] - 1);
            out.add_term(mono, 1);
        }
        // next combination
        std::size_t i = n - 1;
        while (i > 0 && pick[i - 1] == m - (n - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Number of spanning trees from the subset enumeration.
inline std::size_t subset_tree_count(const Graph& g) {
    std::size_t total = 0;
    for (const auto& [m, c] : subset_enumerator(g).terms()) total += c.get_ui();
    return total;
}

}  // namespace dhspan::oracle
