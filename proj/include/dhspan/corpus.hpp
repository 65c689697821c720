#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "dhspan/graph.hpp"
#include "dhspan/polynomial.hpp"

namespace dhspan {

using Rng = std::mt19937_64;

/// One representative per isomorphism class on exactly n vertices
/// (n <= 7), ids 0..n-1, in a fixed order.
std::vector<Graph> graphs_up_to_isomorphism(std::uint32_t n);
/// Connected classes on 2..max_n vertices.
std::vector<Graph> connected_graphs_up_to(std::uint32_t max_n);
/// All classes (connected or not) on 1..max_n vertices.
std::vector<Graph> all_graphs_up_to(std::uint32_t max_n);

/// Erdős–Rényi G(n, p).
Graph random_graph(std::uint32_t n, double p, Rng& rng);
/// G(n, p) conditioned on connectivity (rejection sampling).
Graph random_connected_graph(std::uint32_t n, double p, Rng& rng);

struct RandomBipartite {
    Graph graph;
    BipartitionCert parts;
};
/// Part sizes uniform in [1, n-1]; each cross edge independently with
/// probability p; disconnected samples rejected.
RandomBipartite random_connected_bipartite(std::uint32_t n, double p, Rng& rng);

/// Distance-hereditary graph grown by random pendant/twin steps from K1.
Graph random_dh_graph(std::uint32_t n, Rng& rng);

/// num/den with num in [lo, hi] and den in [1, max_den].
mpq_class random_rational(Rng& rng, long lo, long hi, long max_den);
/// Coordinates num/den with num in [1, 2^31] and den in [1, 1000].
Point random_positive_point(const Graph& g, Rng& rng);
/// Coordinates in [0, 20]/[1, 10]; zero appears with probability 1/21.
Point random_nonnegative_point(const Graph& g, Rng& rng);

}  // namespace dhspan
