#include "dhspan/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dhspan/errors.hpp"

namespace dhspan {

namespace {

using Mask = std::uint32_t;

constexpr std::uint32_t pair_bit(std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

Mask canonical_mask(Mask g, std::uint32_t n) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    Mask best = ~Mask{0};
    do {
        Mask m = 0;
        for (std::uint32_t j = 1; j < n; ++j)
            for (std::uint32_t i = 0; i < j; ++i)
                if (g >> pair_bit(i, j) & 1U) m |= Mask{1} << pair_bit(perm[i], perm[j]);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph mask_graph(Mask m, std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t j = 1; j < n; ++j)
        for (std::uint32_t i = 0; i < j; ++i)
            if (m >> pair_bit(i, j) & 1U) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::vector<Mask> classes(std::uint32_t n) {
    if (n == 1) return {0};
    std::set<Mask> out;
    for (Mask base : classes(n - 1))
        for (Mask nb = 0; nb < (Mask{1} << (n - 1)); ++nb) {
            Mask m = base;
            for (std::uint32_t i = 0; i + 1 < n; ++i)
                if (nb >> i & 1U) m |= Mask{1} << pair_bit(i, n - 1);
            out.insert(canonical_mask(m, n));
        }
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<Graph> graphs_up_to_isomorphism(std::uint32_t n) {
    if (n == 0 || n > 7) throw InputError("isomorphism-class enumeration supports 1..7 vertices");
    std::vector<Graph> out;
    for (Mask m : classes(n)) out.push_back(mask_graph(m, n));
    return out;
}

std::vector<Graph> connected_graphs_up_to(std::uint32_t max_n) {
    std::vector<Graph> out;
    for (std::uint32_t n = 2; n <= max_n; ++n)
        for (auto& g : graphs_up_to_isomorphism(n))
            if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_graphs_up_to(std::uint32_t max_n) {
    std::vector<Graph> out;
    for (std::uint32_t n = 1; n <= max_n; ++n)
        for (auto& g : graphs_up_to_isomorphism(n)) out.push_back(std::move(g));
    return out;
}

Graph random_graph(std::uint32_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::uint32_t n, double p, Rng& rng) {
    if (p <= 0.0 && n > 1) throw InputError("connected sampling needs positive edge probability");
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
}

RandomBipartite random_connected_bipartite(std::uint32_t n, double p, Rng& rng) {
    if (n < 2) throw InputError("bipartite sampling needs at least two vertices");
    if (p <= 0.0) throw InputError("bipartite sampling needs positive edge probability");
    std::uniform_int_distribution<std::uint32_t> split(1, n - 1);
    std::bernoulli_distribution coin(p);
    for (;;) {
        const std::uint32_t a = split(rng);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (std::uint32_t i = 0; i < a; ++i)
            for (std::uint32_t j = a; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        RandomBipartite out{std::move(g), {}};
        for (std::uint32_t i = 0; i < n; ++i) (i < a ? out.parts.part1 : out.parts.part2).push_back(vid(i));
        return out;
    }
}

Graph random_dh_graph(std::uint32_t n, Rng& rng) {
    if (n == 0) throw InputError("random DH graph needs n >= 1");
    GraphBuilder seed;
    seed.add_vertex(vid(0));
    Graph g = seed.build();
    std::uniform_int_distribution<int> op(0, 2);
    while (g.vertex_count() < n) {
        std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
        VertexId v = g.vertices()[pick(rng)];
        int kind = op(rng);
        if (g.vertex_count() == 1 && kind == 1) kind = 2;  // a false twin of K1 is disconnected
        if (kind == 0)
            g = add_pendant(g, v).graph;
        else
            g = duplicate(g, v, kind == 2).graph;
    }
    return g;
}

mpq_class random_rational(Rng& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    mpq_class q(mpz_class(num(rng)), mpz_class(den(rng)));
    q.canonicalize();
    return q;
}

Point random_positive_point(const Graph& g, Rng& rng) {
    Point p;
    for (VertexId v : g.vertices()) p.set(v, random_rational(rng, 1, 1L << 31, 1000));
    return p;
}

Point random_nonnegative_point(const Graph& g, Rng& rng) {
    Point p;
    for (VertexId v : g.vertices()) p.set(v, random_rational(rng, 0, 20, 10));
    return p;
}

}  // namespace dhspan
