#include "dhspan/linalg.hpp"

#include <array>
#include <numeric>

#include "dhspan/errors.hpp"

namespace dhspan {

mpz_class determinant(IntMatrix m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

mpq_class determinant(RatMatrix m) {
    const std::size_t n = m.order();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            mpq_class factor = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

IntMatrix laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    IntMatrix L(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto nb = g.neighbors_at(i);
        L(i, i) = static_cast<unsigned long>(nb.size());
        for (VertexId w : nb) L(i, g.index_of(w)) = -1;
    }
    return L;
}

RatMatrix weighted_laplacian(const Graph& g, const Point& x) {
    const std::size_t n = g.vertex_count();
    RatMatrix L(n);
    for (auto [u, w] : g.edges()) {
        std::size_t i = g.index_of(u);
        std::size_t j = g.index_of(w);
        mpq_class weight = x.at(u) * x.at(w);
        L(i, j) -= weight;
        L(j, i) -= weight;
        L(i, i) += weight;
        L(j, j) += weight;
    }
    for (VertexId v : g.vertices()) x.at(v);  // isolated vertices still need a value
    return L;
}

mpz_class tree_count(const Graph& g, std::size_t drop) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    if (drop >= n) throw InputError("cofactor index out of range");
    return determinant(laplacian(g).minor(drop));
}

mpq_class weighted_tree_sum(const Graph& g, const Point& x) {
    if (g.empty()) return 0;
    return determinant(weighted_laplacian(g, x).minor(0));
}

mpq_class enumerator_value(const Graph& g, const Point& x) {
    mpq_class product = 1;
    for (VertexId v : g.vertices()) {
        if (x.at(v) == 0) throw InputError("weighted-Laplacian evaluation needs nonzero coordinates");
        product *= x.at(v);
    }
    return weighted_tree_sum(g, x) / product;
}

RankOneCheck det_rank_one_check(const Graph& g, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    const std::size_t n = g.vertex_count();
    if (a.size() != n || b.size() != n) throw InputError("vector length must equal the vertex count");
    IntMatrix L = laplacian(g);
    RatMatrix M(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = mpq_class(L(i, j)) + a[i] * b[j];
    RankOneCheck out;
    out.lhs = determinant(std::move(M));
    mpq_class sa = std::accumulate(a.begin(), a.end(), mpq_class(0));
    mpq_class sb = std::accumulate(b.begin(), b.end(), mpq_class(0));
    out.rhs = sa * sb * mpq_class(tree_count(g));
    out.equal = out.lhs == out.rhs;
    return out;
}

namespace {

// Multigraph edge during deletion/contraction: original endpoints (for the
// degree monomial) and current super-vertex labels.
struct DcEdge {
    std::uint32_t orig_u, orig_v;
    std::uint32_t u, v;
};

class TreeEnumerator {
public:
    explicit TreeEnumerator(std::size_t n) : degree_(n, 0), labels_(n) {}

    void run(std::vector<DcEdge> edges, std::size_t supers) { recurse(std::move(edges), supers); }

    const std::map<std::vector<std::uint16_t>, std::uint64_t>& counts() const { return counts_; }

private:
    bool connected(const std::vector<DcEdge>& edges, std::size_t supers) {
        // labels are arbitrary ids < n; union-find over them
        std::iota(labels_.begin(), labels_.end(), 0U);
        auto find = [this](std::uint32_t a) {
            while (labels_[a] != a) a = labels_[a] = labels_[labels_[a]];
            return a;
        };
        std::size_t components = supers;
        for (const auto& e : edges) {
            auto ra = find(e.u);
            auto rb = find(e.v);
            if (ra != rb) {
                labels_[ra] = rb;
                if (--components == 1) return true;
            }
        }
        return components == 1;
    }

    void recurse(std::vector<DcEdge> edges, std::size_t supers) {
        if (supers == 1) {
            ++counts_[degree_];
            return;
        }
        if (edges.empty()) return;

        DcEdge e = edges.back();
        edges.pop_back();

        // trees without e
        if (connected(edges, supers)) recurse(edges, supers);

        // trees through e: merge e.v into e.u, dropping edges that become loops
        std::vector<DcEdge> merged;
        merged.reserve(edges.size());
        for (DcEdge f : edges) {
            if (f.u == e.v) f.u = e.u;
            if (f.v == e.v) f.v = e.u;
            if (f.u != f.v) merged.push_back(f);
        }
        ++degree_[e.orig_u];
        ++degree_[e.orig_v];
        recurse(std::move(merged), supers - 1);
        --degree_[e.orig_u];
        --degree_[e.orig_v];
    }

    std::vector<std::uint16_t> degree_;
    std::vector<std::uint32_t> labels_;
    std::map<std::vector<std::uint16_t>, std::uint64_t> counts_;
};

}  // namespace

SparsePoly brute_force_enumerator(const Graph& g, const EnumerationLimits& limits) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw InputError("the enumerator needs at least two vertices");
    if (n > limits.max_vertices && tree_count(g) > limits.max_trees)
        throw EnvelopeExceeded("spanning-tree enumeration envelope exceeded (n = " + std::to_string(n) + ")");
    if (!is_connected(g)) return {};

    std::vector<DcEdge> edges;
    for (auto [u, w] : g.edges()) {
        auto i = static_cast<std::uint32_t>(g.index_of(u));
        auto j = static_cast<std::uint32_t>(g.index_of(w));
        edges.push_back({i, j, i, j});
    }
    TreeEnumerator walker(n);
    walker.run(std::move(edges), n);

    SparsePoly out;
    for (const auto& [deg, count] : walker.counts()) {
        Monomial m;
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] > 1) m.emplace_back(g.vertices()[i], deg[i] - 1U);
        out.add_term(m, mpz_class(static_cast<unsigned long>(count)));
    }
    return out;
}

}  // namespace dhspan
