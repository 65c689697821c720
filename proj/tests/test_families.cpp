#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "dhspan/errors.hpp"
#include "dhspan/families.hpp"
#include "dhspan/recognition.hpp"

using namespace dhspan;

namespace {

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d;
    for (VertexId v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

// Induced copy of `pattern` anywhere in g, by brute force over ordered tuples.
bool has_induced(const Graph& g, const Graph& pattern) {
    const std::size_t k = pattern.vertex_count();
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> pick;
    std::vector<char> used(n, 0);
    std::function<bool()> go = [&]() {
        if (pick.size() == k) return true;
        const std::size_t i = pick.size();
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = g.adjacent(g.vertices()[v], g.vertices()[pick[j]]) == pattern.adjacent(vid(i), vid(j));
            if (!ok) continue;
            used[v] = 1;
            pick.push_back(v);
            if (go()) return true;
            pick.pop_back();
            used[v] = 0;
        }
        return false;
    };
    return go();
}

}  // namespace

TEST_CASE("basic families") {
    Graph c4 = cycle(4);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(degree_sequence(c4) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(degree_sequence(complete_bipartite(2, 3)) == std::vector<std::size_t>{3, 3, 2, 2, 2});
    CHECK(complete_multipartite({1, 1, 1}) == complete(3));
    CHECK(complete_multipartite({2, 1}).edge_count() == 2);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), InputError);
    CHECK_THROWS_AS(complete_multipartite({}), InputError);
}

TEST_CASE("superprism") {
    Graph s4 = superprism(4);
    CHECK(s4.vertex_count() == 8);
    CHECK(s4.edge_count() == 16);
    CHECK(superprism(5).edge_count() == 20);
    for (std::uint32_t n = 4; n <= 12; ++n) {
        Graph s = superprism(n);
        CHECK(s.edge_count() == 4 * n);
        for (VertexId v : s.vertices()) CHECK(s.degree(v) == 4);
        // pair partners are not adjacent; partners share neighborhoods
        for (std::uint32_t i = 0; i < n; ++i) {
            CHECK_FALSE(s.adjacent(vid(2 * i), vid(2 * i + 1)));
            CHECK(neighborhood(s, vid(2 * i)) == neighborhood(s, vid(2 * i + 1)));
        }
    }
    CHECK_THROWS_AS(superprism(3), InputError);
}

TEST_CASE("ferrers_young") {
    auto p4 = ferrers_young(FerrersDiagram({2, 1}));
    CHECK(p4.graph.edge_count() == 3);
    CHECK(p4.graph.adjacent(vid(0), vid(2)));
    CHECK(p4.graph.adjacent(vid(0), vid(3)));
    CHECK(p4.graph.adjacent(vid(1), vid(2)));
    CHECK(degree_sequence(p4.graph) == std::vector<std::size_t>{2, 2, 1, 1});

    auto c4 = ferrers_young(FerrersDiagram({2, 2}));
    CHECK(degree_sequence(c4.graph) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(c4.graph.edge_count() == 4);

    CHECK(ferrers_young(FerrersDiagram({1})).graph == complete(2));

    CHECK_THROWS_AS(FerrersDiagram({1, 2}), InputError);
    CHECK_THROWS_AS(FerrersDiagram({}), InputError);
    CHECK_THROWS_AS(FerrersDiagram({2, 0}), InputError);
}

TEST_CASE("ferrers_young graphs are connected and bipartite") {
    auto diagrams = ferrers_diagrams_up_to(9);
    CHECK(diagrams.size() > 50);
    for (const auto& d : diagrams) {
        auto fy = ferrers_young(d);
        CHECK(is_connected(fy.graph));
        validate_bipartition(fy.graph, fy.parts);
        CHECK(fy.graph.edge_count() == d.cells());
        CHECK(fy.graph.vertex_count() <= 9);
    }
}

TEST_CASE("threshold graphs") {
    using S = ThresholdStep;
    CHECK(threshold_graph({S::Isolated, S::Dominating}) == complete(2));
    CHECK(degree_sequence(threshold_graph({S::Isolated, S::Isolated, S::Dominating})) ==
          std::vector<std::size_t>{2, 1, 1});
    CHECK(threshold_graph({S::Isolated, S::Dominating, S::Dominating}) == complete(3));
    CHECK_THROWS_AS(threshold_graph({}), InputError);

    const Graph two_k2 = Graph::from_edges(4, std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {2, 3}});
    for (std::uint32_t n = 1; n <= 10; ++n)
        for (std::uint32_t mask = 0; mask < (1U << n); mask += (n > 7 ? 37 : 1)) {
            std::vector<S> seq;
            for (std::uint32_t i = 0; i < n; ++i) seq.push_back(mask >> i & 1U ? S::Dominating : S::Isolated);
            Graph g = threshold_graph(seq);
            CHECK(is_threshold(g));
            CHECK_FALSE(has_induced(g, path(4)));
            CHECK_FALSE(has_induced(g, cycle(4)));
            CHECK_FALSE(has_induced(g, two_k2));
        }
}

TEST_CASE("permutations") {
    CHECK(Permutation::parse("2413").values() == std::vector<std::uint32_t>{2, 4, 1, 3});
    CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").size() == 10);
    CHECK_THROWS_AS(Permutation({1, 1}), InputError);
    CHECK_THROWS_AS(Permutation::parse("204"), InputError);
    CHECK_FALSE(is_separable(Permutation::parse("2413")));
    CHECK_FALSE(is_separable(Permutation::parse("3142")));
    CHECK(is_separable(Permutation::parse("321")));
    CHECK(is_separable(Permutation::parse("2143")));
    CHECK_FALSE(is_separable(Permutation::parse("25314")));  // contains 2413 as 2,5,1,4
}

TEST_CASE("inversion graphs") {
    Graph k2 = inversion_graph(Permutation::parse("21"));
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(vid(1), vid(2)));
    CHECK(inversion_graph(Permutation::identity(4)).edge_count() == 0);
    CHECK(inversion_graph(Permutation::parse("321")).edge_count() == 3);
}

TEST_CASE("inversion graph is a cograph iff the permutation is separable") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        std::vector<std::uint32_t> v(n);
        std::iota(v.begin(), v.end(), 1U);
        do {
            Permutation w(v);
            CHECK_MESSAGE(cograph(inversion_graph(w)) == is_separable(w), w.to_string());
        } while (std::next_permutation(v.begin(), v.end()));
    }
}
