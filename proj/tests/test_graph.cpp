#include <doctest.h>

#include <random>

#include "dhspan/corpus.hpp"
#include "dhspan/errors.hpp"
#include "dhspan/families.hpp"
#include "dhspan/graph.hpp"
#include "dhspan/graph_io.hpp"

using namespace dhspan;

namespace {

std::vector<VertexId> ids(std::initializer_list<std::uint32_t> raw_ids) {
    std::vector<VertexId> out;
    for (auto r : raw_ids) out.push_back(vid(r));
    return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d;
    for (VertexId v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("neighborhood") {
    Graph c4 = Graph::from_edges(5, std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    c4 = induced_subgraph(c4, ids({1, 2, 3, 4}));
    CHECK(neighborhood(c4, vid(1)) == ids({2, 4}));

    Graph k4 = complete(4);
    CHECK(neighborhood(k4, vid(2)) == ids({0, 1, 3}));

    Graph s = star(3);
    CHECK(neighborhood(s, vid(0)) == ids({1, 2, 3}));
    CHECK_THROWS_AS(neighborhood(s, vid(9)), InputError);
}

TEST_CASE("add_pendant") {
    auto k2 = add_pendant(complete(1), vid(0));
    CHECK(k2.graph == complete(2));
    CHECK(k2.added == vid(1));

    auto p3 = add_pendant(path(2), vid(1));
    CHECK(p3.graph == path(3));

    auto c = add_pendant(cycle(4), vid(0));
    CHECK(c.graph.vertex_count() == 5);
    CHECK(c.graph.edge_count() == 5);
    CHECK(c.graph.degree(c.added) == 1);
    CHECK_THROWS_AS(add_pendant(cycle(4), vid(7)), InputError);
}

TEST_CASE("duplicate") {
    CHECK(duplicate(complete(2), vid(1), true).graph == complete(3));
    auto ft = duplicate(complete(2), vid(1), false);
    CHECK(degree_sequence(ft.graph) == std::vector<std::size_t>{1, 1, 2});
    CHECK(ft.graph.degree(vid(0)) == 2);

    auto c = duplicate(cycle(4), vid(0), false);
    CHECK(degree_sequence(c.graph) == std::vector<std::size_t>{2, 2, 2, 3, 3});
    CHECK_THROWS_AS(duplicate(cycle(4), vid(4), true), InputError);
}

TEST_CASE("twins share neighborhoods") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(6, 0.5, rng);
        VertexId v = g.vertices()[t % 6];
        auto f = duplicate(g, v, false);
        CHECK(neighborhood(f.graph, f.added) == neighborhood(f.graph, v));
        auto tt = duplicate(g, v, true);
        auto closed = [&](VertexId x) {
            auto nb = neighborhood(tt.graph, x);
            nb.push_back(x);
            std::sort(nb.begin(), nb.end());
            return nb;
        };
        CHECK(closed(tt.added) == closed(v));
    }
}

TEST_CASE("cone") {
    CHECK(cone(complete(1)).graph == complete(2));
    CHECK(cone(cycle(4)).graph == wheel(4));
    auto gem_like = cone(path(4));
    CHECK(gem_like.graph.edge_count() == 7);
    CHECK(degree_sequence(gem_like.graph) == std::vector<std::size_t>{2, 2, 3, 3, 4});

    Rng rng(3);
    for (int t = 0; t < 30; ++t) CHECK(is_connected(cone(random_graph(5, 0.2, rng)).graph));
}

TEST_CASE("compose_graphs") {
    auto k = compose_graphs(complete(2), vid(1), complete(2), vid(0));
    CHECK(k.graph.vertex_count() == 2);
    CHECK(k.graph.edge_count() == 1);
    CHECK(k.relabel.at(vid(1)) == vid(3));

    auto w = compose_graphs(wheel(5), vid(5), wheel(5), vid(5));
    CHECK(w.graph.vertex_count() == 10);
    CHECK(w.graph.edge_count() == 5 + 5 + 25);

    // unknown marked vertex
    CHECK_THROWS_AS(compose_graphs(complete(2), vid(4), complete(2), vid(0)), InputError);
}

TEST_CASE("composing with K3 or a centered P3 duplicates the marked vertex") {
    Rng rng(5);
    const Graph p3 = path(3);  // center 1
    for (int t = 0; t < 40; ++t) {
        Graph g = random_connected_graph(5, 0.5, rng);
        VertexId v = g.vertices()[t % 5];
        for (bool with_edge : {true, false}) {
            auto comp = with_edge ? compose_graphs(g, v, complete(3), vid(0)) : compose_graphs(g, v, p3, vid(1));
            auto dup = duplicate(g, v, with_edge);
            // map the two surviving copies onto v and the duplicate's new id
            std::map<VertexId, VertexId> back;
            for (VertexId u : comp.graph.vertices()) back[u] = u;
            std::vector<VertexId> copies;
            for (VertexId u : comp.graph.vertices())
                if (!g.contains(u)) copies.push_back(u);
            REQUIRE(copies.size() == 2);
            back[copies[0]] = v;
            back[copies[1]] = dup.added;
            CHECK(relabeled(comp.graph, back) == dup.graph);
        }
    }
}

TEST_CASE("blow_up") {
    auto c4 = blow_up(complete(2), {{vid(0), 2}, {vid(1), 2}});
    CHECK(c4.graph.edge_count() == 4);
    CHECK(degree_sequence(c4.graph) == std::vector<std::size_t>{2, 2, 2, 2});

    CHECK(blow_up(cycle(5), {{vid(0), 1}, {vid(1), 1}, {vid(2), 1}, {vid(3), 1}, {vid(4), 1}}).graph == cycle(5));

    auto s = blow_up(complete(2), {{vid(0), 2}, {vid(1), 1}});
    CHECK(degree_sequence(s.graph) == std::vector<std::size_t>{1, 1, 2});
    CHECK(s.origin.at(vid(2)) == vid(0));

    CHECK_THROWS_AS(blow_up(complete(2), {{vid(0), 0}, {vid(1), 1}}), InputError);
    CHECK_THROWS_AS(blow_up(complete(2), {{vid(0), -1}, {vid(1), 1}}), InputError);
    CHECK_THROWS_AS(blow_up(complete(2), {{vid(0), 1}}), InputError);
}

TEST_CASE("blow_up counts") {
    Rng rng(17);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(5, 0.5, rng);
        std::map<VertexId, std::int64_t> z;
        std::int64_t total = 0;
        for (VertexId v : g.vertices()) total += (z[v] = mult(rng));
        std::int64_t edges = 0;
        for (auto [u, w] : g.edges()) edges += z[u] * z[w];
        auto b = blow_up(g, z);
        CHECK(static_cast<std::int64_t>(b.graph.vertex_count()) == total);
        CHECK(static_cast<std::int64_t>(b.graph.edge_count()) == edges);
    }
}

TEST_CASE("ids are never recycled") {
    auto a = add_pendant(path(3), vid(2));
    Graph smaller = induced_subgraph(a.graph, ids({0, 1, 2}));
    CHECK(add_pendant(smaller, vid(0)).added == vid(4));
}

TEST_CASE("graph text format") {
    Graph g = parse_graph_text("# a comment\n4 3\n\n0 1\n1 2  # trailing\n2 3\n");
    CHECK(g == path(4));
    CHECK(graph_to_text(g) == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(parse_graph_text(graph_to_text(superprism(5))) == superprism(5));

    CHECK_THROWS_AS(parse_graph_text("3 1\n0 0\n"), InputError);
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n1 0\n"), InputError);
    CHECK_THROWS_AS(parse_graph_text("3 1\n0 3\n"), InputError);
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph_text("3 1\n0 x\n"), InputError);
    CHECK_THROWS_AS(parse_graph_text(""), InputError);
}

TEST_CASE("graph JSON format keeps sparse ids") {
    auto comp = compose_graphs(cycle(4), vid(0), complete(3), vid(1));
    Graph back = parse_graph_json(graph_to_json(comp.graph));
    CHECK(back == comp.graph);
    CHECK_FALSE(comp.graph.contiguous());
    CHECK(graph_to_text(comp.graph).rfind("# ids:", 0) == 0);
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\":[0,1],\"edges\":[[0,2]]}"), InputError);
    CHECK_THROWS_AS(parse_graph_json("not json"), InputError);
}

TEST_CASE("bipartition") {
    auto cert = bipartition(cycle(6));
    REQUIRE(cert);
    CHECK(cert->part1.size() == 3);
    validate_bipartition(cycle(6), *cert);
    CHECK_FALSE(bipartition(cycle(5)));
    BipartitionCert bad{ids({0, 1}), ids({2, 3})};
    CHECK_THROWS_AS(validate_bipartition(cycle(4), bad), InputError);
}
