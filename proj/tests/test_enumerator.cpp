#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dhspan/corpus.hpp"
#include "dhspan/enumerator.hpp"
#include "dhspan/errors.hpp"
#include "oracle.hpp"

using namespace dhspan;

namespace {

LinearForm x(std::uint32_t i) { return LinearForm::variable(vid(i)); }

LinearForm sum_of(std::initializer_list<std::uint32_t> ids) {
    LinearForm f;
    for (auto i : ids) f += x(i);
    return f;
}

Enumerator product_of(std::initializer_list<std::pair<LinearForm, std::uint32_t>> factors) {
    Enumerator e;
    for (const auto& [f, m] : factors) e.multiply(f, m);
    return e;
}

std::vector<Permutation> separable_permutations(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    std::vector<Permutation> out;
    do {
        Permutation w(v);
        if (is_separable(w)) out.push_back(w);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("enumerator algebra") {
    Enumerator e = product_of({{x(1), 1}});
    Enumerator s = substitute(e, vid(1), x(2) + x(3));
    CHECK(s == product_of({{x(2) + x(3), 1}}));
    CHECK(substitute(e, vid(1), x(1)) == e);
    CHECK_THROWS_AS(substitute(e, vid(1), LinearForm{}), InputError);

    // a gcd is pulled into the constant and equal factors merge
    Enumerator m;
    m.multiply(x(0).scaled(2) + x(1).scaled(2));
    m.multiply(x(0) + x(1));
    CHECK(m.constant_factor() == 2);
    REQUIRE(m.factors().size() == 1);
    CHECK(m.factors()[0].multiplicity == 2);

    Enumerator neg;
    neg.multiply(x(0).scaled(-1));
    CHECK(neg.constant_factor() == -1);
    CHECK(neg.factors()[0].form == x(0));

    Point p;
    p.set(vid(0), 1);
    p.set(vid(1), -1);
    CHECK(m.evaluate(p) == 0);
    CHECK_THROWS_AS(m.evaluate(Point{}), InputError);

    CHECK(Enumerator::constant(0).is_zero());
    CHECK(Enumerator().expand() == SparsePoly::constant(1));
    CHECK(Enumerator().expand().term_count() == 1);
    CHECK(product_of({{x(1) + x(2), 1}}).expand().term_count() == 2);
}

TEST_CASE("substitution into a sparse remainder") {
    Enumerator c4 = cycle_enumerator(4);
    Enumerator sub = substitute(c4, vid(1), x(1) + x(9));
    CHECK(sub.fully_linear() == false);
    // z1 appears in two of the four monomials, so those two split in two
    CHECK(sub.remainder().term_count() == 6);
    Enumerator both = substitute(sub, vid(3), x(3) + x(8));
    CHECK(both.remainder().term_count() == 8);
}

TEST_CASE("factor_enumerator examples") {
    CHECK(factor_enumerator(path(3)) == product_of({{x(1), 1}}));
    CHECK(factor_enumerator(complete(4)) == product_of({{sum_of({0, 1, 2, 3}), 2}}));
    // parts {0,1} and {2,3,4}
    Enumerator k23 = factor_enumerator(complete_bipartite(2, 3));
    CHECK(same_factorization(k23, product_of({{sum_of({0, 1}), 2}, {sum_of({2, 3, 4}), 1}})));
    CHECK(k23.expand() == oracle::subset_enumerator(complete_bipartite(2, 3)));
    CHECK(factor_enumerator(complete(2)) == Enumerator());

    Enumerator k22 = factor_enumerator(cycle(4));
    CHECK(k22.expand() == cycle_enumerator(4).expand());
    CHECK(k22.expand().term_count() == 4);

    CHECK_THROWS_AS(factor_enumerator(cycle(5)), InputError);
    CHECK_THROWS_AS(factor_enumerator(complete(1)), InputError);
}

TEST_CASE("factor_enumerator matches the oracle on every connected DH graph up to 7 vertices") {
    int checked = 0;
    for (const Graph& g : connected_graphs_up_to(7)) {
        if (!is_distance_hereditary(g)) continue;
        Enumerator e = factor_enumerator(g);
        CHECK(e.fully_linear());
        CHECK(e.total_degree() == g.vertex_count() - 2);
        CHECK(e.expand() == oracle::subset_enumerator(g));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("factor_enumerator on larger random DH graphs agrees with Kirchhoff") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_dh_graph(8 + static_cast<std::uint32_t>(t % 8), rng);
        Enumerator e = factor_enumerator(g);
        CHECK(e.fully_linear());
        Point ones = Point::constant(g, 1);
        CHECK(e.evaluate(ones) == mpq_class(tree_count(g)));
        Point p = random_positive_point(g, rng);
        CHECK(e.evaluate(p) == enumerator_value(g, p));
    }
}

TEST_CASE("graph_enumerator falls back to brute force") {
    Enumerator c5 = graph_enumerator(cycle(5));
    CHECK_FALSE(c5.fully_linear());
    CHECK(c5.expand() == cycle_enumerator(5).expand());
    CHECK(graph_enumerator(complete(3)).fully_linear());
}

TEST_CASE("cycle and superprism enumerators") {
    CHECK(cycle_enumerator(3).expand() == SparsePoly::from_linear(sum_of({0, 1, 2})));
    for (std::uint32_t n = 3; n <= 7; ++n)
        CHECK(cycle_enumerator(n).expand() == oracle::subset_enumerator(cycle(n)));
    CHECK(cycle_enumerator(5).evaluate(Point::constant(cycle(5), 1)) == 5);
    CHECK_THROWS_AS(cycle_enumerator(2), InputError);

    CHECK(superprism_enumerator(4).evaluate(Point::constant(superprism(4), 1)) == 4096);
    CHECK(superprism_enumerator(5).evaluate(Point::constant(superprism(5), 1)) == 40960);
    CHECK_THROWS_AS(superprism_enumerator(3), InputError);

    Rng rng(12);
    for (std::uint32_t n = 4; n <= 6; ++n) {
        const Graph g = superprism(n);
        const Enumerator e = superprism_enumerator(n);
        CHECK(e.total_degree() == 2 * n - 2);
        for (int t = 0; t < 10; ++t) {
            Point p;
            for (VertexId v : g.vertices()) p.set(v, random_rational(rng, 1, 50, 9));
            CHECK(e.evaluate(p) == enumerator_value(g, p));
        }
    }
}

TEST_CASE("compose examples") {
    // K2 with K2: the composed graph is again K2
    auto k = compose(complete(2), vid(1), Enumerator(), complete(2), vid(1), Enumerator());
    CHECK(k.composition.graph.vertex_count() == 2);
    CHECK(k.enumerator == Enumerator());

    // composing with K3 at a vertex adds a true twin
    const Graph g = cycle(4);
    auto t = compose(g, vid(0), factor_enumerator(g), complete(3), vid(2), factor_enumerator(complete(3)));
    const Graph& h = t.composition.graph;
    CHECK(h.vertex_count() == 5);
    CHECK(t.enumerator.evaluate(Point::constant(h, 1)) == mpq_class(tree_count(h)));
    CHECK(t.enumerator.expand() == oracle::subset_enumerator(h));

    CHECK_THROWS_AS(compose_enumerators(Enumerator(), vid(0), {}, Enumerator(), vid(1), {}), InputError);
}

TEST_CASE("composition theorem on random pairs") {
    Rng rng(2024);
    std::uniform_int_distribution<std::uint32_t> size(2, 6);
    for (int t = 0; t < 60; ++t) {
        const Graph g1 = random_connected_graph(size(rng), 0.5, rng);
        const Graph g2 = random_connected_graph(size(rng), 0.5, rng);
        const VertexId v1 = g1.vertices()[rng() % g1.vertex_count()];
        const VertexId v2 = g2.vertices()[rng() % g2.vertex_count()];
        auto c = compose(g1, v1, graph_enumerator(g1), g2, v2, graph_enumerator(g2));
        const Graph& h = c.composition.graph;
        if (h.vertex_count() < 2) continue;
        for (int k = 0; k < 3; ++k) {
            Point p = random_positive_point(h, rng);
            CHECK(c.enumerator.evaluate(p) == enumerator_value(h, p));
        }
    }
}

TEST_CASE("two wheels joined at their apexes") {
    const Graph w = wheel(5);
    const VertexId apex = vid(5);
    auto c = compose(w, apex, graph_enumerator(w), w, apex, graph_enumerator(w));
    const Graph& h = c.composition.graph;
    CHECK(h.vertex_count() == 10);
    CHECK(h.edge_count() == 5 + 5 + 25);
    CHECK(c.enumerator.factors().empty());
    CHECK(c.enumerator.remainder().homogeneous_degree() == 8);
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
        Point p = random_positive_point(h, rng);
        CHECK(c.enumerator.evaluate(p) == enumerator_value(h, p));
    }
}

TEST_CASE("extension enumerator") {
    auto k1 = extension_enumerator(complete(1));
    CHECK(k1.factored);
    CHECK(k1.enumerator == Enumerator());

    auto k2 = extension_enumerator(complete(2));
    CHECK(k2.factored);
    CHECK(k2.enumerator == product_of({{sum_of({0, 1, 2}), 1}}));

    auto p4 = extension_enumerator(path(4));
    CHECK_FALSE(p4.factored);
    CHECK(p4.enumerator.expand() == oracle::subset_enumerator(p4.extension));
}

TEST_CASE("extension identity on connected graphs up to 6 vertices") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        auto ext = extension_enumerator(g);
        SparsePoly rhs = ext.enumerator.expand().with_zero(ext.apex);
        std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
        SparsePoly lhs = oracle::subset_enumerator(g) * SparsePoly::from_linear(LinearForm::sum(vs));
        CHECK(lhs == rhs);
        CHECK(ext.factored == cograph(g));
        CHECK(extension_identity_check(g));
    }
}

TEST_CASE("gao_liu_enumerator") {
    const VertexId apex = vid(0);
    CHECK(gao_liu_enumerator(Permutation::parse("21"), apex) == product_of({{sum_of({0, 1, 2}), 1}}));
    CHECK(same_factorization(gao_liu_enumerator(Permutation::identity(3), apex),
                             factor_enumerator(relabeled(cone(edgeless(3)).graph, {{vid(0), vid(1)},
                                                                                    {vid(1), vid(2)},
                                                                                    {vid(2), vid(3)},
                                                                                    {vid(3), vid(0)}}))));
    CHECK(gao_liu_enumerator(Permutation::identity(3), apex) == product_of({{x(0), 2}}));
    CHECK_THROWS_AS(gao_liu_enumerator(Permutation::parse("2413"), apex), InputError);
    CHECK_THROWS_AS(gao_liu_enumerator(Permutation::parse("21"), vid(1)), InputError);

    const Permutation w = Permutation::parse("2143");
    const Enumerator gl = gao_liu_enumerator(w, apex);
    CHECK(gl.factors().size() == 3);
    const Graph cone_w = [&] {
        GraphBuilder b(inversion_graph(w));
        b.add_vertex(apex);
        for (std::uint32_t i = 1; i <= 4; ++i) b.add_edge(apex, vid(i));
        return b.build();
    }();
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        Point p = random_positive_point(cone_w, rng);
        CHECK(gl.evaluate(p) == enumerator_value(cone_w, p));
    }
}

TEST_CASE("gao_liu agrees with the cone factorization for separable permutations up to 6") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        for (const Permutation& w : separable_permutations(n)) {
            const Graph inv = inversion_graph(w);
            GraphBuilder b(inv);
            b.add_vertex(vid(0));
            for (VertexId v : inv.vertices()) b.add_edge(vid(0), v);
            const Graph c = b.build();
            const Enumerator gl = gao_liu_enumerator(w, vid(0));
            CHECK_MESSAGE(same_factorization(gl, factor_enumerator(c)), w.to_string());
        }
    }
}

TEST_CASE("serialization round-trips") {
    std::vector<Enumerator> samples = {Enumerator(), Enumerator::constant(0), Enumerator::constant(-7),
                                       factor_enumerator(complete_bipartite(2, 3)), cycle_enumerator(5),
                                       superprism_enumerator(4), graph_enumerator(wheel(5))};
    for (const Enumerator& e : samples) {
        const std::string text = e.serialize();
        CHECK(Enumerator::parse(text) == e);
        CHECK(Enumerator::parse(text).serialize() == text);
    }
    CHECK(factor_enumerator(path(3)).serialize() == "constant 1\nfactor 1 : 1*x1\n");
    CHECK_THROWS_AS(Enumerator::parse("constant 1\nfactor 1 : 2*x1\n"), InputError);
    CHECK_THROWS_AS(Enumerator::parse("factor 1 : 1*x1\n"), InputError);
    CHECK_THROWS_AS(Enumerator::parse("constant 1\nterm 1 : x2 x1\n"), InputError);
    CHECK_THROWS_AS(Enumerator::parse("constant x\n"), InputError);
}
