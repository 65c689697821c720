#include <doctest.h>

#include "dhspan/corpus.hpp"
#include "dhspan/errors.hpp"
#include "dhspan/families.hpp"
#include "dhspan/linalg.hpp"
#include "oracle.hpp"

using namespace dhspan;

namespace {

Point point_of(const Graph& g, std::initializer_list<long> values) {
    Point p;
    auto it = values.begin();
    for (VertexId v : g.vertices()) p.set(v, mpq_class(mpz_class(*it++)));
    return p;
}

mpq_class product_of(const Graph& g, const Point& x) {
    mpq_class out = 1;
    for (VertexId v : g.vertices()) out *= x.at(v);
    return out;
}

}  // namespace

TEST_CASE("laplacian") {
    IntMatrix k2 = laplacian(complete(2));
    CHECK(k2(0, 0) == 1);
    CHECK(k2(0, 1) == -1);
    CHECK(k2(1, 0) == -1);
    CHECK(k2(1, 1) == 1);

    RatMatrix w = weighted_laplacian(complete(2), point_of(complete(2), {2, 3}));
    CHECK(w(0, 0) == 6);
    CHECK(w(0, 1) == -6);
    CHECK(w(1, 1) == 6);

    IntMatrix c3 = laplacian(cycle(3));
    for (std::size_t i = 0; i < 3; ++i) CHECK(c3(i, i) == 2);

    CHECK_THROWS_AS(weighted_laplacian(complete(2), Point{}), InputError);
}

TEST_CASE("determinants agree across integer and rational elimination") {
    Rng rng(4);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 7);
        IntMatrix a(n);
        RatMatrix q(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int x = t % 5 == 0 && j == 0 ? 0 : entry(rng);  // exercise pivoting
                a(i, j) = x;
                q(i, j) = x;
            }
        CHECK(mpq_class(determinant(a)) == determinant(q));
    }
    IntMatrix m(3);
    int vals[3][3] = {{2, -3, 1}, {2, 0, -1}, {1, 4, 5}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = vals[i][j];
    CHECK(determinant(m) == 49);
    CHECK(determinant(IntMatrix(0)) == 1);
}

TEST_CASE("tree_count") {
    CHECK(tree_count(cycle(4)) == 4);
    CHECK(tree_count(superprism(4)) == 4096);
    CHECK(tree_count(Graph::from_edges(4, std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {2, 3}})) == 0);
    CHECK(tree_count(complete(6)) == 1296);
    CHECK(tree_count(complete(1)) == 1);
    // τ(S8) = 8 · 2^22
    CHECK(tree_count(superprism(8)) == mpz_class(8) * (mpz_class(1) << 22));
}

TEST_CASE("tree_count does not depend on the deleted row") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(7, 0.5, rng);
        mpz_class first = tree_count(g, 0);
        for (std::size_t i = 1; i < g.vertex_count(); ++i) CHECK(tree_count(g, i) == first);
    }
}

TEST_CASE("weighted_tree_sum") {
    CHECK(weighted_tree_sum(complete(2), point_of(complete(2), {2, 3})) == 6);
    CHECK(enumerator_value(complete(2), point_of(complete(2), {2, 3})) == 1);
    CHECK(weighted_tree_sum(cycle(4), Point::constant(cycle(4), 1)) == 4);
    Point k4 = point_of(complete(4), {1, 1, 1, 2});
    CHECK(weighted_tree_sum(complete(4), k4) == 50);
    // the oracle agrees: Π x · P_K4(x) = 2 · 25
    CHECK(product_of(complete(4), k4) * oracle::subset_enumerator(complete(4)).evaluate(k4) == 50);
    CHECK_THROWS_AS(enumerator_value(cycle(4), Point::constant(cycle(4), 0)), InputError);
}

TEST_CASE("weighted_tree_sum matches the subset oracle at random points") {
    Rng rng(8);
    std::uniform_int_distribution<std::uint32_t> size(2, 7);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(size(rng), 0.6, rng);
        Point x;
        for (VertexId v : g.vertices()) {
            mpq_class q = random_rational(rng, -20, 20, 7);
            x.set(v, q == 0 ? mpq_class(1) : q);
        }
        CHECK(weighted_tree_sum(g, x) == product_of(g, x) * oracle::subset_enumerator(g).evaluate(x));
    }
}

TEST_CASE("det_rank_one_check") {
    auto r = det_rank_one_check(complete(2), {1, 1}, {1, 1});
    CHECK(r.lhs == 4);
    CHECK(r.rhs == 4);
    CHECK(r.equal);

    auto z = det_rank_one_check(cycle(5), std::vector<mpq_class>(5, 0), {1, 2, 3, 4, 5});
    CHECK(z.lhs == 0);
    CHECK(z.rhs == 0);
    CHECK(z.equal);

    Rng rng(50);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int t = 0; t < 50; ++t) {
        std::vector<mpq_class> a(4), b(4);
        for (auto& x : a) x = entry(rng);
        for (auto& x : b) x = entry(rng);
        CHECK(det_rank_one_check(cycle(4), a, b).equal);
    }
    CHECK_THROWS_AS(det_rank_one_check(cycle(4), {1, 2}, {1, 2, 3, 4}), InputError);
}

TEST_CASE("brute_force_enumerator") {
    SparsePoly p3 = brute_force_enumerator(path(3));
    CHECK(p3 == SparsePoly::from_linear(LinearForm::variable(vid(1))));

    SparsePoly c4 = brute_force_enumerator(cycle(4));
    SparsePoly expected;
    expected.add_term({{vid(2), 1}, {vid(3), 1}}, 1);
    expected.add_term({{vid(0), 1}, {vid(3), 1}}, 1);
    expected.add_term({{vid(0), 1}, {vid(1), 1}}, 1);
    expected.add_term({{vid(1), 1}, {vid(2), 1}}, 1);
    CHECK(c4 == expected);

    SparsePoly k4 = brute_force_enumerator(complete(4));
    const Graph k4g = complete(4);
    std::vector<VertexId> all(k4g.vertices().begin(), k4g.vertices().end());
    CHECK(k4 == SparsePoly::from_linear(LinearForm::sum(all)).pow(2));
    CHECK(k4.evaluate(Point::constant(complete(4), 1)) == 16);

    CHECK(brute_force_enumerator(Graph::from_edges(3, std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}}))
              .is_zero());
    CHECK_THROWS_AS(brute_force_enumerator(complete(1)), InputError);
    CHECK_THROWS_AS(brute_force_enumerator(complete(10)), EnvelopeExceeded);
    CHECK_NOTHROW(brute_force_enumerator(superprism(5)));  // 10 vertices but only 40960 trees
    CHECK_THROWS_AS(brute_force_enumerator(superprism(5), EnumerationLimits{9, 1000}), EnvelopeExceeded);
}

TEST_CASE("brute force agrees with the subset oracle and with Kirchhoff") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        SparsePoly p = brute_force_enumerator(g);
        CHECK(p == oracle::subset_enumerator(g));
        CHECK(p.evaluate(Point::constant(g, 1)) == mpq_class(tree_count(g)));
        CHECK(p.homogeneous_degree() == static_cast<int>(g.vertex_count()) - 2);
        for (const auto& [m, c] : p.terms()) CHECK(c > 0);
    }
}
