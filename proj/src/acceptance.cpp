#include "dhspan/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "dhspan/corpus.hpp"
#include "dhspan/ehrenborg.hpp"
#include "dhspan/enumerator.hpp"
#include "dhspan/errors.hpp"
#include "dhspan/families.hpp"
#include "dhspan/recognition.hpp"

namespace dhspan {

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome(Rng&, std::uint64_t seed)> body;
};

/// Connected graphs up to 6 vertices plus 2000 random 7-vertex graphs:
/// half sampled from G(7, p), half grown by random pendant/twin steps.
std::vector<Graph> recognition_corpus(std::uint64_t seed) {
    Rng rng(seed ^ 0x636f72707573ULL);
    std::vector<Graph> out = connected_graphs_up_to(6);
    std::uniform_real_distribution<double> density(0.25, 0.75);
    for (int i = 0; i < 1000; ++i) out.push_back(random_connected_graph(7, density(rng), rng));
    for (int i = 0; i < 1000; ++i) out.push_back(random_dh_graph(7, rng));
    return out;
}

Graph cone_at_zero(const Graph& g) {
    GraphBuilder b(g);
    b.add_vertex(vid(0));
    for (VertexId v : g.vertices()) b.add_edge(vid(0), v);
    return b.build();
}

std::vector<Permutation> separable_permutations(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    std::vector<Permutation> out;
    do {
        Permutation w(v);
        if (is_separable(w)) out.push_back(std::move(w));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::string counted(std::size_t bad, std::size_t total, const std::string& what) {
    std::ostringstream os;
    os << bad << " mismatches over " << total << ' ' << what;
    return os.str();
}

Outcome superprism_counts(Rng&, std::uint64_t) {
    std::ostringstream os;
    bool ok = true;
    for (std::uint32_t n = 4; n <= 10; ++n) {
        const mpz_class expected = mpz_class(n) << (3 * n - 2);
        const Graph g = superprism(n);
        const mpq_class by_enumerator = superprism_enumerator(n).evaluate(Point::constant(g, 1));
        const mpz_class by_kirchhoff = tree_count(g);
        if (by_enumerator != expected || by_kirchhoff != expected) {
            ok = false;
            os << "n=" << n << " expected " << expected << " got " << by_enumerator << '/' << by_kirchhoff << "; ";
        }
    }
    if (ok) os << "n=4..10 agree two ways, up to tau(S10)=" << (mpz_class(10) << 28);
    return {ok, os.str()};
}

Outcome factorization_oracle(Rng&, std::uint64_t seed) {
    std::size_t dh = 0, bad = 0;
    for (const Graph& g : recognition_corpus(seed)) {
        if (!is_distance_hereditary(g)) continue;
        ++dh;
        const Enumerator e = factor_enumerator(g);
        if (!e.fully_linear() || e.expand() != brute_force_enumerator(g)) ++bad;
    }
    return {bad == 0 && dh > 0, counted(bad, dh, "distance-hereditary graphs")};
}

Outcome triple_equivalence(Rng&, std::uint64_t seed) {
    std::size_t total = 0, bad = 0, dh = 0;
    for (const Graph& g : recognition_corpus(seed)) {
        ++total;
        const bool by_elimination = is_distance_hereditary(g);
        const auto witness = find_forbidden(g);
        const bool by_forbidden = !witness.has_value();
        const bool by_distances = four_point_check(g);
        if (witness && !verify_witness(g, *witness)) ++bad;
        if (by_elimination != by_forbidden || by_forbidden != by_distances) ++bad;
        if (by_elimination) {
            ++dh;
            if (replay(std::get<ConstructionSequence>(recognize_dh(g))) != g) ++bad;
        }
    }
    std::ostringstream os;
    os << counted(bad, total, "graphs") << " (" << dh << " distance-hereditary)";
    return {bad == 0, os.str()};
}

Outcome composition_theorem(Rng& rng, std::uint64_t) {
    std::uniform_int_distribution<std::uint32_t> size(2, 6);
    std::uniform_real_distribution<double> density(0.3, 0.8);
    std::size_t bad = 0, points = 0, factored = 0;
    for (int t = 0; t < 200; ++t) {
        const Graph g1 = t % 2 ? random_dh_graph(size(rng), rng) : random_connected_graph(size(rng), density(rng), rng);
        const Graph g2 = random_connected_graph(size(rng), density(rng), rng);
        const VertexId v1 = g1.vertices()[rng() % g1.vertex_count()];
        const VertexId v2 = g2.vertices()[rng() % g2.vertex_count()];
        const auto c = compose(g1, v1, graph_enumerator(g1), g2, v2, graph_enumerator(g2));
        if (c.enumerator.fully_linear()) ++factored;
        for (int k = 0; k < 5; ++k) {
            const Point p = random_positive_point(c.composition.graph, rng);
            ++points;
            if (c.enumerator.evaluate(p) != enumerator_value(c.composition.graph, p)) ++bad;
        }
    }
    std::ostringstream os;
    os << counted(bad, points, "points") << " on 200 pairs (" << factored << " fully linear)";
    return {bad == 0, os.str()};
}

Outcome two_wheels(Rng& rng, std::uint64_t) {
    const Graph w = wheel(5);
    const VertexId apex = vid(5);
    const Enumerator e = graph_enumerator(w);
    const auto c = compose(w, apex, e, w, apex, e);
    const Graph& h = c.composition.graph;

    // The two sides of the composition, kept apart.
    std::vector<VertexId> n1 = neighborhood(w, apex), n2;
    for (VertexId u : neighborhood(w, apex)) n2.push_back(c.composition.relabel.at(u));
    LinearForm s1, s2;
    for (VertexId u : n1) s1 += LinearForm::variable(u);
    for (VertexId u : n2) s2 += LinearForm::variable(u);
    const Enumerator left = substitute(e, apex, s2);
    const Enumerator right = substitute(e.relabeled(c.composition.relabel), c.composition.relabel.at(apex), s1);

    std::ostringstream os;
    bool ok = h.vertex_count() == 10 && h.edge_count() == 35;
    for (const Enumerator* side : {&left, &right}) {
        const bool quartic = side->factors().empty() && side->remainder().homogeneous_degree() == 4;
        ok = ok && quartic;
        os << side->remainder().term_count() << (quartic ? " terms quartic, " : " terms NOT quartic, ");
    }
    Enumerator product = left;
    product.multiply(right);
    ok = ok && product == c.enumerator;
    std::size_t bad = 0;
    for (int k = 0; k < 20; ++k) {
        const Point p = random_positive_point(h, rng);
        if (c.enumerator.evaluate(p) != enumerator_value(h, p)) ++bad;
    }
    os << "product " << (product == c.enumerator ? "equals" : "DIFFERS from") << " the composition; "
       << counted(bad, 20, "points");
    return {ok && bad == 0, os.str()};
}

Outcome klee_stamps(Rng& rng, std::uint64_t) {
    std::uniform_int_distribution<std::uint32_t> size(1, 8);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    std::size_t bad = 0;
    for (int t = 0; t < 500; ++t) {
        const Graph g = random_graph(size(rng), density(rng), rng);
        std::vector<mpq_class> a(g.vertex_count()), b(g.vertex_count());
        for (auto& x : a) x = entry(rng);
        for (auto& x : b) x = entry(rng);
        if (!det_rank_one_check(g, a, b).equal) ++bad;
    }
    return {bad == 0, counted(bad, 500, "triples")};
}

Outcome extension_identity(Rng&, std::uint64_t) {
    std::size_t total = 0, bad = 0;
    for (const Graph& g : connected_graphs_up_to(6)) {
        ++total;
        if (!extension_identity_check(g)) ++bad;
    }
    return {bad == 0, counted(bad, total, "graphs")};
}

Outcome cograph_dichotomy(Rng& rng, std::uint64_t) {
    std::size_t total = 0, bad = 0, linear = 0;
    for (const Graph& g : all_graphs_up_to(7)) {
        ++total;
        const Extended c = cone(g);
        const bool factors = is_distance_hereditary(c.graph);
        if (factors) {
            ++linear;
            const Enumerator e = factor_enumerator(c.graph);
            const Point p = random_positive_point(c.graph, rng);
            if (!e.fully_linear() || e.evaluate(p) != enumerator_value(c.graph, p)) ++bad;
        }
        if (factors != cograph(g)) ++bad;
    }
    std::ostringstream os;
    os << counted(bad, total, "graphs") << " (" << linear << " cographs)";
    return {bad == 0, os.str()};
}

Outcome gao_liu(Rng& rng, std::uint64_t) {
    std::size_t total = 0, bad = 0;
    for (std::uint32_t n = 1; n <= 7; ++n) {
        for (const Permutation& w : separable_permutations(n)) {
            ++total;
            const Graph c = cone_at_zero(inversion_graph(w));
            const Enumerator gl = gao_liu_enumerator(w, vid(0));
            bool ok = same_factorization(gl, factor_enumerator(c));
            for (int k = 0; k < 5 && ok; ++k) {
                const Point p = random_positive_point(c, rng);
                ok = gl.evaluate(p) == enumerator_value(c, p);
            }
            if (!ok) ++bad;
        }
    }
    return {bad == 0, counted(bad, total, "separable permutations")};
}

Outcome ehrenborg_support(Rng& rng, std::uint64_t) {
    std::ostringstream os;
    std::vector<std::string> violations;
    auto record = [&](const EhrenborgReport& r, const char* where) {
        if (!r.holds) violations.push_back(std::string(where) + ' ' + r.to_line());
    };

    std::uniform_int_distribution<std::uint32_t> size(2, 12);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    std::size_t polynomial_checks = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto s = random_connected_bipartite(size(rng), density(rng), rng);
        record(check_numeric(s.graph, s.parts), "numeric");
        if (s.graph.vertex_count() <= 9)
            for (int k = 0; k < 3; ++k) {
                ++polynomial_checks;
                record(check_polynomial(s.graph, s.parts, random_nonnegative_point(s.graph, rng)), "polynomial");
            }
    }

    std::size_t fy_total = 0, fy_bad = 0;
    for (const FerrersDiagram& d : ferrers_diagrams_up_to(9)) {
        ++fy_total;
        const auto fy = ferrers_young(d);
        bool equal = check_numeric(fy.graph, fy.parts).ratio == mpq_class(1) &&
                     check_polynomial(fy.graph, fy.parts, Point::constant(fy.graph, 1)).ratio == mpq_class(1);
        for (int k = 0; k < 10; ++k)
            equal = equal && check_polynomial(fy.graph, fy.parts, random_positive_point(fy.graph, rng)).ratio ==
                                 mpq_class(1);
        if (!equal) ++fy_bad;
    }

    std::size_t blow_bad = 0;
    std::uniform_int_distribution<std::uint32_t> base(2, 6);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_connected_graph(base(rng), density(rng), rng);
        std::map<VertexId, std::int64_t> z;
        std::int64_t room = 10 - static_cast<std::int64_t>(g.vertex_count());
        for (VertexId v : g.vertices()) {
            const std::int64_t extra = room > 0 ? static_cast<std::int64_t>(rng() % (room + 1)) : 0;
            z[v] = 1 + std::min<std::int64_t>(extra, 2);
            room -= z[v] - 1;
        }
        if (!blowup_identity_check(g, z, 10)) ++blow_bad;
    }

    os << "10000 bipartite graphs, " << polynomial_checks << " polynomial points, " << violations.size()
       << " violations; Ferrers-Young " << counted(fy_bad, fy_total, "diagrams") << "; blow-up "
       << counted(blow_bad, 200, "instances");
    for (const auto& v : violations) os << "\n    COUNTEREXAMPLE " << v;
    return {violations.empty() && fy_bad == 0 && blow_bad == 0, os.str()};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "superprism tree counts", 5, superprism_counts},
        {2, "factorization equals brute force", 60, factorization_oracle},
        {3, "recognizer triple equivalence", 120, triple_equivalence},
        {4, "composition theorem", 60, composition_theorem},
        {5, "two wheels joined at the apexes", 30, two_wheels},
        {6, "rank-one determinant identity", 30, klee_stamps},
        {7, "extension identity", 60, extension_identity},
        {8, "cone factors iff cograph", 120, cograph_dichotomy},
        {9, "rooted-forest formula for separable permutations", 120, gao_liu},
        {10, "Ehrenborg inequalities", 300, ehrenborg_support},
    };
    return all;
}

}  // namespace

std::string CriterionResult::to_line() const {
    std::ostringstream os;
    os << (passed ? "PASS" : "FAIL") << ' ' << std::setw(2) << id << ' ' << name << " (" << std::fixed
       << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << limit_seconds
       << " s): " << detail;
    return os.str();
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (const Criterion& c : criteria()) {
        Rng rng(seed * 1000003u + static_cast<std::uint64_t>(c.id));
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.limit_seconds = c.limit_seconds;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = c.body(rng, seed);
            r.passed = o.passed;
            r.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.limit_seconds) {
            r.passed = false;
            r.detail += "; exceeded time limit";
        }
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace dhspan
