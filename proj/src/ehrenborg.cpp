#include "dhspan/ehrenborg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "dhspan/corpus.hpp"
#include "dhspan/enumerator.hpp"
#include "dhspan/errors.hpp"
#include "dhspan/families.hpp"

namespace dhspan {

namespace {

EhrenborgReport make_report(const Graph& g, mpq_class lhs, mpq_class rhs) {
    EhrenborgReport r;
    r.graph_hash = graph_hash(g);
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.holds = r.lhs <= r.rhs;
    if (r.rhs != 0) r.ratio = r.lhs / r.rhs;
    return r;
}

void require_connected_bipartite(const Graph& g, const BipartitionCert& cert) {
    validate_bipartition(g, cert);
    if (g.vertex_count() < 2 || !is_connected(g)) throw InputError("Ehrenborg checks need a connected bipartite graph");
}

mpq_class enumerator_at(const Graph& g, const Point& x, const EnumerationLimits& limits) {
    bool has_zero = false;
    for (VertexId v : g.vertices()) has_zero = has_zero || x.at(v) == 0;
    if (!has_zero) return enumerator_value(g, x);
    try {
        return brute_force_enumerator(g, limits).evaluate(x);
    } catch (const EnvelopeExceeded&) {
        if (is_distance_hereditary(g)) return factor_enumerator(g).evaluate(x);
        throw EnvelopeExceeded("points with zero coordinates are unsupported at this scale for non-DH graphs");
    }
}

}  // namespace

std::string EhrenborgReport::to_line() const {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << graph_hash << std::dec << ' ' << vertices << ' ' << edges
       << ' ' << lhs << ' ' << rhs << ' ';
    if (ratio)
        os << *ratio;
    else
        os << '-';
    os << ' ' << (holds ? "holds" : "VIOLATED");
    return os.str();
}

EhrenborgReport check_numeric(const Graph& g, const BipartitionCert& cert) {
    require_connected_bipartite(g, cert);
    mpz_class lhs = tree_count(g) * static_cast<unsigned long>(cert.part1.size()) *
                    static_cast<unsigned long>(cert.part2.size());
    mpz_class rhs = 1;
    for (VertexId v : g.vertices()) rhs *= static_cast<unsigned long>(g.degree(v));
    return make_report(g, mpq_class(lhs), mpq_class(rhs));
}

EhrenborgReport check_polynomial(const Graph& g, const BipartitionCert& cert, const Point& x,
                                 const EnumerationLimits& limits) {
    require_connected_bipartite(g, cert);
    for (VertexId v : g.vertices())
        if (x.at(v) < 0) throw InputError("Ehrenborg's polynomial form needs nonnegative coordinates");
    mpq_class s1 = 0, s2 = 0;
    for (VertexId v : cert.part1) s1 += x.at(v);
    for (VertexId v : cert.part2) s2 += x.at(v);
    mpq_class rhs = 1;
    for (VertexId v : g.vertices()) {
        mpq_class around = 0;
        for (VertexId u : g.neighbors(v)) around += x.at(u);
        rhs *= around;
    }
    return make_report(g, enumerator_at(g, x, limits) * s1 * s2, rhs);
}

BlowUpCheck blowup_identity(const Graph& g, const std::map<VertexId, std::int64_t>& z, std::size_t max_vertices) {
    if (g.vertex_count() < 2 || !is_connected(g)) throw InputError("blow-up identity needs a connected graph");
    std::int64_t total = 0;
    for (VertexId v : g.vertices()) {
        auto it = z.find(v);
        if (it == z.end() || it->second <= 0) throw InputError("blow-up multiplicities must be positive");
        total += it->second;
        if (total > static_cast<std::int64_t>(max_vertices))
            throw EnvelopeExceeded("blow-up exceeds " + std::to_string(max_vertices) + " vertices");
    }
    BlowUpCheck out;
    out.trees = tree_count(blow_up(g, z).graph);

    Point point;
    for (VertexId v : g.vertices()) point.set(v, mpq_class(mpz_class(static_cast<long>(z.at(v)))));
    out.product = enumerator_value(g, point);
    for (VertexId v : g.vertices()) {
        mpz_class around = 0;
        for (VertexId u : g.neighbors(v)) around += static_cast<long>(z.at(u));
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), around.get_mpz_t(), static_cast<unsigned long>(z.at(v) - 1));
        out.product *= mpq_class(pw);
    }
    out.equal = mpq_class(out.trees) == out.product;
    return out;
}

bool blowup_identity_check(const Graph& g, const std::map<VertexId, std::int64_t>& z, std::size_t max_vertices) {
    return blowup_identity(g, z, max_vertices).equal;
}

std::vector<EhrenborgReport> search_counterexample(const SearchOptions& o) {
    if (o.min_vertices < 2 || o.max_vertices < o.min_vertices) throw InputError("bad vertex range");
    if (!(o.edge_density > 0.0 && o.edge_density <= 1.0)) throw InputError("edge density must be in (0, 1]");

    Rng rng(o.seed);
    std::uniform_int_distribution<std::uint32_t> size(o.min_vertices, o.max_vertices);
    std::vector<EhrenborgReport> reports;
    auto check = [&](const Graph& g, const BipartitionCert& parts) {
        if (g.vertex_count() <= o.polynomial_max_vertices)
            reports.push_back(check_polynomial(g, parts, random_nonnegative_point(g, rng)));
        else
            reports.push_back(check_numeric(g, parts));
    };
    for (std::size_t t = 0; t < o.trials; ++t) {
        auto sample = random_connected_bipartite(size(rng), o.edge_density, rng);
        check(sample.graph, sample.parts);
    }
    if (o.ferrers_max_vertices >= 2)
        for (const auto& d : ferrers_diagrams_up_to(o.ferrers_max_vertices)) {
            auto fy = ferrers_young(d);
            check(fy.graph, fy.parts);
        }

    std::stable_sort(reports.begin(), reports.end(), [](const EhrenborgReport& a, const EhrenborgReport& b) {
        if (a.ratio.has_value() != b.ratio.has_value()) return a.ratio.has_value();
        if (a.ratio && *a.ratio != *b.ratio) return *a.ratio > *b.ratio;
        return a.graph_hash < b.graph_hash;
    });
    if (o.top_k > 0 && reports.size() > o.top_k) {
        std::vector<EhrenborgReport> kept(reports.begin(), reports.begin() + static_cast<std::ptrdiff_t>(o.top_k));
        for (std::size_t i = o.top_k; i < reports.size(); ++i)
            if (!reports[i].holds) kept.push_back(reports[i]);
        reports = std::move(kept);
    }
    return reports;
}

}  // namespace dhspan
