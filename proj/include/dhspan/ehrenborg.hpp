#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dhspan/graph.hpp"
#include "dhspan/linalg.hpp"
#include "dhspan/polynomial.hpp"

namespace dhspan {

/// One side-by-side evaluation of Ehrenborg's inequality lhs <= rhs.
struct EhrenborgReport {
    std::uint64_t graph_hash = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    mpq_class lhs;
    mpq_class rhs;
    bool holds = true;
    std::optional<mpq_class> ratio;  // lhs / rhs when rhs != 0

    /// "hash n m lhs rhs ratio holds", one line, no newline.
    std::string to_line() const;
};

/// τ(G)·|V1|·|V2| against Π deg(v).
EhrenborgReport check_numeric(const Graph& g, const BipartitionCert& cert);

/// P_G(x)·(Σ_{V1} x)(Σ_{V2} x) against Π_v Σ_{u∈N(v)} x_u for x >= 0.
/// Points with a zero coordinate are evaluated by brute force when the
/// graph is within `limits`, by the linear factorization when it is
/// distance-hereditary, and rejected with EnvelopeExceeded otherwise.
EhrenborgReport check_polynomial(const Graph& g, const BipartitionCert& cert, const Point& x,
                                 const EnumerationLimits& limits = {});

struct BlowUpCheck {
    mpz_class trees;     // τ(blow_up(g, z))
    mpq_class product;   // P_G(z) · Π_i (Σ_{j∈N(i)} z_j)^{z_i - 1}
    bool equal;
};

inline constexpr std::size_t kBlowUpVertexLimit = 200;

/// EnvelopeExceeded when the blow-up would exceed `max_vertices`.
BlowUpCheck blowup_identity(const Graph& g, const std::map<VertexId, std::int64_t>& z,
                            std::size_t max_vertices = kBlowUpVertexLimit);
bool blowup_identity_check(const Graph& g, const std::map<VertexId, std::int64_t>& z,
                           std::size_t max_vertices = kBlowUpVertexLimit);

struct SearchOptions {
    std::uint32_t min_vertices = 2;
    std::uint32_t max_vertices = 8;
    double edge_density = 0.5;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    /// Graphs up to this many vertices are tested in polynomial form at a
    /// random nonnegative point; larger ones at the all-ones point.
    std::uint32_t polynomial_max_vertices = 9;
    /// Also sweep every Ferrers–Young graph with rows+columns <= this (0: off).
    std::uint32_t ferrers_max_vertices = 0;
    /// Keep only the top-k reports (0: keep all). Violations are always kept.
    std::size_t top_k = 0;
};

/// Reports sorted by ratio descending, ties by graph hash. Deterministic for
/// a fixed seed.
std::vector<EhrenborgReport> search_counterexample(const SearchOptions& options);

}  // namespace dhspan
