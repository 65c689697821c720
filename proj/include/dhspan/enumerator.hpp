#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dhspan/families.hpp"
#include "dhspan/graph.hpp"
#include "dhspan/linalg.hpp"
#include "dhspan/polynomial.hpp"
#include "dhspan/recognition.hpp"

namespace dhspan {

/// constant · Π factor^mult · remainder.
///
/// Factors are canonical linear forms (primitive, positive leading
/// coefficient) and are merged when equal, so each appears once with its
/// multiplicity. The remainder defaults to 1. A zero enumerator has
/// constant 0, no factors and remainder 1.
class Enumerator {
public:
    struct Factor {
        LinearForm form;
        std::uint32_t multiplicity = 1;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    Enumerator() = default;  // the constant 1
    static Enumerator constant(const mpz_class& c);
    static Enumerator from_poly(const SparsePoly& p);

    const mpz_class& constant_factor() const { return constant_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const SparsePoly& remainder() const { return remainder_; }
    bool is_zero() const { return constant_ == 0; }
    /// Remainder is exactly 1: a pure product of linear forms.
    bool fully_linear() const { return remainder_ == SparsePoly::constant(1); }
    std::uint32_t total_degree() const;

    void multiply(const LinearForm& f, std::uint32_t multiplicity = 1);
    void multiply(const SparsePoly& p);
    void multiply(const Enumerator& other);

    Enumerator substituted(VertexId v, const LinearForm& f) const;
    Enumerator relabeled(const std::map<VertexId, VertexId>& map) const;

    /// Exact value; InputError when a variable has no coordinate.
    mpq_class evaluate(const Point& p) const;
    /// Multiplies everything out; EnvelopeExceeded past `max_terms`.
    SparsePoly expand(std::size_t max_terms = 1000000) const;

    /// Line-oriented text, see README. parse(serialize()) == *this.
    std::string serialize() const;
    static Enumerator parse(const std::string& text);
    /// Human-readable product, e.g. "(x0 + x1)^2 (x2 + x3 + x4)".
    std::string pretty() const;

    friend bool operator==(const Enumerator&, const Enumerator&) = default;

private:
    void normalize();

    mpz_class constant_ = 1;
    std::vector<Factor> factors_;
    SparsePoly remainder_ = SparsePoly::constant(1);
};

/// Same constant, same remainder, same factor multiset (order ignored).
bool same_factorization(const Enumerator& a, const Enumerator& b);

/// x_v ↦ f in every factor and in the remainder.
Enumerator substitute(const Enumerator& e, VertexId v, const LinearForm& f);

/// Product of enumerators of two marked graphs, with x_{v1} ↦ Σ_{u∈n2} x_u
/// in e1 and x_{v2} ↦ Σ_{u∈n1} x_u in e2. All ids (including e2, v2, n2)
/// must already live in the composed graph's id space.
Enumerator compose_enumerators(const Enumerator& e1, VertexId v1, std::span<const VertexId> n1, const Enumerator& e2,
                               VertexId v2, std::span<const VertexId> n2);

struct ComposedEnumerator {
    Composition composition;
    Enumerator enumerator;
};
/// compose_graphs plus compose_enumerators with the relabelling applied.
ComposedEnumerator compose(const Graph& g1, VertexId v1, const Enumerator& e1, const Graph& g2, VertexId v2,
                           const Enumerator& e2);

/// Replays a construction sequence into a product of linear forms.
Enumerator enumerator_from_construction(const ConstructionSequence& seq);
/// Linear factorization of a distance-hereditary graph's enumerator.
/// InputError when g is not distance-hereditary or has < 2 vertices.
Enumerator factor_enumerator(const Graph& g);

/// Factored form when g is distance-hereditary, else the brute-force
/// expansion held as the remainder.
Enumerator graph_enumerator(const Graph& g, const EnumerationLimits& limits = {});

/// Variables z_i are ids 0..n-1 as in cycle(n).
Enumerator cycle_enumerator(std::uint32_t n);
/// Variables as in superprism(n): x_i = 2i, y_i = 2i+1.
Enumerator superprism_enumerator(std::uint32_t n);

struct ExtensionEnumerator {
    Graph extension;
    VertexId apex;
    Enumerator enumerator;
    bool factored;  // false: expanded by brute force, g not a cograph
};
ExtensionEnumerator extension_enumerator(const Graph& g, const EnumerationLimits& limits = {});
/// P_G(x)·Σx == P_cone(g)(0, x), both sides expanded.
bool extension_identity_check(const Graph& g, const EnumerationLimits& limits = {});

/// Rooted-forest enumerator of the inversion graph of a separable w, apex
/// variable `apex`, vertex i of inversion_graph(w) as variable i.
Enumerator gao_liu_enumerator(const Permutation& w, VertexId apex);

}  // namespace dhspan
