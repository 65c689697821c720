#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "dhspan/graph.hpp"
#include "dhspan/polynomial.hpp"

namespace dhspan {

/// Dense row-major square matrix over an exact scalar type.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t order() const { return n_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    /// Drops row and column i.
    SquareMatrix minor(std::size_t i) const {
        SquareMatrix out(n_ - 1);
        for (std::size_t r = 0, rr = 0; r < n_; ++r) {
            if (r == i) continue;
            for (std::size_t c = 0, cc = 0; c < n_; ++c) {
                if (c == i) continue;
                out(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return out;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
        for (std::size_t r = 0; r < m.n_; ++r) {
            for (std::size_t c = 0; c < m.n_; ++c) os << (c ? " " : "") << m(r, c);
            os << '\n';
        }
        return os;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<mpz_class>;
using RatMatrix = SquareMatrix<mpq_class>;

/// Fraction-free (Bareiss) elimination; every intermediate stays integral.
mpz_class determinant(IntMatrix m);
/// Gaussian elimination over the rationals.
mpq_class determinant(RatMatrix m);

/// Rows and columns follow g.vertices() order.
IntMatrix laplacian(const Graph& g);
/// Edge uv weighted by x_u·x_v, diagonal compensated so rows sum to zero.
RatMatrix weighted_laplacian(const Graph& g, const Point& x);

/// Number of spanning trees; the cofactor dropping row/column `drop`.
/// Disconnected graphs give 0.
mpz_class tree_count(const Graph& g, std::size_t drop = 0);

/// Σ_T Π_v x_v^{deg_T(v)}, the weighted-Laplacian cofactor.
mpq_class weighted_tree_sum(const Graph& g, const Point& x);

/// P_G(x) = weighted_tree_sum / Π x_v. Requires every coordinate nonzero.
mpq_class enumerator_value(const Graph& g, const Point& x);

struct RankOneCheck {
    mpq_class lhs;  // det(L + a bᵀ)
    mpq_class rhs;  // (Σa)(Σb) τ(G)
    bool equal;
};
RankOneCheck det_rank_one_check(const Graph& g, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);

struct EnumerationLimits {
    std::size_t max_vertices = 9;
    mpz_class max_trees = 1000000;
};

/// Σ_T Π_v x_v^{deg_T(v)-1}, one term per spanning tree, by deletion and
/// contraction. Accepted when n <= max_vertices or τ(G) <= max_trees;
/// otherwise EnvelopeExceeded. Graphs with fewer than two vertices are
/// rejected with InputError (the exponent would be negative).
SparsePoly brute_force_enumerator(const Graph& g, const EnumerationLimits& limits = {});

}  // namespace dhspan
