#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dhspan/graph.hpp"

namespace dhspan {

/// Exact rational coordinates, one per variable x_v.
class Point {
public:
    Point() = default;
    explicit Point(std::map<VertexId, mpq_class> values) : values_(std::move(values)) {}
    static Point constant(const Graph& g, const mpq_class& value);

    void set(VertexId v, mpq_class value) { values_[v] = std::move(value); }
    /// Throws InputError when v has no coordinate.
    const mpq_class& at(VertexId v) const;
    bool has(VertexId v) const { return values_.contains(v); }
    const std::map<VertexId, mpq_class>& values() const { return values_; }

private:
    std::map<VertexId, mpq_class> values_;
};

/// Σ c_v x_v with integer coefficients; zero coefficients are never stored.
class LinearForm {
public:
    LinearForm() = default;
    static LinearForm variable(VertexId v);
    static LinearForm sum(std::span<const VertexId> vars);

    const std::map<VertexId, mpz_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coefficient(VertexId v) const;
    bool mentions(VertexId v) const { return coeffs_.contains(v); }

    void add(VertexId v, const mpz_class& c);
    LinearForm& operator+=(const LinearForm& other);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    LinearForm scaled(const mpz_class& c) const;

    /// x_v ↦ f.
    LinearForm substituted(VertexId v, const LinearForm& f) const;
    LinearForm relabeled(const std::map<VertexId, VertexId>& map) const;
    mpq_class evaluate(const Point& p) const;

    /// Splits into (content, primitive form) with gcd 1 and a positive
    /// coefficient on the smallest id. content * primitive == *this.
    std::pair<mpz_class, LinearForm> canonical() const;

    /// e.g. "x0 + 2*x3"; zero prints as "0".
    std::string to_string() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.coeffs_ < b.coeffs_; }

private:
    std::map<VertexId, mpz_class> coeffs_;
};

/// Sorted (variable, positive exponent) pairs.
using Monomial = std::vector<std::pair<VertexId, std::uint32_t>>;

std::uint32_t total_degree(const Monomial& m);

/// Expanded multivariate polynomial with arbitrary-precision coefficients.
class SparsePoly {
public:
    SparsePoly() = default;
    static SparsePoly constant(const mpz_class& c);
    static SparsePoly from_linear(const LinearForm& f);

    const std::map<Monomial, mpz_class>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Constant polynomial (possibly zero).
    bool is_constant() const;
    mpz_class constant_term() const;

    void add_term(const Monomial& m, const mpz_class& c);
    SparsePoly& operator+=(const SparsePoly& other);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly pow(std::uint32_t e) const;

    /// x_v ↦ f.
    SparsePoly substituted(VertexId v, const LinearForm& f) const;
    /// x_v ↦ 0.
    SparsePoly with_zero(VertexId v) const;
    SparsePoly relabeled(const std::map<VertexId, VertexId>& map) const;
    mpq_class evaluate(const Point& p) const;

    /// Total degree of every term, or -1 when terms disagree; 0 for the
    /// zero polynomial.
    int homogeneous_degree() const;
    std::vector<VertexId> variables() const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::map<Monomial, mpz_class> terms_;
};

}  // namespace dhspan
