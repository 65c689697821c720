#include "dhspan/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dhspan/errors.hpp"

namespace dhspan {

namespace {

mpq_class power(const mpq_class& base, std::uint32_t e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Point Point::constant(const Graph& g, const mpq_class& value) {
    Point p;
    for (VertexId v : g.vertices()) p.set(v, value);
    return p;
}

const mpq_class& Point::at(VertexId v) const {
    auto it = values_.find(v);
    if (it == values_.end()) {
        std::ostringstream os;
        os << "no value for variable x" << v;
        throw InputError(os.str());
    }
    return it->second;
}

LinearForm LinearForm::variable(VertexId v) {
    LinearForm f;
    f.coeffs_.emplace(v, 1);
    return f;
}

LinearForm LinearForm::sum(std::span<const VertexId> vars) {
    LinearForm f;
    for (VertexId v : vars) f.add(v, 1);
    return f;
}

mpz_class LinearForm::coefficient(VertexId v) const {
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void LinearForm::add(VertexId v, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.emplace(v, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    for (const auto& [v, c] : other.coeffs_) add(v, c);
    return *this;
}

LinearForm LinearForm::scaled(const mpz_class& c) const {
    LinearForm out;
    if (c == 0) return out;
    for (const auto& [v, a] : coeffs_) out.coeffs_.emplace(v, a * c);
    return out;
}

LinearForm LinearForm::substituted(VertexId v, const LinearForm& f) const {
    auto it = coeffs_.find(v);
    if (it == coeffs_.end()) return *this;
    LinearForm out = *this;
    mpz_class c = it->second;
    out.coeffs_.erase(v);
    out += f.scaled(c);
    return out;
}

LinearForm LinearForm::relabeled(const std::map<VertexId, VertexId>& map) const {
    LinearForm out;
    for (const auto& [v, c] : coeffs_) {
        auto it = map.find(v);
        out.add(it == map.end() ? v : it->second, c);
    }
    return out;
}

mpq_class LinearForm::evaluate(const Point& p) const {
    mpq_class total = 0;
    for (const auto& [v, c] : coeffs_) total += mpq_class(c) * p.at(v);
    return total;
}

std::pair<mpz_class, LinearForm> LinearForm::canonical() const {
    if (coeffs_.empty()) return {0, {}};
    mpz_class g = 0;
    for (const auto& [v, c] : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (coeffs_.begin()->second < 0) g = -g;
    LinearForm prim;
    for (const auto& [v, c] : coeffs_) prim.coeffs_.emplace(v, c / g);
    return {g, std::move(prim)};
}

std::string LinearForm::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : coeffs_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag << '*';
        os << 'x' << v;
        first = false;
    }
    return os.str();
}

std::uint32_t total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

SparsePoly SparsePoly::constant(const mpz_class& c) {
    SparsePoly p;
    p.add_term({}, c);
    return p;
}

SparsePoly SparsePoly::from_linear(const LinearForm& f) {
    SparsePoly p;
    for (const auto& [v, c] : f.coeffs()) p.add_term({{v, 1}}, c);
    return p;
}

bool SparsePoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

mpz_class SparsePoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
    SparsePoly result = constant(1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

SparsePoly SparsePoly::substituted(VertexId v, const LinearForm& f) const {
    SparsePoly out;
    SparsePoly image = from_linear(f);
    std::map<std::uint32_t, SparsePoly> powers;
    for (const auto& [m, c] : terms_) {
        auto it = std::find_if(m.begin(), m.end(), [v](const auto& ve) { return ve.first == v; });
        if (it == m.end()) {
            out.add_term(m, c);
            continue;
        }
        std::uint32_t e = it->second;
        Monomial rest = m;
        rest.erase(rest.begin() + (it - m.begin()));
        auto pw = powers.find(e);
        if (pw == powers.end()) pw = powers.emplace(e, image.pow(e)).first;
        for (const auto& [mi, ci] : pw->second.terms_) out.add_term(multiply(rest, mi), c * ci);
    }
    return out;
}

SparsePoly SparsePoly::with_zero(VertexId v) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
        bool mentions = std::any_of(m.begin(), m.end(), [v](const auto& ve) { return ve.first == v; });
        if (!mentions) out.terms_.emplace(m, c);
    }
    return out;
}

SparsePoly SparsePoly::relabeled(const std::map<VertexId, VertexId>& map) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
        Monomial mm;
        for (const auto& [v, e] : m) {
            auto it = map.find(v);
            mm.emplace_back(it == map.end() ? v : it->second, e);
        }
        std::sort(mm.begin(), mm.end());
        // merge in case the map is not injective
        Monomial merged;
        for (const auto& ve : mm) {
            if (!merged.empty() && merged.back().first == ve.first)
                merged.back().second += ve.second;
            else
                merged.push_back(ve);
        }
        out.add_term(merged, c);
    }
    return out;
}

mpq_class SparsePoly::evaluate(const Point& p) const {
    mpq_class total = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class term(c);
        for (const auto& [v, e] : m) term *= power(p.at(v), e);
        total += term;
    }
    return total;
}

int SparsePoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    const auto d = static_cast<int>(total_degree(terms_.begin()->first));
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(total_degree(m)) != d) return -1;
    return d;
}

std::vector<VertexId> SparsePoly::variables() const {
    std::set<VertexId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vars.insert(v);
    return {vars.begin(), vars.end()};
}

}  // namespace dhspan
