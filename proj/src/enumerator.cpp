#include "dhspan/enumerator.hpp"

#include <algorithm>
#include <sstream>

#include "dhspan/errors.hpp"

namespace dhspan {

namespace {

std::string monomial_text(const Monomial& m, const char* join) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << join;
        os << 'x' << m[i].first;
        if (m[i].second != 1) os << '^' << m[i].second;
    }
    return os.str();
}

std::string poly_text(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (m.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << monomial_text(m, "*");
        }
        first = false;
    }
    return os.str();
}

mpz_class parse_integer(const std::string& tok) {
    mpz_class value;
    if (tok.empty() || value.set_str(tok, 10) != 0) throw InputError("bad integer in enumerator: " + tok);
    return value;
}

VertexId parse_variable(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'x') throw InputError("bad variable in enumerator: " + tok);
    try {
        std::size_t used = 0;
        unsigned long id = std::stoul(tok.substr(1), &used);
        if (used != tok.size() - 1) throw InputError("bad variable in enumerator: " + tok);
        return vid(static_cast<std::uint32_t>(id));
    } catch (const std::logic_error&) {
        throw InputError("bad variable in enumerator: " + tok);
    }
}

}  // namespace

Enumerator Enumerator::constant(const mpz_class& c) {
    Enumerator e;
    e.constant_ = c;
    e.normalize();
    return e;
}

Enumerator Enumerator::from_poly(const SparsePoly& p) {
    Enumerator e;
    e.remainder_ = p;
    e.normalize();
    return e;
}

void Enumerator::normalize() {
    if (remainder_.is_constant()) {
        constant_ *= remainder_.constant_term();
        remainder_ = SparsePoly::constant(1);
    }
    if (constant_ == 0) {
        factors_.clear();
        remainder_ = SparsePoly::constant(1);
    }
}

std::uint32_t Enumerator::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.multiplicity;
    std::uint32_t rem = 0;
    for (const auto& [m, c] : remainder_.terms()) rem = std::max(rem, dhspan::total_degree(m));
    return d + rem;
}

void Enumerator::multiply(const LinearForm& f, std::uint32_t multiplicity) {
    if (multiplicity == 0 || is_zero()) return;
    auto [content, prim] = f.canonical();
    if (content == 0) {
        constant_ = 0;
        normalize();
        return;
    }
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), content.get_mpz_t(), multiplicity);
    constant_ *= scale;
    auto it = std::find_if(factors_.begin(), factors_.end(), [&](const Factor& x) { return x.form == prim; });
    if (it != factors_.end())
        it->multiplicity += multiplicity;
    else
        factors_.push_back({std::move(prim), multiplicity});
}

void Enumerator::multiply(const SparsePoly& p) {
    remainder_ = remainder_ * p;
    normalize();
}

void Enumerator::multiply(const Enumerator& other) {
    constant_ *= other.constant_;
    for (const auto& f : other.factors_) multiply(f.form, f.multiplicity);
    remainder_ = remainder_ * other.remainder_;
    normalize();
}

Enumerator Enumerator::substituted(VertexId v, const LinearForm& f) const {
    Enumerator out = Enumerator::constant(constant_);
    for (const auto& factor : factors_) out.multiply(factor.form.substituted(v, f), factor.multiplicity);
    out.multiply(remainder_.substituted(v, f));
    return out;
}

Enumerator Enumerator::relabeled(const std::map<VertexId, VertexId>& map) const {
    Enumerator out = Enumerator::constant(constant_);
    for (const auto& factor : factors_) out.multiply(factor.form.relabeled(map), factor.multiplicity);
    out.multiply(remainder_.relabeled(map));
    return out;
}

mpq_class Enumerator::evaluate(const Point& p) const {
    mpq_class value = constant_;
    for (const auto& f : factors_) {
        mpq_class base = f.form.evaluate(p);
        for (std::uint32_t k = 0; k < f.multiplicity; ++k) value *= base;
    }
    return value * remainder_.evaluate(p);
}

SparsePoly Enumerator::expand(std::size_t max_terms) const {
    SparsePoly out = remainder_ * SparsePoly::constant(constant_);
    for (const auto& f : factors_) {
        SparsePoly linear = SparsePoly::from_linear(f.form);
        for (std::uint32_t k = 0; k < f.multiplicity; ++k) {
            out = out * linear;
            if (out.term_count() > max_terms)
                throw EnvelopeExceeded("expansion exceeds " + std::to_string(max_terms) + " terms");
        }
    }
    return out;
}

std::string Enumerator::serialize() const {
    std::ostringstream os;
    os << "constant " << constant_ << '\n';
    for (const auto& f : factors_) {
        os << "factor " << f.multiplicity << " :";
        bool first = true;
        for (const auto& [v, c] : f.form.coeffs()) {
            os << (first ? " " : " + ") << c << "*x" << v;
            first = false;
        }
        os << '\n';
    }
    if (!fully_linear()) {
        for (const auto& [m, c] : remainder_.terms()) {
            os << "term " << c << " :";
            if (!m.empty()) os << ' ' << monomial_text(m, " ");
            os << '\n';
        }
    }
    return os.str();
}

Enumerator Enumerator::parse(const std::string& text) {
    Enumerator e;
    bool seen_constant = false;
    SparsePoly remainder;
    bool any_term = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "constant") {
            std::string tok, extra;
            if (seen_constant || !(ls >> tok) || (ls >> extra)) throw InputError("bad constant line: " + line);
            e.constant_ = parse_integer(tok);
            seen_constant = true;
            continue;
        }
        if (!seen_constant) throw InputError("enumerator text must start with `constant`");
        std::string lead, colon;
        if (!(ls >> lead >> colon) || colon != ":") throw InputError("bad enumerator line: " + line);
        if (word == "factor") {
            const mpz_class mult = parse_integer(lead);
            if (mult <= 0 || !mult.fits_uint_p()) throw InputError("factor multiplicity must be positive");
            LinearForm form;
            std::string tok;
            bool expect_term = true;
            while (ls >> tok) {
                if (!expect_term) {
                    if (tok != "+") throw InputError("expected `+` in factor: " + line);
                    expect_term = true;
                    continue;
                }
                auto star = tok.find('*');
                if (star == std::string::npos) throw InputError("factor terms look like c*xN: " + tok);
                VertexId v = parse_variable(tok.substr(star + 1));
                if (form.mentions(v)) throw InputError("repeated variable in factor: " + line);
                form.add(v, parse_integer(tok.substr(0, star)));
                expect_term = false;
            }
            if (form.is_zero() || expect_term) throw InputError("empty or truncated factor: " + line);
            if (form.canonical().first != 1) throw InputError("factor is not canonical: " + line);
            if (std::any_of(e.factors_.begin(), e.factors_.end(), [&](const Factor& f) { return f.form == form; }))
                throw InputError("repeated factor: " + line);
            e.factors_.push_back({std::move(form), static_cast<std::uint32_t>(mult.get_ui())});
        } else if (word == "term") {
            const mpz_class coef = parse_integer(lead);
            Monomial m;
            std::string tok;
            while (ls >> tok) {
                auto caret = tok.find('^');
                VertexId v = parse_variable(tok.substr(0, caret));
                std::uint32_t exp = 1;
                if (caret != std::string::npos) {
                    mpz_class ez = parse_integer(tok.substr(caret + 1));
                    if (ez <= 0 || !ez.fits_uint_p()) throw InputError("bad exponent: " + tok);
                    exp = static_cast<std::uint32_t>(ez.get_ui());
                }
                if (!m.empty() && !(m.back().first < v)) throw InputError("monomial variables must increase: " + line);
                m.emplace_back(v, exp);
            }
            if (coef == 0 || remainder.terms().contains(m)) throw InputError("bad remainder term: " + line);
            remainder.add_term(m, coef);
            any_term = true;
        } else {
            throw InputError("unknown enumerator line: " + line);
        }
    }
    if (!seen_constant) throw InputError("enumerator text must start with `constant`");
    if (any_term) {
        if (remainder.is_constant()) throw InputError("constant remainder must be folded into `constant`");
        e.remainder_ = std::move(remainder);
    }
    if (e.constant_ == 0 && (!e.factors_.empty() || any_term)) throw InputError("zero enumerator carries no factors");
    return e;
}

std::string Enumerator::pretty() const {
    std::ostringstream os;
    std::vector<std::string> parts;
    if (constant_ != 1 || (factors_.empty() && fully_linear())) parts.push_back(constant_.get_str());
    for (const auto& f : factors_) {
        std::string body = f.form.to_string();
        bool bare = f.form.coeffs().size() == 1 && f.form.coeffs().begin()->second == 1;
        std::string s = bare ? body : "(" + body + ")";
        if (f.multiplicity != 1) s += "^" + std::to_string(f.multiplicity);
        parts.push_back(s);
    }
    if (!fully_linear()) parts.push_back("(" + poly_text(remainder_) + ")");
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    return os.str();
}

bool same_factorization(const Enumerator& a, const Enumerator& b) {
    if (a.constant_factor() != b.constant_factor() || !(a.remainder() == b.remainder())) return false;
    auto sorted = [](const Enumerator& e) {
        std::vector<std::pair<LinearForm, std::uint32_t>> v;
        for (const auto& f : e.factors()) v.emplace_back(f.form, f.multiplicity);
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
            if (x.first == y.first) return x.second < y.second;
            return x.first < y.first;
        });
        return v;
    };
    return sorted(a) == sorted(b);
}

Enumerator substitute(const Enumerator& e, VertexId v, const LinearForm& f) {
    if (f.is_zero()) throw InputError("substitution by the zero form");
    return e.substituted(v, f);
}

Enumerator compose_enumerators(const Enumerator& e1, VertexId v1, std::span<const VertexId> n1, const Enumerator& e2,
                               VertexId v2, std::span<const VertexId> n2) {
    if (n1.empty() || n2.empty()) throw InputError("marked vertices need nonempty neighborhoods");
    if (std::find(n1.begin(), n1.end(), v1) != n1.end() || std::find(n2.begin(), n2.end(), v2) != n2.end())
        throw InputError("a marked vertex cannot be its own neighbor");
    Enumerator out = substitute(e1, v1, LinearForm::sum(n2));
    out.multiply(substitute(e2, v2, LinearForm::sum(n1)));
    return out;
}

ComposedEnumerator compose(const Graph& g1, VertexId v1, const Enumerator& e1, const Graph& g2, VertexId v2,
                           const Enumerator& e2) {
    ComposedEnumerator out{compose_graphs(g1, v1, g2, v2), {}};
    const auto& relabel = out.composition.relabel;
    std::vector<VertexId> n2;
    for (VertexId u : g2.neighbors(v2)) n2.push_back(relabel.at(u));
    auto n1 = g1.neighbors(v1);
    out.enumerator = compose_enumerators(e1, v1, n1, e2.relabeled(relabel), relabel.at(v2), n2);
    return out;
}

Enumerator enumerator_from_construction(const ConstructionSequence& seq) {
    if (seq.steps.empty() || seq.steps.front().kind != StepKind::Seed)
        throw InputError("construction must start with a seed");
    GraphBuilder b;
    b.add_vertex(seq.steps.front().vertex);
    std::size_t count = 1;
    Enumerator e;
    for (std::size_t i = 1; i < seq.steps.size(); ++i) {
        const auto& s = seq.steps[i];
        if (s.kind == StepKind::Seed) throw InputError("seed step after the start of a construction");
        if (!b.contains(s.anchor)) throw InputError("construction step references a missing vertex");
        std::vector<VertexId> nb(b.neighbors(s.anchor).begin(), b.neighbors(s.anchor).end());

        if (count == 1) {
            // K1 has no polynomial enumerator; the two-vertex result is K2 or 2K1.
            e = Enumerator::constant(s.kind == StepKind::FalseTwin ? 0 : 1);
        } else if (s.kind == StepKind::Pendant) {
            e.multiply(LinearForm::variable(s.anchor));
        } else {
            LinearForm pair = LinearForm::variable(s.anchor) + LinearForm::variable(s.vertex);
            e = e.substituted(s.anchor, pair);
            LinearForm tail = LinearForm::sum(nb);
            if (s.kind == StepKind::TrueTwin) tail += pair;
            e.multiply(tail);
        }

        b.add_vertex(s.vertex);
        if (s.kind == StepKind::Pendant || s.kind == StepKind::TrueTwin) b.add_edge(s.vertex, s.anchor);
        if (s.kind != StepKind::Pendant)
            for (VertexId w : nb) b.add_edge(s.vertex, w);
        ++count;
    }
    if (count < 2) throw InputError("the enumerator needs at least two vertices");
    return e;
}

Enumerator factor_enumerator(const Graph& g) {
    if (g.vertex_count() < 2) throw InputError("the enumerator needs at least two vertices");
    auto result = recognize_dh(g);
    auto* seq = std::get_if<ConstructionSequence>(&result);
    if (!seq) throw InputError("graph is not distance-hereditary");
    return enumerator_from_construction(*seq);
}

Enumerator graph_enumerator(const Graph& g, const EnumerationLimits& limits) {
    if (g.vertex_count() >= 2 && is_connected(g) && is_distance_hereditary(g)) return factor_enumerator(g);
    return Enumerator::from_poly(brute_force_enumerator(g, limits));
}

Enumerator cycle_enumerator(std::uint32_t n) {
    if (n < 3) throw InputError("cycle enumerator needs n >= 3");
    SparsePoly p;
    for (std::uint32_t i = 0; i < n; ++i) {
        Monomial m;
        for (std::uint32_t j = 0; j < n; ++j)
            if (j != i && j != (i + 1) % n) m.emplace_back(vid(j), 1U);
        p.add_term(m, 1);
    }
    return Enumerator::from_poly(p);
}

Enumerator superprism_enumerator(std::uint32_t n) {
    if (n < 4) throw InputError("superprism enumerator needs n >= 4");
    auto pair_sum = [n](std::uint32_t i) {
        i %= n;
        return LinearForm::variable(vid(2 * i)) + LinearForm::variable(vid(2 * i + 1));
    };
    // P_{C_n}(z) with z_i = x_i + y_i, times Π (z_i + z_{i+2})
    SparsePoly kernel;
    for (std::uint32_t i = 0; i < n; ++i) {
        SparsePoly term = SparsePoly::constant(1);
        for (std::uint32_t j = 0; j < n; ++j)
            if (j != i && j != (i + 1) % n) term = term * SparsePoly::from_linear(pair_sum(j));
        kernel += term;
    }
    Enumerator e = Enumerator::from_poly(kernel);
    for (std::uint32_t i = 0; i < n; ++i) e.multiply(pair_sum(i) + pair_sum(i + 2));
    return e;
}

ExtensionEnumerator extension_enumerator(const Graph& g, const EnumerationLimits& limits) {
    auto [ext, apex] = cone(g);
    auto result = recognize_dh(ext);
    if (auto* seq = std::get_if<ConstructionSequence>(&result); seq && ext.vertex_count() >= 2)
        return {ext, apex, enumerator_from_construction(*seq), true};
    return {ext, apex, Enumerator::from_poly(brute_force_enumerator(ext, limits)), false};
}

bool extension_identity_check(const Graph& g, const EnumerationLimits& limits) {
    const auto ext = extension_enumerator(g, limits);
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    const SparsePoly lhs = graph_enumerator(g, limits).expand() * SparsePoly::from_linear(LinearForm::sum(vs));
    return lhs == ext.enumerator.expand().with_zero(ext.apex);
}

Enumerator gao_liu_enumerator(const Permutation& w, VertexId apex) {
    if (!is_separable(w)) throw InputError("permutation " + w.to_string() + " is not separable");
    const std::uint32_t n = w.size();
    if (raw(apex) >= 1 && raw(apex) <= n) throw InputError("apex variable collides with a permutation vertex");
    Enumerator e;
    for (std::uint32_t i = 1; i < n; ++i) {
        LinearForm f = LinearForm::variable(apex);
        for (std::uint32_t j = 1; j <= i; ++j)
            if (w.at(j) > w.at(i + 1)) f.add(vid(j), 1);
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (w.at(j) < w.at(i)) f.add(vid(j), 1);
        e.multiply(f);
    }
    return e;
}

}  // namespace dhspan
