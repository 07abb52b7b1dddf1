#include "cartperm/poly_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cartperm {

Monomial Monomial::variable(std::size_t m, std::size_t i) {
    Monomial u = one(m);
    u.exps_.at(i) = 1;
    return u;
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
    if (other.variables() != variables())
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

bool Monomial::within(std::span<const std::uint32_t> bounds) const {
    if (bounds.size() != exps_.size())
        throw std::invalid_argument("bound vector has the wrong length");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] >= bounds[i])
            return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.variables() != b.variables())
        throw std::invalid_argument("monomials in different rings");
    Monomial out = a;
    for (std::size_t i = 0; i < a.variables(); ++i)
        out[i] += b[i];
    return out;
}

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    return a.exponents() > b.exponents();
}

std::string to_string(const Monomial& u) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < u.variables(); ++i) {
        if (u[i] == 0)
            continue;
        os << (any ? "*" : "") << 'x' << (i + 1);
        if (u[i] > 1)
            os << '^' << u[i];
        any = true;
    }
    return any ? os.str() : "1";
}

Polynomial Polynomial::constant(const Field& F, std::size_t m, FieldElement c) {
    Polynomial f(F, m);
    f.add_term(Monomial::one(m), c);
    return f;
}

Polynomial Polynomial::variable(const Field& F, std::size_t m, std::size_t i) {
    return monomial(F, Monomial::variable(m, i), F.one());
}

Polynomial Polynomial::monomial(const Field& F, const Monomial& u, FieldElement c) {
    Polynomial f(F, u.variables());
    f.add_term(u, c);
    return f;
}

std::vector<Monomial> Polynomial::support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [u, c] : terms_)
        out.push_back(u);
    return out;
}

FieldElement Polynomial::coefficient(const Monomial& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Monomial& u, FieldElement c) {
    if (u.variables() != vars_)
        throw std::invalid_argument("monomial has the wrong number of variables");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

namespace {

void check_ambient(const Polynomial& f, const Polynomial& g) {
    if (f.variables() != g.variables() || !(f.field() == g.field()))
        throw std::invalid_argument("polynomials live in different rings");
}

} // namespace

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    check_ambient(f, g);
    Polynomial out = f;
    for (const auto& [u, c] : g.terms())
        out.add_term(u, c);
    return out;
}

Polynomial poly_neg(const Polynomial& f) {
    Polynomial out(f.field(), f.variables());
    for (const auto& [u, c] : f.terms())
        out.add_term(u, f.field().neg(c));
    return out;
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) { return poly_add(f, poly_neg(g)); }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    check_ambient(f, g);
    const Field& F = f.field();
    Polynomial out(F, f.variables());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms())
            out.add_term(u * v, F.mul(a, b));
    return out;
}

Polynomial poly_scale(const Polynomial& f, FieldElement c) {
    Polynomial out(f.field(), f.variables());
    for (const auto& [u, a] : f.terms())
        out.add_term(u, f.field().mul(a, c));
    return out;
}

Polynomial poly_pow(const Polynomial& f, std::uint64_t e) {
    Polynomial result = Polynomial::constant(f.field(), f.variables(), f.field().one());
    Polynomial base = f;
    while (e) {
        if (e & 1)
            result = poly_mul(result, base);
        e >>= 1;
        if (e)
            base = poly_mul(base, base);
    }
    return result;
}

AffineSubstitution::AffineSubstitution(const AffineTransformation& T)
    : field_(T.field()), m_(T.dimension()), powers_(T.dimension()) {
    for (std::size_t i = 0; i < m_; ++i) {
        Polynomial y(field_, m_);
        for (std::size_t j = 0; j < m_; ++j)
            y.add_term(Monomial::variable(m_, j), T.A()(i, j));
        y.add_term(Monomial::one(m_), T.b()[i]);
        powers_[i].push_back(Polynomial::constant(field_, m_, field_.one()));
        powers_[i].push_back(std::move(y));
    }
}

const Polynomial& AffineSubstitution::power(std::size_t i, std::uint32_t e) {
    auto& p = powers_[i];
    while (p.size() <= e)
        p.push_back(poly_mul(p.back(), p[1]));
    return p[e];
}

Polynomial AffineSubstitution::image(const Monomial& u) {
    if (u.variables() != m_)
        throw std::invalid_argument("monomial dimension does not match the affine map");
    Polynomial out = Polynomial::constant(field_, m_, field_.one());
    for (std::size_t i = 0; i < m_; ++i)
        if (u[i] > 0)
            out = poly_mul(out, power(i, u[i]));
    return out;
}

Polynomial AffineSubstitution::apply(const Polynomial& f) {
    if (f.variables() != m_ || !(f.field() == field_))
        throw std::invalid_argument("polynomial and affine map live in different spaces");
    Polynomial out(field_, m_);
    for (const auto& [u, c] : f.terms())
        out = poly_add(out, poly_scale(image(u), c));
    return out;
}

Polynomial substitute_affine(const Polynomial& f, const AffineTransformation& T) {
    AffineSubstitution sub(T);
    return sub.apply(f);
}

VanishingReducer::VanishingReducer(const CartesianSet& S)
    : field_(S.field()), bounds_(S.bounds()), g_(S.dimension()), rem_(S.dimension()) {
    const Field& F = field_;
    for (std::size_t j = 0; j < S.dimension(); ++j) {
        std::vector<FieldElement> g{F.one()};
        for (auto a : S.component(j).elements()) {
            // g <- g * (x - a)
            std::vector<FieldElement> next(g.size() + 1, F.zero());
            for (std::size_t d = 0; d < g.size(); ++d) {
                next[d + 1] = F.add(next[d + 1], g[d]);
                next[d] = F.sub(next[d], F.mul(a, g[d]));
            }
            g = std::move(next);
        }
        g_[j] = std::move(g);
    }
}

const std::vector<FieldElement>& VanishingReducer::remainder(std::size_t j, std::uint32_t e) {
    const std::uint32_t n = bounds_[j];
    if (e < n)
        throw std::invalid_argument("remainder requested for an exponent already in range");
    const Field& F = field_;
    auto& r = rem_[j];
    while (r.size() <= e - n) {
        if (r.empty()) {
            // x^n = x^n - g_j(x) modulo g_j
            std::vector<FieldElement> out(n);
            for (std::uint32_t d = 0; d < n; ++d)
                out[d] = F.neg(g_[j][d]);
            r.push_back(std::move(out));
            continue;
        }
        // x * previous, then cancel the x^n term using the monic g_j
        const std::vector<FieldElement> prev = r.back();
        std::vector<FieldElement> out(n, F.zero());
        const FieldElement top = prev[n - 1];
        for (std::uint32_t d = n - 1; d > 0; --d)
            out[d] = prev[d - 1];
        for (std::uint32_t d = 0; d < n; ++d)
            out[d] = F.sub(out[d], F.mul(top, g_[j][d]));
        r.push_back(std::move(out));
    }
    return r[e - n];
}

Polynomial VanishingReducer::reduce(const Polynomial& f) {
    const std::size_t m = bounds_.size();
    if (f.variables() != m)
        throw std::invalid_argument("polynomial dimension does not match the set");
    std::vector<std::uint32_t> worst(m, 0);
    for (const auto& [u, c] : f.terms())
        for (std::size_t j = 0; j < m; ++j)
            worst[j] = std::max(worst[j], u[j]);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return worst[a] > worst[b]; });
    return reduce(f, order);
}

Polynomial VanishingReducer::reduce(const Polynomial& f, std::span<const std::size_t> order) {
    const std::size_t m = bounds_.size();
    if (f.variables() != m || !(f.field() == field_))
        throw std::invalid_argument("polynomial does not match the set");
    const Field& F = field_;
    Polynomial cur = f;
    for (std::size_t j : order) {
        Polynomial next(F, m);
        for (const auto& [u, c] : cur.terms()) {
            if (u[j] < bounds_[j]) {
                next.add_term(u, c);
                continue;
            }
            const auto& r = remainder(j, u[j]);
            Monomial v = u;
            for (std::uint32_t d = 0; d < bounds_[j]; ++d) {
                if (r[d].is_zero())
                    continue;
                v[j] = d;
                next.add_term(v, F.mul(c, r[d]));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Polynomial reduce_mod_vanishing(const Polynomial& f, const CartesianSet& S) {
    if (!(f.field() == S.field()))
        throw std::invalid_argument("polynomial and set over different fields");
    VanishingReducer r(S);
    return r.reduce(f);
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
    if (point.size() != f.variables())
        throw std::invalid_argument("point dimension mismatch");
    const Field& F = f.field();
    FieldElement s = F.zero();
    for (const auto& [u, c] : f.terms()) {
        FieldElement t = c;
        for (std::size_t i = 0; i < point.size() && !t.is_zero(); ++i)
            if (u[i])
                t = F.mul(t, F.pow(point[i], u[i]));
        s = F.add(s, t);
    }
    return s;
}

Vector evaluate_on_set(const Polynomial& f, const CartesianSet& S) {
    if (S.dimension() != f.variables())
        throw std::invalid_argument("set dimension mismatch");
    Vector out;
    out.reserve(S.size());
    for (std::uint64_t i = 0; i < S.size(); ++i)
        out.push_back(evaluate(f, S.point(i)));
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero())
        return "0";
    const Field& F = f.field();
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [u, c] = *it;
        os << (first ? "" : " + ");
        first = false;
        const bool unit = c == F.one();
        const bool constant = u.degree() == 0;
        if (!unit || constant)
            os << F.to_string(c);
        if (!constant)
            os << (unit ? "" : "*") << to_string(u);
    }
    return os.str();
}

} // namespace cartperm
