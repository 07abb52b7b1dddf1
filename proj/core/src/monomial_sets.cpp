#include "cartperm/monomial_sets.hpp"

#include <deque>
#include <stdexcept>

namespace cartperm {

MonomialSet::MonomialSet(std::size_t m, std::vector<std::uint32_t> bound)
    : m_(m), bound_(std::move(bound)) {
    if (bound_->size() != m_)
        throw std::invalid_argument("monomial set bound has the wrong length");
}

MonomialSet::MonomialSet(std::size_t m, std::optional<std::vector<std::uint32_t>> bound,
                         const std::vector<Monomial>& members)
    : m_(m), bound_(std::move(bound)) {
    if (bound_ && bound_->size() != m_)
        throw std::invalid_argument("monomial set bound has the wrong length");
    for (const auto& u : members)
        insert(u);
}

bool MonomialSet::admits(const Monomial& u) const {
    return u.variables() == m_ && (!bound_ || u.within(*bound_));
}

bool MonomialSet::insert(const Monomial& u) {
    if (u.variables() != m_)
        throw std::invalid_argument("monomial has the wrong number of variables");
    if (bound_ && !u.within(*bound_))
        throw std::invalid_argument("monomial " + to_string(u) + " lies outside the Delta bound");
    return members_.insert(u).second;
}

MonomialSet divisibility_closure(const MonomialSet& L) {
    MonomialSet out(L.variables(), L.bound(), {});
    for (const auto& u : L) {
        // odometer over all divisors of u
        Monomial d = Monomial::one(L.variables());
        while (true) {
            out.insert(d);
            std::size_t i = 0;
            while (i < d.variables() && d[i] == u[i]) {
                d[i] = 0;
                ++i;
            }
            if (i == d.variables())
                break;
            ++d[i];
        }
    }
    return out;
}

bool is_decreasing(const MonomialSet& L) {
    for (const auto& u : L)
        for (std::size_t i = 0; i < u.variables(); ++i) {
            if (u[i] == 0)
                continue;
            Monomial d = u;
            --d[i];
            if (!L.contains(d))
                return false;
        }
    return true;
}

std::vector<Monomial> borel_movements(const Monomial& u) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < u.variables(); ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < i; ++j) {
            Monomial v = u;
            --v[i];
            ++v[j];
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::optional<BorelWitness> borel_violation(const MonomialSet& L) {
    for (const auto& u : L)
        for (auto& v : borel_movements(u))
            if (L.admits(v) && !L.contains(v))
                return BorelWitness{u, std::move(v)};
    return std::nullopt;
}

std::vector<Monomial> p_borel_movements(const Monomial& u, std::size_t i, std::size_t j,
                                        std::uint32_t p) {
    if (i >= u.variables() || j >= u.variables() || i == j)
        throw std::invalid_argument("p-Borel movement needs two distinct variables");
    if (u[i] == 0)
        throw std::invalid_argument("x_" + std::to_string(i + 1) + " does not divide " +
                                    to_string(u));
    std::vector<Monomial> out;
    for (std::uint32_t ell = 0; ell <= u[i]; ++ell) {
        if (!leq_p(ell, u[i], p))
            continue;
        Monomial v = u;
        v[i] -= ell;
        v[j] += ell;
        out.push_back(std::move(v));
    }
    return out;
}

PBorelGraph p_borel_graph(const MonomialSet& L, std::uint32_t p) {
    const std::size_t m = L.variables();
    PBorelGraph g;
    g.m = m;
    g.p = p;
    g.edges.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j)
                continue;
            bool edge = true;
            for (const auto& u : L) {
                if (u[i] == 0)
                    continue;
                for (std::uint32_t ell = 1; ell <= u[i] && edge; ++ell) {
                    if (!leq_p(ell, u[i], p))
                        continue;
                    Monomial v = u;
                    v[i] -= ell;
                    v[j] += ell;
                    if (!L.admits(v)) {
                        g.discarded.push_back({i, j, u, ell});
                        continue;
                    }
                    if (!L.contains(v)) {
                        edge = false;
                        g.witnesses.emplace(std::make_pair(i, j), PBorelGraph::Witness{u, ell});
                    }
                }
                if (!edge)
                    break;
            }
            g.edges[i * m + j] = edge ? 1 : 0;
        }
    return g;
}

MonomialSet valid_p_borel_reachable(const MonomialSet& L, const Monomial& u, std::uint32_t p) {
    if (!L.contains(u))
        throw std::invalid_argument(to_string(u) + " is not a member of the set");
    const PBorelGraph g = p_borel_graph(L, p);
    MonomialSet out(L.variables(), L.bound(), {u});
    std::deque<Monomial> queue{u};
    while (!queue.empty()) {
        Monomial cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < g.m; ++i) {
            if (cur[i] == 0)
                continue;
            for (std::size_t j = 0; j < g.m; ++j) {
                if (i == j || !g.has_edge(i, j))
                    continue;
                for (auto& v : p_borel_movements(cur, i, j, p)) {
                    if (!out.admits(v) || out.contains(v))
                        continue;
                    out.insert(v);
                    queue.push_back(std::move(v));
                }
            }
        }
    }
    return out;
}

StableMatrixPattern stable_pattern(const PBorelGraph& graph) {
    StableMatrixPattern s;
    s.m = graph.m;
    s.mask.assign(graph.m * graph.m, 0);
    for (std::size_t i = 0; i < graph.m; ++i)
        for (std::size_t j = 0; j < graph.m; ++j)
            s.mask[i * graph.m + j] = (i == j || graph.has_edge(i, j)) ? 1 : 0;
    return s;
}

StableMatrixPattern stable_pattern(const MonomialSet& L, std::uint32_t p) {
    return stable_pattern(p_borel_graph(L, p));
}

MonomialSet borel_closure(const MonomialSet& L) {
    // Borel moves of a decreasing set stay decreasing: a divisor of
    // (x_j/x_i) u is either a divisor of u or a move of one.
    MonomialSet out = divisibility_closure(L);
    std::deque<Monomial> queue(out.begin(), out.end());
    while (!queue.empty()) {
        Monomial u = std::move(queue.front());
        queue.pop_front();
        for (auto& v : borel_movements(u)) {
            if (!out.admits(v) || out.contains(v))
                continue;
            out.insert(v);
            queue.push_back(std::move(v));
        }
    }
    return out;
}

namespace {

Monomial random_monomial(const std::vector<std::uint32_t>& bound, std::mt19937_64& rng) {
    std::vector<std::uint32_t> e(bound.size());
    for (std::size_t i = 0; i < bound.size(); ++i)
        e[i] = std::uniform_int_distribution<std::uint32_t>(0, bound[i] - 1)(rng);
    return Monomial(std::move(e));
}

} // namespace

MonomialSet sample_decreasing_set(const std::vector<std::uint32_t>& bound, std::size_t generators,
                                  std::mt19937_64& rng) {
    MonomialSet gens(bound.size(), bound);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, generators)(rng);
    for (std::size_t t = 0; t < n; ++t)
        gens.insert(random_monomial(bound, rng));
    return divisibility_closure(gens);
}

MonomialSet sample_borel_set(const std::vector<std::uint32_t>& bound, std::size_t generators,
                             std::mt19937_64& rng) {
    return borel_closure(sample_decreasing_set(bound, generators, rng));
}

} // namespace cartperm
