#include "cartperm/group_families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cartperm/linalg.hpp"

namespace cartperm {

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::LTA: return "LTA";
    case FamilyKind::MLInvertible: return "MLInvertible";
    case FamilyKind::MultSubgroupProduct: return "MultSubgroupProduct";
    case FamilyKind::TorusProduct: return "TorusProduct";
    case FamilyKind::MixedFullTorus: return "MixedFullTorus";
    case FamilyKind::MixedGeneral: return "MixedGeneral";
    case FamilyKind::AdditivePower: return "AdditivePower";
    case FamilyKind::AdditiveHetero: return "AdditiveHetero";
    case FamilyKind::BorelBlockDiag: return "BorelBlockDiag";
    }
    return "?";
}

Family::Family(FamilyKind kind, std::vector<FamilyParam> params, std::vector<Piece> pieces,
               std::function<bool(const AffineTransformation&)> predicate,
               std::function<std::uint64_t()> count)
    : kind_(kind), params_(std::move(params)), pieces_(std::move(pieces)),
      predicate_(std::move(predicate)), count_(std::move(count)) {
    if (pieces_.empty())
        throw std::invalid_argument("family needs at least one candidate piece");
}

std::uint64_t Family::candidate_count() const {
    std::uint64_t n = 0;
    for (const auto& p : pieces_) {
        const auto s = p.space.size();
        n = s > UINT64_MAX - n ? UINT64_MAX : n + s;
    }
    return n;
}

TransformStream Family::enumerate(std::uint64_t budget) const {
    const std::uint64_t n = candidate_count();
    if (n > budget)
        throw BudgetExceeded(n, budget);
    std::vector<TransformStream> parts;
    for (const auto& p : pieces_) {
        std::function<bool(const AffineTransformation&)> filter;
        if (p.invertible_only)
            filter = [](const AffineTransformation& T) { return T.is_invertible(); };
        parts.push_back(TransformStream::over(p.space, budget, std::move(filter)));
    }
    return TransformStream::concat(std::move(parts));
}

std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
    std::uint64_t qn = 1;
    for (std::size_t i = 0; i < n; ++i)
        qn = saturating_mul(qn, q);
    std::uint64_t out = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        out = saturating_mul(out, qn - qi);
        qi *= q;
    }
    return out;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--)
        r = saturating_mul(r, b);
    return r;
}

bool member(const std::vector<FieldElement>& d, FieldElement x) {
    return std::find(d.begin(), d.end(), x) != d.end();
}

std::vector<FieldElement> elements_of(const SetComponent& G) {
    return {G.elements().begin(), G.elements().end()};
}

// Lower triangular with nonzero diagonal, entries from `entries`, on the
// leading n x n block.
bool lower_triangular_block(const Matrix& A, std::size_t n,
                            const std::vector<FieldElement>& entries) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const FieldElement a = A(i, j);
            if (j > i && !a.is_zero())
                return false;
            if (j == i && a.is_zero())
                return false;
            if (!member(entries, a))
                return false;
        }
    return true;
}

bool same_shape(const AffineTransformation& T, const Field& F, std::size_t m) {
    return T.dimension() == m && T.field() == F;
}

// Multiplicative block structure shared by the three stabilizer
// characterizations: coordinates < m0 are full fields, the rest are
// multiplicative subgroups labeled by equality of sets.
Family block_family(const CartesianSet& S, std::size_t m0, FamilyKind kind,
                    std::vector<FamilyParam> params) {
    const Field F = S.field();
    const std::size_t m = S.dimension();
    const std::uint64_t q = F.q();
    std::vector<std::size_t> label(m, 0);
    for (std::size_t i = m0; i < m; ++i) {
        label[i] = i;
        for (std::size_t j = m0; j < i; ++j)
            if (S.component(j).same_set(S.component(i))) {
                label[i] = label[j];
                break;
            }
    }
    const auto all = F.elements();
    std::vector<std::size_t> sigma(m - m0);
    std::iota(sigma.begin(), sigma.end(), m0);
    std::vector<Family::Piece> pieces;
    do {
        bool ok = true;
        for (std::size_t t = 0; t < sigma.size() && ok; ++t)
            ok = label[m0 + t] == label[sigma[t]];
        if (!ok)
            continue;
        CandidateSpace space(F, m);
        for (std::size_t i = 0; i < m0; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                space.set_entry(i, j, all);
            space.set_translation(i, all);
        }
        for (std::size_t t = 0; t < sigma.size(); ++t)
            space.set_entry(m0 + t, sigma[t], elements_of(S.component(m0 + t)));
        pieces.push_back({std::move(space), m0 > 0});
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::uint64_t count = saturating_mul(gl_order(q, m0), ipow(q, m0 * (m - m0) + m0));
    std::vector<std::size_t> class_size(m, 0);
    for (std::size_t i = m0; i < m; ++i) {
        ++class_size[label[i]];
        count = saturating_mul(count, S.component(i).size());
    }
    for (auto c : class_size)
        for (std::size_t k = 2; k <= c; ++k)
            count = saturating_mul(count, k);

    auto predicate = [S, m0, label, F, m](const AffineTransformation& T) {
        if (!same_shape(T, F, m))
            return false;
        for (std::size_t i = m0; i < m; ++i) {
            if (!T.b()[i].is_zero())
                return false;
            std::size_t nonzero = 0;
            for (std::size_t j = 0; j < m; ++j) {
                const FieldElement a = T.A()(i, j);
                if (a.is_zero())
                    continue;
                ++nonzero;
                if (j < m0 || label[j] != label[i] || !S.component(i).contains(a))
                    return false;
            }
            if (nonzero != 1)
                return false;
        }
        return T.is_invertible();
    };
    return Family(kind, std::move(params), std::move(pieces), predicate,
                  [count] { return count; });
}

std::size_t leading_full(const CartesianSet& S) {
    std::size_t m0 = 0;
    while (m0 < S.dimension() && S.component(m0).kind() == ComponentKind::FullField)
        ++m0;
    return m0;
}

} // namespace

Family lta(const Field& F, std::size_t m) {
    const auto all = F.elements();
    const auto nonzero = F.nonzero_elements();
    CandidateSpace space = CandidateSpace::full(F, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            space.set_entry(i, j, j == i ? nonzero : std::vector<FieldElement>{F.zero()});
    const std::uint64_t q = F.q();
    const std::uint64_t count =
        saturating_mul(saturating_mul(ipow(q - 1, m), ipow(q, m * (m - 1) / 2)), ipow(q, m));
    auto predicate = [F, m, all](const AffineTransformation& T) {
        return same_shape(T, F, m) && lower_triangular_block(T.A(), m, all);
    };
    return Family(FamilyKind::LTA, {{"m", static_cast<std::int64_t>(m)}},
                  {{std::move(space), false}}, predicate, [count] { return count; });
}

TransformStream enumerate_LTA(const Field& F, std::size_t m, std::uint64_t budget) {
    return lta(F, m).enumerate(budget);
}

Family ml_invertible(const StableMatrixPattern& pattern, const Field& F) {
    const std::size_t m = pattern.m;
    CandidateSpace space = CandidateSpace::full(F, m);
    std::int64_t edges = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!pattern.allowed(i, j))
                space.set_entry(i, j, {F.zero()});
            else if (i != j)
                ++edges;
        }
    auto predicate = [F, m, pattern](const AffineTransformation& T) {
        if (!same_shape(T, F, m))
            return false;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!pattern.allowed(i, j) && !T.A()(i, j).is_zero())
                    return false;
        return T.is_invertible();
    };
    auto count = [F, m, space]() {
        // invertible matrices on the mask, times all translations
        CandidateSpace linear = space;
        for (std::size_t i = 0; i < m; ++i)
            linear.set_translation(i, {F.zero()});
        std::uint64_t n = 0;
        TransformStream::over(linear, UINT64_MAX).for_each([&](const AffineTransformation& T) {
            if (T.is_invertible())
                ++n;
        });
        return saturating_mul(n, ipow(F.q(), m));
    };
    return Family(FamilyKind::MLInvertible,
                  {{"m", static_cast<std::int64_t>(m)}, {"edges", edges}},
                  {{std::move(space), true}}, predicate, count);
}

TransformStream enumerate_ML_invertible(const MonomialSet& L, const Field& F,
                                        std::uint64_t budget) {
    return ml_invertible(stable_pattern(L, F.p()), F).enumerate(budget);
}

Family characterize_mult_product(const CartesianSet& S) {
    bool torus = true;
    for (const auto& c : S.components()) {
        if (!c.is_multiplicative_group())
            throw std::invalid_argument("every component must be a multiplicative subgroup");
        torus = torus && c.order() == S.field().q() - 1;
    }
    return block_family(S, 0, torus ? FamilyKind::TorusProduct : FamilyKind::MultSubgroupProduct,
                        {{"m", static_cast<std::int64_t>(S.dimension())}});
}

Family characterize_mixed_full_torus(const CartesianSet& S) {
    const std::size_t s = leading_full(S);
    for (std::size_t i = s; i < S.dimension(); ++i) {
        const auto& c = S.component(i);
        if (!c.is_multiplicative_group() || c.order() != S.field().q() - 1)
            throw std::invalid_argument("expected F_q^s x (F_q^*)^(m-s)");
    }
    return block_family(S, s, FamilyKind::MixedFullTorus,
                        {{"m", static_cast<std::int64_t>(S.dimension())},
                         {"s", static_cast<std::int64_t>(s)}});
}

Family characterize_mixed_general(const CartesianSet& S) {
    const std::size_t m0 = leading_full(S);
    std::int64_t blocks = 0;
    for (std::size_t i = m0; i < S.dimension(); ++i) {
        const auto& c = S.component(i);
        if (!c.is_multiplicative_group())
            throw std::invalid_argument("expected full fields followed by multiplicative subgroups");
        if (i > m0 && c.same_set(S.component(i - 1)))
            continue;
        for (std::size_t j = m0; j < i; ++j)
            if (S.component(j).same_set(c))
                throw std::invalid_argument("subgroup blocks must be distinct and contiguous");
        ++blocks;
    }
    return block_family(S, m0, FamilyKind::MixedGeneral,
                        {{"m", static_cast<std::int64_t>(S.dimension())},
                         {"m0", static_cast<std::int64_t>(m0)},
                         {"blocks", blocks}});
}

Family characterize_additive_power(const CartesianSet& S) {
    const SetComponent& G = S.component(0);
    for (const auto& c : S.components())
        if (!c.is_additive_group() || !c.same_set(G))
            throw std::invalid_argument("expected G^m for one additive subgroup G");
    const Field F = S.field();
    const std::size_t m = S.dimension();
    const std::uint32_t d = stabilizer_subfield(G);
    const auto sub = F.subfield_elements(d);
    const auto g = elements_of(G);
    CandidateSpace space(F, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            space.set_entry(i, j, sub);
        space.set_translation(i, g);
    }
    const std::uint64_t qq = sub.size();
    const std::uint64_t count = saturating_mul(gl_order(qq, m), ipow(g.size(), m));
    auto predicate = [F, m, G, d](const AffineTransformation& T) {
        if (!same_shape(T, F, m))
            return false;
        for (std::size_t i = 0; i < m; ++i) {
            if (!G.contains(T.b()[i]))
                return false;
            for (std::size_t j = 0; j < m; ++j)
                if (!F.in_subfield(T.A()(i, j), d))
                    return false;
        }
        return T.is_invertible();
    };
    return Family(FamilyKind::AdditivePower,
                  {{"m", static_cast<std::int64_t>(m)},
                   {"subfield_degree", d},
                   {"group_size", static_cast<std::int64_t>(g.size())}},
                  {{std::move(space), true}}, predicate, [count] { return count; });
}

CandidateSpace HeteroPattern::candidates() const {
    CandidateSpace space(field, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            space.set_entry(i, j, entry(i, j));
        space.set_translation(i, translations[i]);
    }
    return space;
}

HeteroPattern additive_hetero_pattern(const CartesianSet& S) {
    for (const auto& c : S.components())
        if (!c.is_additive_group())
            throw std::invalid_argument("every component must be an additive subgroup");
    HeteroPattern h{S.field(), S.dimension(), {}, {}};
    for (std::size_t i = 0; i < h.m; ++i) {
        for (std::size_t j = 0; j < h.m; ++j)
            h.entries.push_back(transporter_space(S.component(i), S.component(j)));
        h.translations.push_back(elements_of(S.component(i)));
    }
    return h;
}

Family borel_claimed_subgroup(const CartesianSet& S, const MonomialSet& L) {
    if (L.variables() != S.dimension())
        throw std::invalid_argument("monomial set and point set have different dimensions");
    if (!is_decreasing(L) || !has_borel_property(L))
        throw std::invalid_argument("monomial set is not decreasing with the Borel property");
    const Field F = S.field();
    const std::size_t m = S.dimension();
    const std::uint64_t q = F.q();
    const auto all = F.elements();
    const std::size_t m0 = leading_full(S);

    bool additive = m0 == 0;
    for (const auto& c : S.components())
        additive = additive && c.is_additive_group() && c.same_set(S.component(0));
    if (additive) {
        const SetComponent& G = S.component(0);
        const std::uint32_t d = stabilizer_subfield(G);
        const auto sub = F.subfield_elements(d);
        const auto g = elements_of(G);
        std::vector<FieldElement> sub_nonzero(sub.begin() + 1, sub.end());
        CandidateSpace space(F, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j <= i; ++j)
                space.set_entry(i, j, j == i ? sub_nonzero : sub);
            space.set_translation(i, g);
        }
        const std::uint64_t qq = sub.size();
        const std::uint64_t count = saturating_mul(
            saturating_mul(ipow(qq - 1, m), ipow(qq, m * (m - 1) / 2)), ipow(g.size(), m));
        auto predicate = [F, m, G, sub](const AffineTransformation& T) {
            if (!same_shape(T, F, m) || !lower_triangular_block(T.A(), m, sub))
                return false;
            for (auto x : T.b())
                if (!G.contains(x))
                    return false;
            return true;
        };
        return Family(FamilyKind::BorelBlockDiag,
                      {{"m", static_cast<std::int64_t>(m)}, {"subfield_degree", d}},
                      {{std::move(space), false}}, predicate, [count] { return count; });
    }

    for (std::size_t i = m0; i < m; ++i)
        if (!S.component(i).is_multiplicative_group())
            throw std::invalid_argument(
                "expected F_q^m0 x (multiplicative subgroups) or G^m with G additive");
    CandidateSpace space(F, m);
    const auto nonzero = F.nonzero_elements();
    for (std::size_t i = 0; i < m; ++i) {
        if (i < m0) {
            for (std::size_t j = 0; j <= i; ++j)
                space.set_entry(i, j, j == i ? nonzero : all);
            space.set_translation(i, all);
        } else {
            space.set_entry(i, i, {F.one()});
        }
    }
    const std::uint64_t count = saturating_mul(
        saturating_mul(ipow(q - 1, m0), ipow(q, m0 * (m0 - 1) / 2)), ipow(q, m0));
    auto predicate = [F, m, m0, all](const AffineTransformation& T) {
        if (!same_shape(T, F, m) || !lower_triangular_block(T.A(), m0, all))
            return false;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i < m0 && j < m0)
                    continue;
                if (T.A()(i, j) != (i == j ? F.one() : F.zero()))
                    return false;
            }
        for (std::size_t i = m0; i < m; ++i)
            if (!T.b()[i].is_zero())
                return false;
        return true;
    };
    return Family(FamilyKind::BorelBlockDiag,
                  {{"m", static_cast<std::int64_t>(m)}, {"m0", static_cast<std::int64_t>(m0)}},
                  {{std::move(space), false}}, predicate, [count] { return count; });
}

} // namespace cartperm
