#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cartperm/codes.hpp"

using namespace cartperm;

namespace {

FieldElement el(std::uint32_t c) { return FieldElement{c}; }

MonomialSet delta(const CartesianSet& S) {
    const auto bounds = S.bounds();
    MonomialSet L(S.dimension(), bounds);
    std::vector<std::uint32_t> e(S.dimension(), 0);
    while (true) {
        L.insert(Monomial(e));
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == bounds[i])
            e[i++] = 0;
        if (i == e.size())
            break;
    }
    return L;
}

SetComponent random_component(const Field& F, std::mt19937_64& rng) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return SetComponent::full_field(F);
    case 1: {
        std::vector<std::uint64_t> orders;
        for (std::uint64_t s = 2; s < F.q(); ++s)
            if ((F.q() - 1) % s == 0)
                orders.push_back(s);
        if (orders.empty())
            return SetComponent::full_field(F);
        return SetComponent::multiplicative(
            F, orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)]);
    }
    case 2: return SetComponent::additive(F, std::vector{F.one()});
    default: {
        std::vector<FieldElement> all = F.elements();
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::uniform_int_distribution<std::size_t>(2, F.q())(rng));
        return SetComponent::explicit_set(F, all);
    }
    }
}

} // namespace

TEST(Codes, WorkedExampleMatrix) {
    const Field F = Field::make(3, 1);
    const auto zero_one = std::vector{el(0), el(1)};
    const CartesianSet S({SetComponent::multiplicative(F, 2), SetComponent::explicit_set(F, zero_one)});
    const MonomialSet L(2, S.bounds(), {Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1})});
    const auto code = build_code(L, S);
    Matrix expected(3, 4);
    const std::uint32_t rows[3][4] = {{1, 1, 1, 1}, {1, 1, 2, 2}, {0, 1, 0, 1}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            expected(r, c) = el(rows[r][c]);
    EXPECT_EQ(code.rows(), expected);
    EXPECT_EQ(dimension(code), 3u);
}

TEST(Codes, DeltaAndRepetition) {
    const Field F = Field::make(2, 2);
    const CartesianSet S({SetComponent::full_field(F), SetComponent::multiplicative(F, 3)});
    const auto full = build_code(delta(S), S);
    EXPECT_EQ(dimension(full), S.size());
    const MonomialSet one(2, S.bounds(), {Monomial({0, 0})});
    const auto rep = build_code(one, S);
    EXPECT_EQ(dimension(rep), 1u);
    for (std::size_t c = 0; c < rep.length(); ++c)
        EXPECT_EQ(rep.rows()(0, c), F.one());
}

TEST(Codes, RejectsMonomialsOutsideDelta) {
    const Field F = Field::make(3, 1);
    const CartesianSet S({SetComponent::full_field(F)});
    const MonomialSet L(1, std::nullopt, {Monomial({3})});
    EXPECT_THROW(build_code(L, S), std::invalid_argument);
}

TEST(Codes, DimensionEqualsSizeOnRandomConfigurations) {
    std::mt19937_64 rng(0xc0de);
    const std::vector<Field> fields = {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2),
                                       Field::make(5, 1), Field::make(3, 2)};
    for (int t = 0; t < 200; ++t) {
        const Field& F = fields[t % fields.size()];
        const std::size_t m = 1 + t % 3;
        std::vector<SetComponent> comps;
        for (std::size_t i = 0; i < m; ++i)
            comps.push_back(random_component(F, rng));
        const CartesianSet S(comps);
        if (S.size() > 400)
            continue;
        const auto D = delta(S);
        MonomialSet L(m, S.bounds());
        for (const auto& u : D)
            if (std::bernoulli_distribution(0.4)(rng))
                L.insert(u);
        if (L.empty())
            L.insert(Monomial::one(m));
        ASSERT_EQ(dimension(build_code(L, S)), L.size());
    }
}

TEST(Codes, PermutedCodeEqualityViaRref) {
    const Field F = Field::make(3, 1);
    const CartesianSet S({SetComponent::full_field(F), SetComponent::full_field(F)});
    const MonomialSet L = divisibility_closure(MonomialSet(2, S.bounds(), {Monomial({1, 1})}));
    const auto code = build_code(L, S);
    // (x1, x2) -> (x2, x1) preserves the code, (x1, x1 + x2) does not
    Matrix swap(2, 2);
    swap(0, 1) = el(1);
    swap(1, 0) = el(1);
    EXPECT_TRUE(code_permutation_check(AffineTransformation::linear(F, swap), L, S));
    Matrix shear = Matrix::identity(2);
    shear(1, 0) = el(1);
    EXPECT_FALSE(code_permutation_check(AffineTransformation::linear(F, shear), code, S));
    EXPECT_TRUE(codes_equal(code, code));
}
