#include <gtest/gtest.h>

#include <algorithm>

#include "cartperm/codes.hpp"
#include "cartperm/group_families.hpp"
#include "cartperm/oracle.hpp"

using namespace cartperm;

namespace {

FieldElement el(std::uint32_t c) { return FieldElement{c}; }

std::uint64_t count_stream(TransformStream s) {
    std::uint64_t n = 0;
    s.for_each([&](const AffineTransformation&) { ++n; });
    return n;
}

} // namespace

TEST(EnumerateAll, Counts) {
    const OracleBudget budget;
    EXPECT_EQ(count_stream(enumerate_all_affine(Field::make(2, 1), 2, budget)), 64u);
    EXPECT_EQ(count_stream(enumerate_all_affine(Field::make(2, 1), 2, budget, true)), 24u);
    EXPECT_EQ(count_stream(enumerate_all_affine(Field::make(3, 1), 2, budget)), 729u);
    EXPECT_EQ(count_stream(enumerate_all_affine(Field::make(3, 1), 2, budget, true)), 432u);
    const auto one = enumerate_all_affine(Field::make(2, 1), 1, budget, true).collect();
    ASSERT_EQ(one.size(), 2u);
    EXPECT_TRUE(one[0].b()[0].is_zero());
    EXPECT_EQ(one[1].b()[0], el(1));
    OracleBudget tiny;
    tiny.max_transformations = 100;
    EXPECT_THROW(enumerate_all_affine(Field::make(3, 1), 2, tiny), BudgetExceeded);
}

TEST(EnumerateAll, ColumnMajorCountingOrder) {
    auto s = enumerate_all_affine(Field::make(2, 1), 2, OracleBudget{});
    const auto first = s.collect();
    // second candidate bumps A(0,0), third A(1,0)
    EXPECT_EQ(first[1].A()(0, 0), el(1));
    EXPECT_EQ(first[2].A()(1, 0), el(1));
    EXPECT_EQ(first[16].b()[0], el(1));
}

TEST(Stabilizers, KnownSets) {
    const OracleBudget budget;
    const Field f3 = Field::make(3, 1);
    const CartesianSet torus({SetComponent::multiplicative(f3, 2), SetComponent::multiplicative(f3, 2)});
    EXPECT_EQ(oracle_stabilizers(torus, budget).size(), 8u);
    const CartesianSet plane({SetComponent::full_field(f3), SetComponent::full_field(f3)});
    EXPECT_EQ(oracle_stabilizers(plane, budget).size(), 432u);
    const CartesianSet mixed({SetComponent::full_field(f3), SetComponent::multiplicative(f3, 2)});
    EXPECT_EQ(oracle_stabilizers(mixed, budget).size(), 36u);
}

TEST(Stabilizers, IndependentOfThreadCount) {
    const Field f4 = Field::make(2, 2);
    const CartesianSet S({SetComponent::full_field(f4), SetComponent::multiplicative(f4, 3)});
    OracleBudget one, four;
    four.jobs = 4;
    EXPECT_EQ(oracle_stabilizers(S, one), oracle_stabilizers(S, four));
}

TEST(PermGroup, DeltaMakesSpanConditionVacuous) {
    const Field f3 = Field::make(3, 1);
    const CartesianSet S({SetComponent::full_field(f3), SetComponent::multiplicative(f3, 2)});
    MonomialSet all(2, S.bounds(), {Monomial({2, 1})});
    all = divisibility_closure(all);
    const OracleBudget budget;
    EXPECT_EQ(oracle_affine_perm_group(all, S, budget), oracle_stabilizers(S, budget));
}

TEST(PermGroup, GroupAxiomsAndTwoRoutes) {
    const Field f3 = Field::make(3, 1);
    const CartesianSet S({SetComponent::full_field(f3), SetComponent::full_field(f3)});
    const MonomialSet L = divisibility_closure(MonomialSet(2, S.bounds(), {Monomial({0, 2})}));
    const OracleBudget budget;
    const auto stab = oracle_stabilizers(S, budget);
    const auto group = filter_span(stab, L, S);
    EXPECT_LT(group.size(), stab.size());
    const auto axioms = check_group_axioms(group, 1u << 20, 1);
    EXPECT_TRUE(axioms.ok());
    EXPECT_TRUE(axioms.exhaustive);
    const auto sampled = check_group_axioms(group, 100, 1);
    EXPECT_TRUE(sampled.ok());
    EXPECT_FALSE(sampled.exhaustive);
    EXPECT_TRUE(two_route_check(stab, L, S).empty());
    for (const auto& T : group)
        ASSERT_TRUE(code_permutation_check(T, L, S));
}

TEST(PermGroup, AxiomCheckerCatchesNonGroups) {
    const Field f2 = Field::make(2, 1);
    const std::vector<AffineTransformation> only_shift = {
        AffineTransformation::translation(f2, {el(1)})};
    const auto g = check_group_axioms(only_shift, 100, 0);
    EXPECT_FALSE(g.has_identity);
    EXPECT_FALSE(g.closed_under_composition);
}

TEST(Report, RelationsAndWitnesses) {
    const Field f3 = Field::make(3, 1);
    const CartesianSet S({SetComponent::full_field(f3), SetComponent::multiplicative(f3, 2)});
    const OracleBudget budget;
    const auto oracle = oracle_stabilizers(S, budget);
    const auto fam = characterize_mixed_full_torus(S).enumerate(1000).collect();
    auto sorted = fam;
    std::sort(sorted.begin(), sorted.end());
    const auto eq = compare_with_oracle("F3 x F3*", sorted, oracle, true, S);
    EXPECT_EQ(eq.relation, Relation::Equal);
    EXPECT_TRUE(eq.passed());

    std::vector<AffineTransformation> part(oracle.begin(), oracle.begin() + 5);
    const auto sub = compare_with_oracle("part", part, oracle, false, S);
    EXPECT_EQ(sub.relation, Relation::ProperContainment);
    EXPECT_EQ(sub.missing.size(), oracle.size() - 5);
    EXPECT_TRUE(sub.passed());

    std::vector<AffineTransformation> wrong = {AffineTransformation::translation(f3, {el(0), el(1)})};
    const auto bad = compare_with_oracle("bad", wrong, oracle, false, S);
    EXPECT_EQ(bad.relation, Relation::Violation);
    ASSERT_EQ(bad.counterexamples.size(), 1u);
    EXPECT_TRUE(bad.counterexamples[0].point.has_value());
    EXPECT_FALSE(bad.passed());
}

TEST(PermGroup, FamiliesSatisfyGroupAxioms) {
    const Field f3 = Field::make(3, 1), f4 = Field::make(2, 2), f5 = Field::make(5, 1);
    const std::vector<CartesianSet> sets = {
        CartesianSet({SetComponent::multiplicative(f4, 3), SetComponent::multiplicative(f4, 3)}),
        CartesianSet({SetComponent::full_field(f3), SetComponent::multiplicative(f3, 2)}),
        CartesianSet({SetComponent::full_field(f5), SetComponent::multiplicative(f5, 2)}),
    };
    const auto with = [](const CartesianSet& S) {
        for (auto* f : {&characterize_mult_product, &characterize_mixed_full_torus,
                        &characterize_mixed_general}) {
            try {
                return f(S);
            } catch (const std::invalid_argument&) {
            }
        }
        throw std::logic_error("no characterization applies");
    };
    for (const auto& S : sets) {
        auto group = with(S).enumerate(1u << 20).collect();
        std::sort(group.begin(), group.end());
        const auto axioms = check_group_axioms(group, 1u << 20, 3);
        EXPECT_TRUE(axioms.ok());
        EXPECT_TRUE(axioms.exhaustive);
    }
    auto lta_maps = enumerate_LTA(f3, 2, 1u << 20).collect();
    std::sort(lta_maps.begin(), lta_maps.end());
    EXPECT_TRUE(check_group_axioms(lta_maps, 1u << 20, 3).ok());
}

TEST(PermGroup, NineElementExampleContainsEveryLowerTriangularMap) {
    const Field F = Field::make(3, 2);
    const CartesianSet S({SetComponent::full_field(F), SetComponent::full_field(F)});
    MonomialSet L(2, std::vector<std::uint32_t>{9, 9});
    for (std::uint32_t i = 0; i <= 4; ++i)
        for (std::uint32_t j = 0; i + j <= 4; ++j)
            if (i + j <= 3 || i != 2)
                L.insert(Monomial({i, j}));
    ASSERT_EQ(L.size(), 14u);
    SpanChecker checker(L, S);
    std::uint64_t n = 0;
    enumerate_LTA(F, 2, 1u << 20).for_each([&](const AffineTransformation& T) {
        ++n;
        ASSERT_FALSE(checker.violation(T).has_value());
    });
    EXPECT_EQ(n, 46656u);
}
