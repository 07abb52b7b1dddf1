#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cartperm/cartesian_sets.hpp"

using namespace cartperm;

namespace {

FieldElement el(std::uint32_t c) { return FieldElement{c}; }

std::vector<FieldElement> els(std::initializer_list<std::uint32_t> codes) {
    std::vector<FieldElement> out;
    for (auto c : codes)
        out.push_back(el(c));
    return out;
}

std::set<std::uint32_t> codes_of(std::span<const FieldElement> xs) {
    std::set<std::uint32_t> out;
    for (auto x : xs)
        out.insert(x.code());
    return out;
}

} // namespace

TEST(CartesianSet, RowMajorPointOrder) {
    const Field F = Field::make(3, 1);
    const auto zero_one = els({0, 1});
    const CartesianSet S({SetComponent::multiplicative(F, 2), SetComponent::explicit_set(F, zero_one)});
    ASSERT_EQ(S.size(), 4u);
    const std::vector<Point> expected = {els({1, 0}), els({1, 1}), els({2, 0}), els({2, 1})};
    EXPECT_EQ(enumerate_points(S), expected);
    for (std::uint64_t i = 0; i < S.size(); ++i)
        EXPECT_EQ(S.index_of(S.point(i)), i);
    EXPECT_FALSE(S.contains(els({0, 0})));
    EXPECT_EQ(S.bounds(), (std::vector<std::uint32_t>{2, 2}));
}

TEST(CartesianSet, RejectsBadComponents) {
    const Field F = Field::make(3, 1), G = Field::make(5, 1);
    EXPECT_THROW(CartesianSet({}), std::invalid_argument);
    EXPECT_THROW(CartesianSet({SetComponent::full_field(F), SetComponent::full_field(G)}),
                 std::invalid_argument);
    EXPECT_THROW(SetComponent::multiplicative(F, 3), std::invalid_argument);
    EXPECT_THROW(SetComponent::explicit_set(F, std::vector<FieldElement>{}), std::invalid_argument);
    EXPECT_THROW(CartesianSet({SetComponent::multiplicative(F, 1)}), std::invalid_argument);
}

TEST(SetComponent, MultiplicativeCanonicalOrder) {
    const Field F = Field::make(2, 4);
    const auto G = SetComponent::multiplicative(F, 5);
    const FieldElement g = F.pow(F.primitive_element(), 3);
    EXPECT_EQ(G.generator(), g);
    ASSERT_EQ(G.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i)
        EXPECT_EQ(G.elements()[i], F.pow(g, static_cast<std::int64_t>(i)));
    EXPECT_EQ(sum_of_elements(G), F.zero());
}

TEST(SetComponent, AdditiveCanonicalOrder) {
    const Field F = Field::make(2, 4);
    // alpha^6 = 12, alpha^11 = 14
    const auto G = SetComponent::additive(F, els({12, 14}));
    EXPECT_EQ(codes_of(G.elements()), (std::set<std::uint32_t>{0, 2, 12, 14}));
    ASSERT_EQ(G.basis().size(), 2u);
    EXPECT_EQ(G.elements()[0], F.zero());
    EXPECT_EQ(G.elements()[1], G.basis()[0]);
    EXPECT_EQ(G.elements()[2], G.basis()[1]);
    EXPECT_EQ(G.elements()[3], F.add(G.basis()[0], G.basis()[1]));
}

TEST(Classify, RoutesByClosure) {
    const Field F = Field::make(2, 4);
    EXPECT_EQ(classify_subset(F, F.elements()).kind(), ComponentKind::FullField);
    EXPECT_EQ(classify_subset(F, F.nonzero_elements()).kind(), ComponentKind::MultiplicativeSubgroup);
    const auto cube_roots = SetComponent::multiplicative(F, 3);
    const std::vector<FieldElement> mixed(cube_roots.elements().rbegin(), cube_roots.elements().rend());
    const auto c = classify_subset(F, mixed);
    EXPECT_EQ(c.kind(), ComponentKind::MultiplicativeSubgroup);
    EXPECT_EQ(c.order(), 3u);
    EXPECT_TRUE(c.same_set(cube_roots));
    const auto add = classify_subset(F, els({14, 0, 12, 2}));
    EXPECT_EQ(add.kind(), ComponentKind::AdditiveSubgroup);
    EXPECT_EQ(classify_subset(F, els({0, 1, 2})).kind(), ComponentKind::Explicit);
    EXPECT_THROW(classify_subset(F, els({1, 1})), std::invalid_argument);
    EXPECT_THROW(classify_subset(F, std::vector<FieldElement>{}), std::invalid_argument);
}

TEST(StabilizerSubfield, KnownGroups) {
    const Field F = Field::make(2, 4);
    EXPECT_EQ(stabilizer_subfield(SetComponent::additive(F, els({12, 14}))), 2u);
    EXPECT_EQ(stabilizer_subfield(SetComponent::additive(F, els({1}))), 1u);
    EXPECT_EQ(stabilizer_subfield(SetComponent::full_field(F)), 4u);
    EXPECT_EQ(stabilizer_subfield(SetComponent::additive(F, els({1, 2, 4}))), 1u);
    EXPECT_THROW(stabilizer_subfield(SetComponent::multiplicative(F, 3)), std::invalid_argument);
}

TEST(StabilizerSubfield, EqualsSelfTransporter) {
    // H(G, G) is exactly the stabilizer subfield, for every additive G of GF(16)
    const Field F = Field::make(2, 4);
    for (std::uint32_t a = 1; a < 16; ++a)
        for (std::uint32_t b = a + 1; b < 16; ++b) {
            const auto G = SetComponent::additive(F, els({a, b}));
            EXPECT_EQ(transporter_space(G, G), F.subfield_elements(stabilizer_subfield(G)));
        }
}

TEST(Transporter, SmallerRowGivesZero) {
    const Field F = Field::make(2, 4);
    const auto big = SetComponent::additive(F, els({1, 2, 4}));
    const auto small = SetComponent::additive(F, els({1}));
    EXPECT_EQ(transporter_space(small, big), els({0}));
    const auto up = transporter_space(big, small);
    EXPECT_EQ(codes_of(up), codes_of(big.elements()));
}

TEST(Transporter, IsAnAdditiveGroup) {
    const Field F = Field::make(3, 2);
    const auto G1 = SetComponent::additive(F, els({1}));
    const auto G2 = SetComponent::additive(F, els({3}));
    for (const auto* row : {&G1, &G2})
        for (const auto* col : {&G1, &G2}) {
            const auto H = transporter_space(*row, *col);
            const std::set<std::uint32_t> h = codes_of(H);
            for (auto x : H)
                for (auto y : H)
                    EXPECT_TRUE(h.count(F.add(x, y).code()));
        }
}

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSubgroupFields = {
    {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {13, 1},
};

std::vector<std::uint64_t> nontrivial_orders(const Field& F) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 2; s < F.q(); ++s)
        if ((F.q() - 1) % s == 0)
            out.push_back(s);
    return out;
}

} // namespace

TEST(SetComponent, SubgroupSumsVanishUnlessTrivial) {
    for (auto [p, k] : kSubgroupFields) {
        const Field F = Field::make(p, k);
        for (std::uint64_t s = 1; s < F.q(); ++s) {
            if ((F.q() - 1) % s != 0)
                continue;
            const auto G = SetComponent::multiplicative(F, s);
            FieldElement naive = F.zero();
            for (auto g : G.elements())
                naive = F.add(naive, g);
            EXPECT_EQ(sum_of_elements(G), naive);
            EXPECT_EQ(sum_of_elements(G), s == 1 ? F.one() : F.zero()) << "q=" << F.q() << " s=" << s;
        }
    }
}

TEST(SetComponent, ShiftedSubgroupIsNeverASubgroup) {
    for (auto [p, k] : kSubgroupFields) {
        const Field F = Field::make(p, k);
        const auto orders = nontrivial_orders(F);
        for (auto s1 : orders)
            for (auto s2 : orders) {
                const auto G1 = SetComponent::multiplicative(F, s1);
                const auto target = codes_of(SetComponent::multiplicative(F, s2).elements());
                for (auto a : F.elements())
                    for (auto b : F.nonzero_elements()) {
                        std::set<std::uint32_t> img;
                        for (auto g : G1.elements())
                            img.insert(F.add(F.mul(a, g), b).code());
                        ASSERT_NE(img, target) << "q=" << F.q() << " a=" << a.code()
                                               << " b=" << b.code();
                    }
            }
    }
}

namespace {

// some g in S with a.g + b outside component i
bool heavy_row_escapes(const CartesianSet& S, const std::vector<Point>& pts,
                       const std::vector<std::uint32_t>& a, FieldElement b, std::size_t i) {
    const Field& F = S.field();
    return std::any_of(pts.begin(), pts.end(), [&](const Point& g) {
        FieldElement v = b;
        for (std::size_t j = 0; j < a.size(); ++j)
            v = F.add(v, F.mul(el(a[j]), g[j]));
        return !S.component(i).contains(v);
    });
}

} // namespace

TEST(CartesianSet, HeavyRowsEscapeEqualTorusComponents) {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        const Field F = Field::make(p, k);
        for (auto s : nontrivial_orders(F))
            for (std::size_t m = 2; m <= 3; ++m) {
                const CartesianSet S(std::vector<SetComponent>(m, SetComponent::multiplicative(F, s)));
                const auto pts = enumerate_points(S);
                std::vector<std::uint32_t> a(m, 0);
                while (true) {
                    std::size_t weight = 0;
                    for (auto c : a)
                        weight += c != 0;
                    if (weight >= 2)
                        for (std::size_t i = 0; i < m; ++i)
                            for (auto b : F.elements())
                                ASSERT_TRUE(heavy_row_escapes(S, pts, a, b, i))
                                    << "q=" << F.q() << " s=" << s << " m=" << m;
                    std::size_t j = 0;
                    while (j < m && a[j] + 1 == F.q())
                        a[j++] = 0;
                    if (j == m)
                        break;
                    ++a[j];
                }
            }
    }
}

TEST(CartesianSet, HeavyRowCanStayInsideALargerComponent) {
    // {+-1} + {+-1} + 1 = {1, 3, 4} lies inside GF(5)*
    const Field F = Field::make(5, 1);
    const CartesianSet S({SetComponent::multiplicative(F, 4), SetComponent::multiplicative(F, 2),
                          SetComponent::multiplicative(F, 2)});
    const auto pts = enumerate_points(S);
    EXPECT_FALSE(heavy_row_escapes(S, pts, {0, 1, 1}, F.one(), 0));
    EXPECT_TRUE(heavy_row_escapes(S, pts, {0, 1, 1}, F.one(), 1));
    EXPECT_TRUE(heavy_row_escapes(S, pts, {1, 1, 1}, F.one(), 0));
}

TEST(CartesianSet, PointEnumerationIsInjectiveAndStable) {
    const Field F = Field::make(3, 2);
    const CartesianSet S({SetComponent::multiplicative(F, 4), SetComponent::additive(F, els({1})),
                          SetComponent::explicit_set(F, els({0, 5, 7}))});
    const auto pts = enumerate_points(S);
    ASSERT_EQ(pts.size(), S.size());
    EXPECT_EQ(std::set<Point>(pts.begin(), pts.end()).size(), pts.size());
    EXPECT_EQ(enumerate_points(S), pts);
    for (std::uint64_t i = 0; i < S.size(); ++i) {
        EXPECT_EQ(S.point(i), pts[i]);
        EXPECT_TRUE(S.contains(pts[i]));
    }
}

TEST(Transporter, SelfTransporterIsASubfieldActingOnG) {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 2}, {2, 6}, {3, 3}}) {
        const Field F = Field::make(p, k);
        std::mt19937_64 rng(0x7a5 + F.q());
        std::uniform_int_distribution<std::uint32_t> pick(1, F.q() - 1);
        for (int t = 0; t < 30; ++t) {
            const auto G = SetComponent::additive(F, els({pick(rng), pick(rng)}));
            const auto H = transporter_space(G, G);
            std::uint64_t n = H.size();
            while (n % p == 0)
                n /= p;
            EXPECT_EQ(n, 1u);
            const auto h = codes_of(H);
            for (auto x : H)
                for (auto y : H)
                    ASSERT_TRUE(h.count(F.mul(x, y).code()));
            for (auto x : H)
                for (auto g : G.elements())
                    ASSERT_TRUE(G.contains(F.mul(x, g)));
        }
    }
}
