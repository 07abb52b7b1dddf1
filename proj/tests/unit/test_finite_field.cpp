#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <utility>

#include "cartperm/finite_field.hpp"
#include "oracles.hpp"

using namespace cartperm;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
    {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6},
};

FieldElement el(std::uint32_t c) { return FieldElement{c}; }

} // namespace

TEST(FiniteField, DefaultModulusIsSmallestIrreducible) {
    EXPECT_EQ(Field::make(2, 4).irreducible(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
    EXPECT_EQ(Field::make(3, 2).irreducible(), (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_EQ(Field::make(2, 2).irreducible(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FiniteField, RejectsBadParameters) {
    EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
    EXPECT_THROW(Field::make(2, 0), std::invalid_argument);
    EXPECT_THROW(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Field::make(3, 1).inv(el(0)), std::domain_error);
}

TEST(FiniteField, ExplicitModulusIsHonoured) {
    const Field F = Field::make(2, 4, std::vector<std::uint32_t>{1, 0, 0, 1, 1});
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b)
            ASSERT_EQ(F.mul(el(a), el(b)).code(), oracles::mul(a, b, 2, F.irreducible()));
}

TEST(FiniteField, AxiomsExhaustive) {
    for (auto [p, k] : kSmallFields) {
        const Field F = Field::make(p, k);
        const auto all = F.elements();
        ASSERT_EQ(all.size(), F.q());
        for (auto a : all) {
            EXPECT_EQ(F.add(a, F.zero()), a);
            EXPECT_EQ(F.mul(a, F.one()), a);
            EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
            if (!a.is_zero())
                EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
            for (auto b : all) {
                ASSERT_EQ(F.add(a, b), F.add(b, a));
                ASSERT_EQ(F.mul(a, b), F.mul(b, a));
                ASSERT_EQ(F.sub(F.add(a, b), b), a);
            }
        }
        if (F.q() > 27)
            continue; // triple loops stay below a few seconds
        for (auto a : all)
            for (auto b : all)
                for (auto c : all) {
                    ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
                    ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
                    ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
                }
    }
}

TEST(FiniteField, AssociativityRandomizedOnLargerFields) {
    std::mt19937_64 rng(0x5eed);
    for (auto [p, k] : kSmallFields) {
        const Field F = Field::make(p, k);
        std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
        for (int t = 0; t < 2000; ++t) {
            const auto a = el(pick(rng)), b = el(pick(rng)), c = el(pick(rng));
            ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
        }
    }
}

TEST(FiniteField, TablesAgreeWithSchoolbookOracle) {
    for (auto [p, k] : kSmallFields) {
        const Field F = Field::make(p, k);
        for (std::uint32_t a = 0; a < F.q(); ++a)
            for (std::uint32_t b = 0; b < F.q(); ++b) {
                ASSERT_EQ(F.mul(el(a), el(b)).code(), oracles::mul(a, b, p, F.irreducible()));
                ASSERT_EQ(F.add(el(a), el(b)).code(), oracles::add(a, b, p, k));
                ASSERT_EQ(reference_mul(F, el(a), el(b)), F.mul(el(a), el(b)));
            }
    }
}

TEST(FiniteField, LargeFieldUsesCoordinateArithmetic) {
    const Field F = Field::make(2, 17);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(1, F.q() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto a = el(pick(rng)), b = el(pick(rng));
        ASSERT_EQ(F.mul(a, b).code(), oracles::mul(a.code(), b.code(), 2, F.irreducible()));
        ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
    }
}

TEST(FiniteField, LargeOddFieldUsesCoordinateArithmetic) {
    const Field F = Field::make(3, 11);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint32_t> pick(1, F.q() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto a = el(pick(rng)), b = el(pick(rng));
        ASSERT_EQ(F.mul(a, b).code(), oracles::mul(a.code(), b.code(), 3, F.irreducible()));
        ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
    }
}

TEST(FiniteField, FrobeniusIsAdditive) {
    for (auto [p, k] : kSmallFields) {
        const Field F = Field::make(p, k);
        for (auto a : F.elements())
            for (auto b : F.elements())
                ASSERT_EQ(F.pow(F.add(a, b), p), F.add(F.pow(a, p), F.pow(b, p)));
    }
}

TEST(FiniteField, PowersAndOrders) {
    const Field F = Field::make(2, 4);
    const FieldElement beta = F.primitive_element();
    EXPECT_EQ(beta, F.root()); // x^4 + x + 1 is primitive
    EXPECT_EQ(F.multiplicative_order(beta), 15u);
    EXPECT_EQ(F.pow(beta, -1), F.inv(beta));
    EXPECT_EQ(F.pow(F.zero(), 0), F.one());
    EXPECT_EQ(F.pow(beta, 15), F.one());
    for (auto a : F.nonzero_elements())
        EXPECT_EQ(15u % F.multiplicative_order(a), 0u);
    // alpha^5 = alpha^2 + alpha
    EXPECT_EQ(F.pow(beta, 5).code(), 6u);
}

TEST(FiniteField, Subfields) {
    const Field F = Field::make(2, 4);
    EXPECT_EQ(F.subfield_elements(1).size(), 2u);
    const auto f4 = F.subfield_elements(2);
    ASSERT_EQ(f4.size(), 4u);
    EXPECT_EQ(f4, (std::vector<FieldElement>{el(0), el(1), el(6), el(7)}));
    EXPECT_THROW(F.in_subfield(el(1), 3), std::invalid_argument);
    const Field G = Field::make(3, 2);
    EXPECT_EQ(G.subfield_elements(1), (std::vector<FieldElement>{el(0), el(1), el(2)}));
}

TEST(FiniteField, CoordinatesRoundTrip) {
    const Field F = Field::make(3, 3);
    for (auto a : F.elements())
        EXPECT_EQ(F.from_coords(F.coords(a)), a);
    const std::vector<std::uint32_t> bad{3, 0, 0};
    EXPECT_THROW(F.from_coords(bad), std::invalid_argument);
    EXPECT_EQ(F.from_integer(-1), el(2));
    EXPECT_EQ(F.root(), el(3));
}

TEST(Irreducibility, MatchesKnownPolynomials) {
    const std::vector<std::uint32_t> aes{1, 1, 0, 1, 1, 0, 0, 0, 1};
    EXPECT_TRUE(is_irreducible(2, aes));
    const std::vector<std::uint32_t> square{1, 0, 1};
    EXPECT_FALSE(is_irreducible(2, square));
    EXPECT_TRUE(is_irreducible(3, square));
    EXPECT_TRUE(is_prime(65521));
    EXPECT_FALSE(is_prime(65535));
}

TEST(PAdic, ExpansionAndValue) {
    EXPECT_EQ(p_adic(10, 3).digits, (std::vector<std::uint32_t>{1, 0, 1}));
    EXPECT_TRUE(p_adic(0, 5).digits.empty());
    for (std::uint64_t n = 0; n < 300; ++n)
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            ASSERT_EQ(p_adic(n, p).value(p), n);
}

TEST(PAdic, LeqMatchesBinomialsModP) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t b = 0; b <= 64; ++b)
            for (std::uint32_t a = 0; a <= 64; ++a)
                ASSERT_EQ(leq_p(a, b, p), oracles::binomial_mod(b, a, p) != 0)
                    << a << " <=_" << p << " " << b;
}

TEST(PAdic, LeqSpotValues) {
    EXPECT_TRUE(leq_p(1, 3, 2));
    EXPECT_FALSE(leq_p(2, 5, 2));
    EXPECT_TRUE(leq_p(0, 0, 3));
    EXPECT_TRUE(leq_p(3, 4, 3)); // 3 = (0,1), 4 = (1,1)
    EXPECT_FALSE(leq_p(2, 4, 3));
}

TEST(PAdic, MultinomialChainMatchesDirectProduct) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t v = 0; v <= 12; ++v)
            for (std::uint32_t a = 0; a <= v; ++a)
                for (std::uint32_t b = 0; a + b <= v; ++b) {
                    const std::uint64_t parts[] = {a, b, v - a - b};
                    const std::uint32_t direct = oracles::binomial_mod(v, a, p) *
                                                 oracles::binomial_mod(v - a, b, p) % p;
                    ASSERT_EQ(multinomial_nonzero_mod_p(v, parts, p), direct != 0);
                }
    const std::uint64_t bad[] = {1, 1};
    EXPECT_THROW(multinomial_nonzero_mod_p(3, bad, 2), std::invalid_argument);
}
