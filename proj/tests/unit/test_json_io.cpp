#include <gtest/gtest.h>

#include <random>

#include "cartperm/json_io.hpp"

using namespace cartperm;

namespace {

FieldElement el(std::uint32_t c) { return FieldElement{c}; }

std::string pointer_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ConfigError& e) {
        return e.pointer();
    }
    return "<no error>";
}

} // namespace

TEST(JsonField, RoundTripAndDefaults) {
    const Field F = field_from_json(json::parse(R"({"p": 2, "k": 4})"));
    EXPECT_EQ(F.irreducible(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
    EXPECT_EQ(field_from_json(to_json(F)), F);
    EXPECT_EQ(field_from_json(json::parse(R"({"p": 7})")).q(), 7u);
}

TEST(JsonField, ErrorsCarryPointers) {
    EXPECT_EQ(pointer_of([] { field_from_json(json::parse(R"({"k": 2})"), "/field"); }), "/field/p");
    EXPECT_EQ(pointer_of([] { field_from_json(json::parse(R"({"p": 4})"), "/field"); }), "/field");
    EXPECT_EQ(pointer_of([] { field_from_json(json::parse(R"({"p": 2, "k": "x"})"), "/f"); }), "/f/k");
    EXPECT_EQ(pointer_of([] {
                  field_from_json(json::parse(R"({"p": 2, "k": 2, "irreducible": [1, 0, 1]})"));
              }),
              "");
}

TEST(JsonElements, CoordinateVectors) {
    const Field F = Field::make(3, 2);
    for (auto x : F.elements())
        EXPECT_EQ(element_from_json(F, element_to_json(F, x)), x);
    EXPECT_EQ(element_to_json(F, el(5)), json::parse("[2, 1]"));
    EXPECT_EQ(element_from_json(F, json(5)), el(5));
    EXPECT_EQ(pointer_of([&] { element_from_json(F, json::parse("[1]"), "/e"); }), "/e");
    EXPECT_EQ(pointer_of([&] { element_from_json(F, json::parse("[1, 3]"), "/e"); }), "/e/1");
    EXPECT_EQ(pointer_of([&] { element_from_json(F, json(9), "/e"); }), "/e");
}

TEST(JsonPolynomial, RoundTripRandom) {
    const Field F = Field::make(2, 3);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Polynomial f(F, 3);
        for (int k = 0; k < 6; ++k)
            f.add_term(Monomial({static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 4),
                                 static_cast<std::uint32_t>(rng() % 4)}),
                       el(static_cast<std::uint32_t>(rng() % 8)));
        EXPECT_EQ(polynomial_from_json(F, 3, to_json(f)), f);
    }
    EXPECT_EQ(pointer_of([&] {
                  polynomial_from_json(F, 3, json::parse(R"([{"exp": [1, 0], "coeff": [1, 0, 0]}])"), "/f");
              }),
              "/f/0/exp");
}

TEST(JsonSet, AllKindsRoundTrip) {
    const Field F = Field::make(2, 4);
    const json j = json::parse(R"({"components": [
        {"kind": "full"}, {"kind": "mult", "order": 5},
        {"kind": "add", "basis": [[0, 0, 1, 1], [0, 1, 1, 1]]},
        {"kind": "explicit", "elements": [[1, 0, 0, 0], [0, 1, 0, 0]]}]})");
    const CartesianSet S = cartesian_set_from_json(F, j);
    EXPECT_EQ(S.bounds(), (std::vector<std::uint32_t>{16, 5, 4, 2}));
    const CartesianSet back = cartesian_set_from_json(F, to_json(S));
    for (std::size_t i = 0; i < S.dimension(); ++i) {
        EXPECT_EQ(back.component(i).kind(), S.component(i).kind());
        EXPECT_TRUE(back.component(i).same_set(S.component(i)));
    }
    EXPECT_EQ(pointer_of([&] {
                  cartesian_set_from_json(F, json::parse(R"({"components": [{"kind": "mult", "order": 4}]})"),
                                          "/set");
              }),
              "/set/components/0");
    EXPECT_EQ(pointer_of([&] {
                  cartesian_set_from_json(F, json::parse(R"({"components": [{"kind": "odd"}]})"), "/set");
              }),
              "/set/components/0/kind");
    EXPECT_EQ(pointer_of([&] { cartesian_set_from_json(F, json::parse(R"({"components": []})"), "/set"); }),
              "/set/components");
}

TEST(JsonMonomials, ExplicitGeneratorsAndBareLists) {
    const MonomialSet L =
        monomial_set_from_json(json::parse(R"({"bound": [3, 3], "generators": [[2, 1]]})"));
    EXPECT_EQ(L.size(), 6u);
    EXPECT_EQ(monomial_set_from_json(to_json(L)), L);
    const MonomialSet bare = monomial_set_from_json(json::parse("[[0, 0], [1, 0]]"));
    EXPECT_EQ(bare.size(), 2u);
    EXPECT_FALSE(bare.bound().has_value());
    EXPECT_EQ(pointer_of([] {
                  monomial_set_from_json(json::parse(R"({"bound": [2, 2], "monomials": [[0, 2]]})"), "/L");
              }),
              "/L/monomials/0");
    EXPECT_EQ(pointer_of([] {
                  monomial_set_from_json(json::parse(R"({"bound": [2, 2], "monomials": [[0]]})"), "/L");
              }),
              "/L/monomials/0");
}

TEST(JsonGraph, WitnessesAndDiscards) {
    const MonomialSet L =
        monomial_set_from_json(json::parse(R"({"bound": [3, 2], "generators": [[2, 0], [1, 1]]})"));
    const json g = to_json(p_borel_graph(L, 3));
    EXPECT_EQ(g["adjacency"][0]["to"], json::parse("[2]"));
    EXPECT_TRUE(g["witness"].empty());
    EXPECT_FALSE(g["discarded_outside_delta"].empty());
    const MonomialSet M = monomial_set_from_json(json::parse(R"([[0, 0], [1, 0]])"));
    const json h = to_json(p_borel_graph(M, 2));
    ASSERT_EQ(h["witness"].size(), 1u);
    EXPECT_EQ(h["witness"][0]["from"], 1);
    EXPECT_EQ(h["witness"][0]["u"], json::parse("[1, 0]"));
}

TEST(JsonTransformation, RoundTripAndReport) {
    const Field F = Field::make(3, 1);
    Matrix A(2, 2);
    A(0, 0) = el(1);
    A(1, 0) = el(1);
    A(1, 1) = el(1);
    const AffineTransformation T(F, A, {el(0), el(0)});
    EXPECT_EQ(transformation_from_json(F, to_json(T)), T);
    const json no_b = json::parse(R"({"A": [[[1], [0]], [[1], [1]]]})");
    EXPECT_EQ(transformation_from_json(F, no_b), T);
    EXPECT_EQ(pointer_of([&] { transformation_from_json(F, json::parse(R"({"A": [[1, 0]]})"), "/T"); }),
              "/T/A/0");

    const std::vector<FieldElement> bit{el(0), el(1)};
    const CartesianSet S({SetComponent::multiplicative(F, 2), SetComponent::explicit_set(F, bit)});
    const MonomialSet L(2, S.bounds(), {Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1})});
    const json r = transformation_report(T, L, S);
    EXPECT_FALSE(r["stabilizes_set"].get<bool>());
    EXPECT_TRUE(r["stabilizes_span"].is_null());
    EXPECT_TRUE(r["witness"].contains("point"));
}

TEST(JsonReports, FamilyAndMatrix) {
    const Field F = Field::make(2, 1);
    const json f = to_json(lta(F, 2));
    EXPECT_EQ(f["kind"], "LTA");
    EXPECT_EQ(f["count"], 8);
    Matrix M(2, 2);
    M(0, 1) = el(1);
    EXPECT_EQ(to_json(F, M), json::parse("[[[0], [1]], [[0], [0]]]"));
    EXPECT_EQ(to_text_grid(F, M), "0 1\n0 0\n");
}
