#include "worked_examples.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cartperm::cli {

json to_json(const Assertion& a) {
    json out = {{"example", a.example}, {"assertion", a.name}, {"passed", a.passed},
                {"detail", a.detail}};
    if (a.note)
        out["discrepancy_note"] = *a.note;
    return out;
}

namespace {

FieldElement el(std::uint32_t c) { return FieldElement{c}; }

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Assertion make(const std::string& example, std::string name, bool ok, std::string detail = {}) {
    return Assertion{example, std::move(name), ok, std::move(detail), std::nullopt};
}

std::string vec_string(const Field& F, std::span<const FieldElement> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + F.to_string(v[i]);
    return s + ")";
}

std::uint64_t weight(std::span<const FieldElement> v) {
    return static_cast<std::uint64_t>(
        std::count_if(v.begin(), v.end(), [](FieldElement x) { return !x.is_zero(); }));
}

Field gf16() { return Field::make(2, 4); }
FieldElement alpha_pow(const Field& F, std::int64_t k) { return F.pow(F.root(), k); }

std::vector<FieldElement> sorted(std::vector<FieldElement> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// All F_2 combinations of the given elements.
std::vector<FieldElement> f2_span(const Field& F, const std::vector<FieldElement>& gens) {
    std::vector<FieldElement> out;
    for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
        FieldElement s = F.zero();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask >> i & 1)
                s = F.add(s, gens[i]);
        out.push_back(s);
    }
    return sorted(out);
}

std::vector<FieldElement> f4_in_gf16(const Field& F) {
    return sorted({F.zero(), F.one(), alpha_pow(F, 5), alpha_pow(F, 10)});
}

std::vector<FieldElement> scaled(const Field& F, FieldElement a, std::vector<FieldElement> v) {
    for (auto& x : v)
        x = F.mul(a, x);
    return sorted(v);
}

} // namespace

namespace fixtures {

CartesianSet torus_times_bit() {
    const Field F = Field::make(3, 1);
    const std::vector<FieldElement> bit{el(0), el(1)};
    return CartesianSet({SetComponent::multiplicative(F, 2), SetComponent::explicit_set(F, bit)});
}

AffineTransformation shear_gf3() {
    const Field F = Field::make(3, 1);
    Matrix A(2, 2);
    A(0, 0) = el(1);
    A(1, 0) = el(1);
    A(1, 1) = el(1);
    return AffineTransformation::linear(F, A);
}

MonomialSet f9_monomials() {
    MonomialSet L(2, std::vector<std::uint32_t>{9, 9});
    for (std::uint32_t i = 0; i <= 3; ++i)
        for (std::uint32_t j = 0; i + j <= 3; ++j)
            L.insert(mono({i, j}));
    for (auto e : {std::vector<std::uint32_t>{0, 4}, {1, 3}, {3, 1}, {4, 0}})
        L.insert(mono(e));
    return L;
}

std::vector<SetComponent> gf16_groups() {
    const Field F = gf16();
    const std::vector<FieldElement> g1{F.one(), alpha_pow(F, 1), alpha_pow(F, 2)};
    const std::vector<FieldElement> g2{alpha_pow(F, 6), alpha_pow(F, 11)};
    const std::vector<FieldElement> g3{F.one()};
    return {SetComponent::additive(F, g1), SetComponent::additive(F, g2),
            SetComponent::additive(F, g3)};
}

std::vector<FieldElement> alpha_f4_elements() {
    const Field F = gf16();
    return f2_span(F, {alpha_pow(F, 6), alpha_pow(F, 11)});
}

MonomialSet final_monomials() {
    MonomialSet gens(3, std::vector<std::uint32_t>{8, 4, 2});
    gens.insert(mono({2, 0, 0}));
    gens.insert(mono({1, 1, 0}));
    return divisibility_closure(gens);
}

} // namespace fixtures

std::vector<Assertion> example_shear(const OracleBudget&) {
    const std::string ex = "shear on F3* x {0,1}";
    std::vector<Assertion> out;
    const CartesianSet S = fixtures::torus_times_bit();
    const Field& F = S.field();
    const AffineTransformation T = fixtures::shear_gf3();

    std::vector<Point> pts = enumerate_points(S);
    const std::vector<Point> want_pts{{el(1), el(0)}, {el(1), el(1)}, {el(2), el(0)}, {el(2), el(1)}};
    out.push_back(make(ex, "canonical point order (1,0),(1,1),(2,0),(2,1)", pts == want_pts));

    Polynomial f(F, 2);
    f.add_term(mono({0, 1}), F.one());
    f.add_term(mono({1, 0}), F.neg(F.one()));
    f.add_term(mono({0, 0}), F.one());
    const Vector cf = evaluate_on_set(f, S);
    out.push_back(make(ex, "f = x2 - x1 + 1 evaluates to (0,1,2,0)",
                       cf == Vector{el(0), el(1), el(2), el(0)}, vec_string(F, cf)));

    const Polynomial Tf = substitute_affine(f, T);
    Polynomial want(F, 2);
    want.add_term(mono({0, 1}), F.one());
    want.add_term(mono({0, 0}), F.one());
    out.push_back(make(ex, "T(f) = x2 + 1", Tf == want, to_string(Tf)));

    const Vector cTf = evaluate_on_set(Tf, S);
    out.push_back(make(ex, "T(f) evaluates to (1,2,1,2)",
                       cTf == Vector{el(1), el(2), el(1), el(2)}, vec_string(F, cTf)));

    std::set<Point> image;
    for (const auto& P : pts)
        image.insert(T.apply(P));
    const std::set<Point> want_image{{el(1), el(1)}, {el(1), el(2)}, {el(2), el(2)}, {el(2), el(0)}};
    out.push_back(make(ex, "T(A) = {(1,1),(1,2),(2,2),(2,0)}", image == want_image));
    out.push_back(make(ex, "stabilizes_set(T) = false", !stabilizes_set(T, S)));
    out.push_back(make(ex, "T is not an isometry: weight 2 becomes weight 4",
                       weight(cf) == 2 && weight(cTf) == 4,
                       std::to_string(weight(cf)) + " -> " + std::to_string(weight(cTf))));
    return out;
}

std::vector<Assertion> example_f9(const OracleBudget&) {
    const std::string ex = "GF(9) non-Borel set";
    std::vector<Assertion> out;
    const Field F = Field::make(3, 2);
    const MonomialSet L = fixtures::f9_monomials();
    const CartesianSet S({SetComponent::full_field(F), SetComponent::full_field(F)});

    std::uint64_t maps = 0, expansions_ok = 0, span_ok = 0;
    std::string first_bad;
    SpanChecker checker(L, S);
    for (auto a : F.nonzero_elements())
        for (auto b : F.elements())
            for (auto c : F.nonzero_elements()) {
                ++maps;
                Matrix A(2, 2);
                A(0, 0) = a;
                A(1, 0) = b;
                A(1, 1) = c;
                const AffineTransformation T = AffineTransformation::linear(F, A);
                auto term = [&](Polynomial& p, std::vector<std::uint32_t> e,
                                std::initializer_list<std::pair<FieldElement, std::int64_t>> factors) {
                    FieldElement coeff = F.one();
                    for (auto [x, k] : factors)
                        coeff = F.mul(coeff, F.pow(x, k));
                    p.add_term(mono(std::move(e)), coeff);
                };
                Polynomial w1(F, 2), w2(F, 2), w3(F, 2), w4(F, 2);
                term(w1, {4, 0}, {{b, 4}});
                term(w1, {3, 1}, {{b, 3}, {c, 1}});
                term(w1, {1, 3}, {{b, 1}, {c, 3}});
                term(w1, {0, 4}, {{c, 4}});
                term(w2, {4, 0}, {{a, 1}, {b, 3}});
                term(w2, {1, 3}, {{a, 1}, {c, 3}});
                term(w3, {4, 0}, {{a, 3}, {b, 1}});
                term(w3, {3, 1}, {{a, 3}, {c, 1}});
                term(w4, {4, 0}, {{a, 4}});
                AffineSubstitution sub(T);
                const bool ok = sub.image(mono({0, 4})) == w1 && sub.image(mono({1, 3})) == w2 &&
                                sub.image(mono({3, 1})) == w3 && sub.image(mono({4, 0})) == w4;
                expansions_ok += ok;
                if (!ok && first_bad.empty()) {
                    std::ostringstream os;
                    os << T;
                    first_bad = os.str();
                }
                span_ok += !checker.violation(T).has_value();
            }
    out.push_back(make(ex, "expansions of T(x2^4), T(x1 x2^3), T(x1^3 x2), T(x1^4) for 576 maps",
                       maps == 576 && expansions_ok == maps,
                       std::to_string(expansions_ok) + "/" + std::to_string(maps) +
                           (first_bad.empty() ? "" : " first mismatch " + first_bad)));

    const auto w = borel_violation(L);
    out.push_back(make(ex, "no Borel property; witness x1^2 x2^2 from x1 x2^3",
                       w && w->movement == mono({2, 2}) && w->member == mono({1, 3}),
                       w ? to_string(w->member) + " -> " + to_string(w->movement) : "none"));
    out.push_back(make(ex, "every lower triangular linear map stabilizes Span(L)", span_ok == 576,
                       std::to_string(span_ok) + "/576"));
    const PBorelGraph g = p_borel_graph(L, F.p());
    out.push_back(make(ex, "3-Borel graph has both edges x1->x2 and x2->x1",
                       g.has_edge(0, 1) && g.has_edge(1, 0)));
    return out;
}

std::vector<Assertion> example_h_table(const OracleBudget&) {
    const std::string ex = "transporter table in GF(16)";
    std::vector<Assertion> out;
    const Field F = gf16();
    const auto groups = fixtures::gf16_groups();
    const auto zero = std::vector<FieldElement>{F.zero()};
    const auto f4 = f4_in_gf16(F);
    const auto g1 = f2_span(F, {F.one(), alpha_pow(F, 1), alpha_pow(F, 2)});
    const auto g2 = f2_span(F, {alpha_pow(F, 6), alpha_pow(F, 11)});
    const auto g3 = f2_span(F, {F.one()});
    const std::vector<std::vector<FieldElement>> table{
        f2_span(F, {F.one()}), scaled(F, alpha_pow(F, -1), f4), g1,
        zero,                  f4,                              g2,
        zero,                  zero,                            g3};
    const char* names[] = {"F2", "a^-1 F4", "G1", "{0}", "F4", "G2", "{0}", "{0}", "G3"};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto H = transporter_space(groups[i], groups[j]);
            out.push_back(make(ex,
                               "H" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                                   names[i * 3 + j],
                               H == table[i * 3 + j], vec_string(F, H)));
        }
    return out;
}

std::vector<Assertion> example_alpha_f4(const OracleBudget& budget) {
    const std::string ex = "alpha F4 in GF(16)";
    std::vector<Assertion> out;
    const Field F = gf16();
    const auto elems = fixtures::alpha_f4_elements();
    const SetComponent G = classify_subset(F, elems);
    out.push_back(make(ex, "a^6 F2 + a^11 F2 classifies as an additive subgroup",
                       G.kind() == ComponentKind::AdditiveSubgroup,
                       std::string(to_string(G.kind()))));
    const auto alpha_f4 = scaled(F, F.root(), f4_in_gf16(F));
    out.push_back(make(ex, "G = alpha F4", sorted({G.elements().begin(), G.elements().end()}) == alpha_f4,
                       vec_string(F, alpha_f4)));
    const auto d = stabilizer_subfield(G);
    out.push_back(make(ex, "stabilizer subfield is F4", d == 2, "degree " + std::to_string(d)));

    const CartesianSet S({G});
    const auto stab = oracle_stabilizers(S, budget);
    std::vector<AffineTransformation> want;
    for (auto a : f4_in_gf16(F)) {
        if (a.is_zero())
            continue;
        for (auto b : alpha_f4) {
            Matrix A(1, 1);
            A(0, 0) = a;
            want.emplace_back(F, A, Vector{b});
        }
    }
    std::sort(want.begin(), want.end());
    out.push_back(make(ex, "ax + b stabilizes G iff a in F4^*, b in G (12 of 256 maps)",
                       stab == want, std::to_string(stab.size()) + " stabilizers"));
    return out;
}

std::vector<Assertion> example_final(const OracleBudget& budget) {
    const std::string ex = "G1 x G2 x G3 in GF(16)";
    std::vector<Assertion> out;
    const Field F = gf16();
    const auto groups = fixtures::gf16_groups();
    const CartesianSet S(groups);
    const MonomialSet L = fixtures::final_monomials();

    out.push_back(make(ex, "L = divisors of {x1^2, x1 x2} has the Borel property",
                       has_borel_property(L) && L.size() == 5));

    // T(x1^2) for the first row of an H-constrained matrix.
    const HeteroPattern h = additive_hetero_pattern(S);
    bool expansion_ok = true;
    std::uint64_t tried = 0;
    for (auto a : h.entry(0, 0))
        for (auto b : h.entry(0, 1))
            for (auto c : h.entry(0, 2)) {
                Matrix A = Matrix::identity(3);
                A(0, 0) = a;
                A(0, 1) = b;
                A(0, 2) = c;
                Polynomial want(F, 3);
                want.add_term(mono({2, 0, 0}), F.mul(a, a));
                want.add_term(mono({0, 2, 0}), F.mul(b, b));
                want.add_term(mono({0, 0, 2}), F.mul(c, c));
                expansion_ok &= substitute_affine(Polynomial::monomial(F, mono({2, 0, 0})),
                                                  AffineTransformation::linear(F, A)) == want;
                ++tried;
            }
    Assertion exp = make(ex, "T(x1^2) = a^2 x1^2 + b^2 x2^2 + c^2 x3^2 for every H-allowed first row",
                         expansion_ok, std::to_string(tried) + " rows");
    exp.note = "the worked example prints an expansion labelled T(x1^3) that is not consistent "
               "with characteristic 2 and x1^3 is not in L; T(x1^2) is checked instead and forces "
               "b = c = 0 the same way";
    out.push_back(std::move(exp));

    const auto group = oracle_affine_perm_group(L, S, budget, h.candidates());
    bool upper_zero = true;
    for (const auto& T : group)
        upper_zero &= T.A()(0, 1).is_zero() && T.A()(0, 2).is_zero() && T.A()(1, 2).is_zero();
    out.push_back(make(ex, "every affine permutation has b = c = e = 0", upper_zero));

    std::set<AffineTransformation> members(group.begin(), group.end());
    bool translations = true;
    for (std::uint64_t i = 0; i < S.size(); ++i)
        translations &= members.count(AffineTransformation::translation(F, S.point(i))) == 1;
    out.push_back(make(ex, "all 64 translations x + b, b in A, are affine permutations",
                       translations && S.size() == 64));

    std::vector<AffineTransformation> want;
    for (auto d : f4_in_gf16(F)) {
        if (d.is_zero())
            continue;
        for (std::uint64_t i = 0; i < S.size(); ++i) {
            Matrix A = Matrix::identity(3);
            A(1, 1) = d;
            want.emplace_back(F, A, S.point(i));
        }
    }
    std::sort(want.begin(), want.end());
    Assertion eq = make(ex, "Perm_A = {diag(1,d,1)x + b : d in F4^*, b in A} (192 maps)",
                        group == want, std::to_string(group.size()) + " maps");
    eq.note = "the worked example concludes that only the 64 translations remain; x2 -> d x2 with "
              "d in F4^* also fixes G2 = alpha F4 and Span(L), so the group has 3 * 64 = 192 "
              "elements";
    out.push_back(std::move(eq));
    return out;
}

std::vector<Assertion> run_worked_examples(const OracleBudget& budget) {
    std::vector<Assertion> out;
    for (auto fn : {example_shear, example_f9, example_h_table, example_alpha_f4, example_final}) {
        auto part = fn(budget);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace cartperm::cli
