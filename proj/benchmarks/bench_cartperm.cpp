#include <benchmark/benchmark.h>

#include <random>

#include "cartperm/codes.hpp"
#include "cartperm/group_families.hpp"
#include "cartperm/oracle.hpp"

using namespace cartperm;

namespace {

void BM_FieldMul(benchmark::State& state) {
    const Field F = Field::make(2, static_cast<std::uint32_t>(state.range(0)));
    std::mt19937_64 rng(1);
    std::vector<FieldElement> xs(1024);
    for (auto& x : xs)
        x = FieldElement{static_cast<std::uint32_t>(rng() % F.q())};
    FieldElement acc = F.one();
    for (auto _ : state) {
        for (auto x : xs)
            acc = F.mul(acc, F.add(x, F.one()));
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16)->Arg(20);

void BM_Reduce(benchmark::State& state) {
    const Field F = Field::make(3, 2);
    const CartesianSet S({SetComponent::multiplicative(F, 4), SetComponent::full_field(F)});
    VanishingReducer red(S);
    Polynomial f(F, 2);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t)
        f.add_term(Monomial({static_cast<std::uint32_t>(rng() % 40), static_cast<std::uint32_t>(rng() % 40)}),
                   FieldElement{static_cast<std::uint32_t>(1 + rng() % 8)});
    for (auto _ : state)
        benchmark::DoNotOptimize(red.reduce(f));
}
BENCHMARK(BM_Reduce);

void BM_SpanCheck(benchmark::State& state) {
    const Field F = Field::make(3, 2);
    const CartesianSet S({SetComponent::full_field(F), SetComponent::full_field(F)});
    MonomialSet L(2, S.bounds(), {Monomial({4, 0}), Monomial({1, 3}), Monomial({3, 1}), Monomial({0, 4})});
    L = divisibility_closure(L);
    SpanChecker checker(L, S);
    Matrix A(2, 2);
    A(0, 0) = FieldElement{2};
    A(1, 0) = FieldElement{5};
    A(1, 1) = FieldElement{7};
    const AffineTransformation T(F, A, {FieldElement{1}, FieldElement{3}});
    for (auto _ : state)
        benchmark::DoNotOptimize(checker.violation(T));
}
BENCHMARK(BM_SpanCheck);

void BM_OracleStabilizers(benchmark::State& state) {
    const Field F = Field::make(3, 1);
    const CartesianSet S({SetComponent::full_field(F), SetComponent::full_field(F),
                          SetComponent::multiplicative(F, 2)});
    OracleBudget b;
    b.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_stabilizers(S, b).size());
    state.SetItemsProcessed(state.iterations() * 531441);
}
BENCHMARK(BM_OracleStabilizers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_HeteroPermGroup(benchmark::State& state) {
    const Field F = Field::make(2, 4);
    auto a = [&](std::int64_t k) { return F.pow(F.root(), k); };
    const std::vector<FieldElement> g1{F.one(), a(1), a(2)}, g2{a(6), a(11)}, g3{F.one()};
    const CartesianSet S({SetComponent::additive(F, g1), SetComponent::additive(F, g2),
                          SetComponent::additive(F, g3)});
    const MonomialSet L =
        divisibility_closure(MonomialSet(3, S.bounds(), {Monomial({2, 0, 0}), Monomial({1, 1, 0})}));
    const auto cands = additive_hetero_pattern(S).candidates();
    OracleBudget b;
    b.jobs = 4;
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_affine_perm_group(L, S, b, cands).size());
}
BENCHMARK(BM_HeteroPermGroup)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CodeCheck(benchmark::State& state) {
    const Field F = Field::make(2, 2);
    const CartesianSet S({SetComponent::full_field(F), SetComponent::full_field(F)});
    const MonomialSet L = divisibility_closure(MonomialSet(2, S.bounds(), {Monomial({2, 1})}));
    const GeneratorMatrix code = build_code(L, S);
    const AffineTransformation T = AffineTransformation::translation(F, {FieldElement{1}, FieldElement{2}});
    for (auto _ : state)
        benchmark::DoNotOptimize(code_permutation_check(T, code, S));
}
BENCHMARK(BM_CodeCheck);

void BM_EnumerateLTA(benchmark::State& state) {
    const Field F = Field::make(3, 2);
    for (auto _ : state) {
        std::uint64_t n = 0;
        enumerate_LTA(F, 2, 1'000'000).for_each([&](const AffineTransformation&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateLTA)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
