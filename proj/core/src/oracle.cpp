#include "cartperm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "cartperm/codes.hpp"

namespace cartperm {

namespace {

// Runs work(i) for i in [0, n) on `jobs` threads.
template <typename Work>
void parallel_for(std::size_t n, unsigned jobs, Work&& work) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                work(i);
        });
    for (auto& th : pool)
        th.join();
}

template <typename T>
std::vector<T> flatten(std::vector<std::vector<T>>& parts) {
    std::vector<T> out;
    for (auto& p : parts)
        for (auto& x : p)
            out.push_back(std::move(x));
    return out;
}

void check_points(const CartesianSet& S, const OracleBudget& budget) {
    if (S.size() > budget.max_points)
        throw BudgetExceeded(S.size(), budget.max_points);
}

} // namespace

TransformStream enumerate_all_affine(const Field& F, std::size_t m, const OracleBudget& budget,
                                     bool invertible_only) {
    std::function<bool(const AffineTransformation&)> filter;
    if (invertible_only)
        filter = [](const AffineTransformation& T) { return T.is_invertible(); };
    return TransformStream::over(CandidateSpace::full(F, m), budget.max_transformations,
                                 std::move(filter));
}

std::vector<AffineTransformation> oracle_stabilizers(const CartesianSet& S,
                                                     const OracleBudget& budget,
                                                     const std::optional<CandidateSpace>& candidates) {
    check_points(S, budget);
    const CandidateSpace space =
        candidates ? *candidates : CandidateSpace::full(S.field(), S.dimension());
    if (space.dimension() != S.dimension() || !(space.field() == S.field()))
        throw std::invalid_argument("candidate space does not match the point set");
    const std::uint64_t n = space.size();
    if (n > budget.max_transformations)
        throw BudgetExceeded(n, budget.max_transformations);

    const auto parts = space.split_first_row();
    std::vector<std::vector<AffineTransformation>> found(parts.size());
    parallel_for(parts.size(), budget.jobs, [&](std::size_t i) {
        TransformStream::over(parts[i], UINT64_MAX).for_each([&](const AffineTransformation& T) {
            if (stabilizes_set(T, S))
                found[i].push_back(T);
        });
    });
    auto out = flatten(found);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AffineTransformation> filter_span(const std::vector<AffineTransformation>& stabilizers,
                                              const MonomialSet& L, const CartesianSet& S,
                                              unsigned jobs) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(stabilizers.size(), 64));
    std::vector<std::vector<AffineTransformation>> kept(chunks);
    parallel_for(chunks, jobs, [&](std::size_t c) {
        SpanChecker checker(L, S);
        for (std::size_t i = c; i < stabilizers.size(); i += chunks)
            if (!checker.violation(stabilizers[i]))
                kept[c].push_back(stabilizers[i]);
    });
    auto out = flatten(kept);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AffineTransformation> oracle_affine_perm_group(
    const MonomialSet& L, const CartesianSet& S, const OracleBudget& budget,
    const std::optional<CandidateSpace>& candidates) {
    return filter_span(oracle_stabilizers(S, budget, candidates), L, S, budget.jobs);
}

GroupCheck check_group_axioms(const std::vector<AffineTransformation>& sorted,
                              std::uint64_t pair_cap, std::uint64_t seed) {
    GroupCheck g;
    if (sorted.empty())
        return g;
    auto in = [&](const AffineTransformation& T) {
        return std::binary_search(sorted.begin(), sorted.end(), T);
    };
    const Field& F = sorted.front().field();
    const std::size_t m = sorted.front().dimension();
    g.has_identity = in(AffineTransformation::identity(F, m));
    g.closed_under_inverse = true;
    for (const auto& T : sorted)
        if (!T.is_invertible() || !in(invert(T))) {
            g.closed_under_inverse = false;
            break;
        }
    g.closed_under_composition = true;
    const std::uint64_t n = sorted.size();
    const bool exhaustive = n <= pair_cap / n;
    g.exhaustive = exhaustive;
    auto test = [&](const AffineTransformation& a, const AffineTransformation& b) {
        ++g.pairs_checked;
        if (!in(compose(a, b))) {
            g.closed_under_composition = false;
            g.failing_pair.emplace(a, b);
            return false;
        }
        return true;
    };
    if (exhaustive) {
        for (const auto& a : sorted)
            for (const auto& b : sorted)
                if (!test(a, b))
                    return g;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
        for (std::uint64_t k = 0; k < pair_cap; ++k)
            if (!test(sorted[pick(rng)], sorted[pick(rng)]))
                return g;
    }
    return g;
}

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::Equal: return "equal";
    case Relation::ProperContainment: return "proper-containment";
    case Relation::Violation: return "violation";
    }
    return "?";
}

VerificationReport compare_with_oracle(std::string configuration,
                                       const std::vector<AffineTransformation>& claimed,
                                       const std::vector<AffineTransformation>& oracle,
                                       bool expect_equal, const CartesianSet& S,
                                       const MonomialSet* L) {
    VerificationReport r;
    r.configuration = std::move(configuration);
    r.expect_equal = expect_equal;
    r.claimed_count = claimed.size();
    r.oracle_count = oracle.size();
    std::optional<SpanChecker> checker;
    if (L)
        checker.emplace(*L, S);
    for (const auto& T : claimed) {
        if (std::binary_search(oracle.begin(), oracle.end(), T)) {
            ++r.verified_count;
            continue;
        }
        Counterexample c{T, set_violation(T, S), std::nullopt};
        if (!c.point && checker)
            c.span = checker->violation(T);
        r.counterexamples.push_back(std::move(c));
    }
    for (const auto& T : oracle)
        if (!std::binary_search(claimed.begin(), claimed.end(), T))
            r.missing.push_back(T);
    if (!r.counterexamples.empty())
        r.relation = Relation::Violation;
    else if (!r.missing.empty())
        r.relation = Relation::ProperContainment;
    else
        r.relation = Relation::Equal;
    return r;
}

std::vector<RouteDisagreement> two_route_check(const std::vector<AffineTransformation>& stabilizers,
                                               const MonomialSet& L, const CartesianSet& S,
                                               unsigned jobs) {
    const GeneratorMatrix code = build_code(L, S);
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(stabilizers.size(), 64));
    std::vector<std::vector<RouteDisagreement>> found(chunks);
    parallel_for(chunks, jobs, [&](std::size_t c) {
        SpanChecker checker(L, S);
        for (std::size_t i = c; i < stabilizers.size(); i += chunks) {
            const auto& T = stabilizers[i];
            const bool span = !checker.violation(T).has_value();
            const bool preserved = code_permutation_check(T, code, S);
            if (span != preserved)
                found[c].push_back({T, span, preserved});
        }
    });
    auto out = flatten(found);
    std::sort(out.begin(), out.end(),
              [](const RouteDisagreement& a, const RouteDisagreement& b) { return a.T < b.T; });
    return out;
}

} // namespace cartperm
