#ifndef CARTPERM_ORACLE_HPP
#define CARTPERM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cartperm/affine_group.hpp"
#include "cartperm/transform_stream.hpp"

namespace cartperm {

struct OracleBudget {
    std::uint64_t max_transformations = 50'000'000;
    std::uint64_t max_points = 1u << 16;
    unsigned jobs = 1;
};

/// Every (A, b) over F in counting order (see CandidateSpace), optionally
/// only those with A invertible. Throws BudgetExceeded past q^(m^2+m) > cap.
TransformStream enumerate_all_affine(const Field& F, std::size_t m, const OracleBudget& budget,
                                     bool invertible_only = false);

/// All maps of the candidate space (every affine map when omitted) with
/// T(S) = S, sorted. Work is split over budget.jobs threads by the first
/// matrix row; the result does not depend on the thread count.
std::vector<AffineTransformation> oracle_stabilizers(
    const CartesianSet& S, const OracleBudget& budget,
    const std::optional<CandidateSpace>& candidates = std::nullopt);

/// Perm_A(L(S)) restricted to the candidate space, sorted.
std::vector<AffineTransformation> oracle_affine_perm_group(
    const MonomialSet& L, const CartesianSet& S, const OracleBudget& budget,
    const std::optional<CandidateSpace>& candidates = std::nullopt);

/// Keeps the members of `stabilizers` that satisfy the span condition.
std::vector<AffineTransformation> filter_span(const std::vector<AffineTransformation>& stabilizers,
                                              const MonomialSet& L, const CartesianSet& S,
                                              unsigned jobs = 1);

struct GroupCheck {
    bool has_identity = false;
    bool closed_under_inverse = false;
    bool closed_under_composition = false;
    bool exhaustive = false;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<AffineTransformation, AffineTransformation>> failing_pair;

    bool ok() const { return has_identity && closed_under_inverse && closed_under_composition; }
};

/// Identity, inverses and composition on a sorted set of maps. All pairs
/// when there are at most `pair_cap`, otherwise `pair_cap` pairs drawn from
/// a generator seeded with `seed`.
GroupCheck check_group_axioms(const std::vector<AffineTransformation>& sorted,
                              std::uint64_t pair_cap, std::uint64_t seed);

enum class Relation { Equal, ProperContainment, Violation };
std::string_view to_string(Relation r);

struct Counterexample {
    AffineTransformation T;
    std::optional<Point> point;
    std::optional<SpanWitness> span;
};

struct VerificationReport {
    std::string configuration;
    bool expect_equal = false;
    std::uint64_t claimed_count = 0;
    std::uint64_t verified_count = 0;
    std::uint64_t oracle_count = 0;
    Relation relation = Relation::Equal;
    std::vector<Counterexample> counterexamples; // claimed but not in the oracle set
    std::vector<AffineTransformation> missing;   // in the oracle set but not claimed

    bool passed() const {
        return expect_equal ? relation == Relation::Equal : relation != Relation::Violation;
    }
};

/// Compares a claimed family with the oracle set (both sorted). Witnesses
/// come from set_violation and, when L is given, span_violation.
VerificationReport compare_with_oracle(std::string configuration,
                                       const std::vector<AffineTransformation>& claimed,
                                       const std::vector<AffineTransformation>& oracle,
                                       bool expect_equal, const CartesianSet& S,
                                       const MonomialSet* L = nullptr);

struct RouteDisagreement {
    AffineTransformation T;
    bool span_condition;
    bool code_preserved;
};

/// For every stabilizer T, compares stabilizes_monomial_span with
/// code_permutation_check.
std::vector<RouteDisagreement> two_route_check(const std::vector<AffineTransformation>& stabilizers,
                                               const MonomialSet& L, const CartesianSet& S,
                                               unsigned jobs = 1);

} // namespace cartperm

#endif // CARTPERM_ORACLE_HPP
