#ifndef CARTPERM_GROUP_FAMILIES_HPP
#define CARTPERM_GROUP_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cartperm/cartesian_sets.hpp"
#include "cartperm/monomial_sets.hpp"
#include "cartperm/transform_stream.hpp"

namespace cartperm {

enum class FamilyKind {
    LTA,
    MLInvertible,
    MultSubgroupProduct,
    TorusProduct,
    MixedFullTorus,
    MixedGeneral,
    AdditivePower,
    AdditiveHetero,
    BorelBlockDiag,
};

std::string_view to_string(FamilyKind kind);

struct FamilyParam {
    std::string name;
    std::int64_t value;
};

/// A structured set of affine maps: membership predicate, cardinality and
/// lazy enumerator, all describing the same set.
class Family {
public:
    struct Piece {
        CandidateSpace space;
        bool invertible_only;
    };

    Family(FamilyKind kind, std::vector<FamilyParam> params, std::vector<Piece> pieces,
           std::function<bool(const AffineTransformation&)> predicate,
           std::function<std::uint64_t()> count);

    FamilyKind kind() const { return kind_; }
    const std::vector<FamilyParam>& params() const { return params_; }
    const Field& field() const { return pieces_.front().space.field(); }
    std::size_t dimension() const { return pieces_.front().space.dimension(); }

    /// Closed formula where one exists, otherwise an exact count of the
    /// matrix part times the translations.
    std::uint64_t count() const { return count_(); }
    bool contains(const AffineTransformation& T) const { return predicate_(T); }

    /// Candidates visited by enumerate(); at least count().
    std::uint64_t candidate_count() const;
    /// Throws BudgetExceeded when candidate_count() > budget.
    TransformStream enumerate(std::uint64_t budget) const;

private:
    FamilyKind kind_;
    std::vector<FamilyParam> params_;
    std::vector<Piece> pieces_;
    std::function<bool(const AffineTransformation&)> predicate_;
    std::function<std::uint64_t()> count_;
};

/// |GL_n(F_q)|, saturating.
std::uint64_t gl_order(std::uint64_t q, std::size_t n);

/// Ax + b with A lower triangular and invertible.
Family lta(const Field& F, std::size_t m);
TransformStream enumerate_LTA(const Field& F, std::size_t m, std::uint64_t budget);

/// Ax + b with A invertible and supported on the stable pattern.
Family ml_invertible(const StableMatrixPattern& pattern, const Field& F);
TransformStream enumerate_ML_invertible(const MonomialSet& L, const Field& F,
                                        std::uint64_t budget);

/// Stabilizers of a product of nontrivial multiplicative subgroups:
/// b = 0 and A = P_sigma D with G_sigma(i) = G_i and D_ii in G_i. Throws
/// std::invalid_argument if a component is not a multiplicative subgroup.
Family characterize_mult_product(const CartesianSet& S);

/// Stabilizers of F_q^s x (F_q^*)^(m-s). Throws std::invalid_argument for
/// another shape.
Family characterize_mixed_full_torus(const CartesianSet& S);

/// Stabilizers of F_q^m0 x G_1^m1 x ... x G_l^ml with pairwise distinct
/// multiplicative G_i in contiguous blocks. Throws std::invalid_argument for
/// another shape or a group that reappears after a different one.
Family characterize_mixed_general(const CartesianSet& S);

/// Stabilizers of G^m, G additive: A nonsingular over the stabilizer
/// subfield, b in G^m. Throws std::invalid_argument for another shape.
Family characterize_additive_power(const CartesianSet& S);

/// Entry constraints A_ij in transporter_space(G_i, G_j) and b in prod G_i
/// for a product of additive subgroups. Necessary for stabilizing, not
/// sufficient.
struct HeteroPattern {
    static constexpr bool necessary_only = true;

    Field field;
    std::size_t m;
    std::vector<std::vector<FieldElement>> entries; // row-major
    std::vector<std::vector<FieldElement>> translations;

    const std::vector<FieldElement>& entry(std::size_t i, std::size_t j) const {
        return entries[i * m + j];
    }
    CandidateSpace candidates() const;
};

/// Throws std::invalid_argument unless every component is additive.
HeteroPattern additive_hetero_pattern(const CartesianSet& S);

/// The subgroup of Perm_A guaranteed for a decreasing L with the Borel
/// property:
///   - F_q^m0 x (multiplicative factors): A0 lower triangular and invertible,
///     identity on the remaining block, b zero past m0;
///   - G^m, G additive: A lower triangular and invertible over the
///     stabilizer subfield, b in G^m.
/// Throws std::invalid_argument for another shape or when L is not decreasing
/// with the Borel property.
Family borel_claimed_subgroup(const CartesianSet& S, const MonomialSet& L);

} // namespace cartperm

#endif // CARTPERM_GROUP_FAMILIES_HPP
