#ifndef CARTPERM_AFFINE_GROUP_HPP
#define CARTPERM_AFFINE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cartperm/affine_transform.hpp"
#include "cartperm/cartesian_sets.hpp"
#include "cartperm/monomial_sets.hpp"
#include "cartperm/poly_ring.hpp"

namespace cartperm {

/// Permutation of the point indices 0..n-1, stored as its image list.
class CoordinatePermutation {
public:
    CoordinatePermutation() = default;
    /// Throws std::invalid_argument unless `image` is a bijection of 0..n-1.
    explicit CoordinatePermutation(std::vector<std::uint64_t> image);
    static CoordinatePermutation identity(std::uint64_t n);

    std::uint64_t size() const { return image_.size(); }
    std::uint64_t operator()(std::uint64_t i) const { return image_[i]; }
    const std::vector<std::uint64_t>& image() const { return image_; }
    bool is_identity() const;

    friend bool operator==(const CoordinatePermutation&, const CoordinatePermutation&) = default;

private:
    std::vector<std::uint64_t> image_;
};

/// (a o b)(i) = a(b(i))
CoordinatePermutation compose(const CoordinatePermutation& a, const CoordinatePermutation& b);
CoordinatePermutation inverse(const CoordinatePermutation& p);

/// c_pi = (c_{pi(0)}, ..., c_{pi(n-1)})
Vector permute(std::span<const FieldElement> c, const CoordinatePermutation& pi);

/// First point of S whose image leaves S, or the first point hit twice.
std::optional<Point> set_violation(const AffineTransformation& T, const CartesianSet& S);
inline bool stabilizes_set(const AffineTransformation& T, const CartesianSet& S) {
    return !set_violation(T, S).has_value();
}

/// pi with P_{pi(i)} = T(P_i). Then pi_{T1 o T2} = pi_{T1} o pi_{T2}, and the
/// codeword of f(T(x)) is the codeword of f permuted by pi. Throws
/// std::invalid_argument when T does not stabilize S.
CoordinatePermutation induced_permutation(const AffineTransformation& T, const CartesianSet& S);

/// A member u of L whose reduced image under T has `monomial` in its
/// support although `monomial` is not in L.
struct SpanWitness {
    Monomial member;
    Monomial monomial;
};

/// Checks condition (2) member by member, stopping at the first monomial of
/// the reduced image that falls outside L.
class SpanChecker {
public:
    SpanChecker(const MonomialSet& L, const CartesianSet& S);

    std::optional<SpanWitness> violation(const AffineTransformation& T);

private:
    const MonomialSet* L_;
    VanishingReducer reducer_;
};

std::optional<SpanWitness> span_violation(const AffineTransformation& T, const MonomialSet& L,
                                          const CartesianSet& S);
inline bool stabilizes_monomial_span(const AffineTransformation& T, const MonomialSet& L,
                                     const CartesianSet& S) {
    return !span_violation(T, L, S).has_value();
}

bool is_affine_permutation(const AffineTransformation& T, const MonomialSet& L,
                           const CartesianSet& S);

} // namespace cartperm

#endif // CARTPERM_AFFINE_GROUP_HPP
