#ifndef CARTPERM_CODES_HPP
#define CARTPERM_CODES_HPP

#include <vector>

#include "cartperm/affine_group.hpp"
#include "cartperm/cartesian_sets.hpp"
#include "cartperm/linalg.hpp"
#include "cartperm/monomial_sets.hpp"

namespace cartperm {

/// Generator matrix of the monomial Cartesian code L(A): one row per member
/// of L in GradedOrder, one column per point of A in canonical order. The
/// reduced echelon form is computed on construction, so a built code is
/// immutable and safe to share between threads.
class GeneratorMatrix {
public:
    GeneratorMatrix(Field F, Matrix rows);

    const Field& field() const { return field_; }
    const Matrix& rows() const { return rows_; }
    const RowEchelon& echelon() const { return echelon_; }
    std::size_t length() const { return rows_.cols(); }
    std::size_t dimension() const { return echelon_.rank(); }

private:
    Field field_;
    Matrix rows_;
    RowEchelon echelon_;
};

/// Throws std::invalid_argument if a member of L lies outside Delta for S.
GeneratorMatrix build_code(const MonomialSet& L, const CartesianSet& S);
inline std::size_t dimension(const GeneratorMatrix& code) { return code.dimension(); }
/// Same row space.
bool codes_equal(const GeneratorMatrix& c1, const GeneratorMatrix& c2);
/// Column i of the result is column pi(i) of the input.
GeneratorMatrix permute_columns(const GeneratorMatrix& code, const CoordinatePermutation& pi);

/// Whether permuting coordinates by the map induced by T preserves L(A).
/// Throws std::invalid_argument when T does not stabilize S.
bool code_permutation_check(const AffineTransformation& T, const MonomialSet& L,
                            const CartesianSet& S);
/// Same check against a prebuilt code, for repeated use.
bool code_permutation_check(const AffineTransformation& T, const GeneratorMatrix& code,
                            const CartesianSet& S);

} // namespace cartperm

#endif // CARTPERM_CODES_HPP
