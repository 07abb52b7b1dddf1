#include "cartperm/codes.hpp"

#include <stdexcept>

#include "cartperm/poly_ring.hpp"

namespace cartperm {

GeneratorMatrix::GeneratorMatrix(Field F, Matrix rows)
    : field_(std::move(F)), rows_(std::move(rows)), echelon_(rref(field_, rows_)) {}

GeneratorMatrix build_code(const MonomialSet& L, const CartesianSet& S) {
    if (L.variables() != S.dimension())
        throw std::invalid_argument("monomial set and point set have different dimensions");
    const auto bounds = S.bounds();
    for (const auto& u : L)
        if (!u.within(bounds))
            throw std::invalid_argument("monomial " + to_string(u) + " exceeds the Delta bound");
    const Field& F = S.field();
    const auto points = enumerate_points(S);
    Matrix G(L.size(), points.size(), F.zero());
    std::size_t r = 0;
    for (const auto& u : L) {
        const Polynomial f = Polynomial::monomial(F, u);
        for (std::size_t c = 0; c < points.size(); ++c)
            G(r, c) = evaluate(f, points[c]);
        ++r;
    }
    return {F, std::move(G)};
}

bool codes_equal(const GeneratorMatrix& c1, const GeneratorMatrix& c2) {
    if (!(c1.field() == c2.field()) || c1.length() != c2.length())
        return false;
    return c1.echelon().reduced == c2.echelon().reduced;
}

GeneratorMatrix permute_columns(const GeneratorMatrix& code, const CoordinatePermutation& pi) {
    if (pi.size() != code.length())
        throw std::invalid_argument("permutation degree does not match the code length");
    const Matrix& G = code.rows();
    Matrix out(G.rows(), G.cols());
    for (std::size_t r = 0; r < G.rows(); ++r)
        for (std::size_t c = 0; c < G.cols(); ++c)
            out(r, c) = G(r, pi(c));
    return {code.field(), std::move(out)};
}

bool code_permutation_check(const AffineTransformation& T, const GeneratorMatrix& code,
                            const CartesianSet& S) {
    return codes_equal(code, permute_columns(code, induced_permutation(T, S)));
}

bool code_permutation_check(const AffineTransformation& T, const MonomialSet& L,
                            const CartesianSet& S) {
    return code_permutation_check(T, build_code(L, S), S);
}

} // namespace cartperm
