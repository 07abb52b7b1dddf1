#ifndef CARTPERM_AFFINE_TRANSFORM_HPP
#define CARTPERM_AFFINE_TRANSFORM_HPP

#include <compare>
#include <iosfwd>
#include <span>

#include "cartperm/linalg.hpp"

namespace cartperm {

/// T(x) = A x + b over GF(q). Singular A is representable; invertibility is
/// a query, not an invariant.
class AffineTransformation {
public:
    /// Throws std::invalid_argument unless A is m x m and b has length m.
    AffineTransformation(Field F, Matrix A, Vector b);

    static AffineTransformation identity(const Field& F, std::size_t m);
    static AffineTransformation linear(const Field& F, Matrix A);
    static AffineTransformation translation(const Field& F, Vector b);

    const Field& field() const { return field_; }
    std::size_t dimension() const { return b_.size(); }
    const Matrix& A() const { return A_; }
    const Vector& b() const { return b_; }

    bool is_invertible() const;

    /// A P + b
    Vector apply(std::span<const FieldElement> point) const;

    /// Ordering ignores the field; compare only maps over the same field.
    friend std::strong_ordering operator<=>(const AffineTransformation& x,
                                            const AffineTransformation& y);
    friend bool operator==(const AffineTransformation& x, const AffineTransformation& y) {
        return x.A_ == y.A_ && x.b_ == y.b_;
    }

private:
    Field field_;
    Matrix A_;
    Vector b_;
};

/// (T1 o T2)(x) = A1 (A2 x + b2) + b1
AffineTransformation compose(const AffineTransformation& t1, const AffineTransformation& t2);

/// Throws std::domain_error when A is singular.
AffineTransformation invert(const AffineTransformation& t);

std::ostream& operator<<(std::ostream& os, const AffineTransformation& t);

} // namespace cartperm

#endif // CARTPERM_AFFINE_TRANSFORM_HPP
