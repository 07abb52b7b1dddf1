#include "cartperm/affine_transform.hpp"

#include <ostream>
#include <stdexcept>

namespace cartperm {

AffineTransformation::AffineTransformation(Field F, Matrix A, Vector b)
    : field_(std::move(F)), A_(std::move(A)), b_(std::move(b)) {
    if (A_.rows() != b_.size() || A_.cols() != b_.size())
        throw std::invalid_argument("affine map needs an m x m matrix and a length-m vector");
}

AffineTransformation AffineTransformation::identity(const Field& F, std::size_t m) {
    return {F, Matrix::identity(m), Vector(m, F.zero())};
}

AffineTransformation AffineTransformation::linear(const Field& F, Matrix A) {
    const std::size_t m = A.rows();
    return {F, std::move(A), Vector(m, F.zero())};
}

AffineTransformation AffineTransformation::translation(const Field& F, Vector b) {
    const std::size_t m = b.size();
    return {F, Matrix::identity(m), std::move(b)};
}

bool AffineTransformation::is_invertible() const { return !determinant(field_, A_).is_zero(); }

Vector AffineTransformation::apply(std::span<const FieldElement> point) const {
    if (point.size() != b_.size())
        throw std::invalid_argument("point dimension mismatch");
    Vector out(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i) {
        FieldElement s = b_[i];
        for (std::size_t j = 0; j < b_.size(); ++j)
            s = field_.add(s, field_.mul(A_(i, j), point[j]));
        out[i] = s;
    }
    return out;
}

std::strong_ordering operator<=>(const AffineTransformation& x, const AffineTransformation& y) {
    if (auto c = x.A_ <=> y.A_; c != 0)
        return c;
    return x.b_ <=> y.b_;
}

AffineTransformation compose(const AffineTransformation& t1, const AffineTransformation& t2) {
    if (!(t1.field() == t2.field()) || t1.dimension() != t2.dimension())
        throw std::invalid_argument("composing affine maps of different shapes");
    const Field& F = t1.field();
    Matrix A = multiply(F, t1.A(), t2.A());
    Vector b = multiply(F, t1.A(), t2.b());
    for (std::size_t i = 0; i < b.size(); ++i)
        b[i] = F.add(b[i], t1.b()[i]);
    return {F, std::move(A), std::move(b)};
}

AffineTransformation invert(const AffineTransformation& t) {
    const Field& F = t.field();
    auto Ainv = inverse(F, t.A());
    if (!Ainv)
        throw std::domain_error("cannot invert an affine map with singular matrix");
    Vector b = multiply(F, *Ainv, t.b());
    for (auto& x : b)
        x = F.neg(x);
    return {F, std::move(*Ainv), std::move(b)};
}

std::ostream& operator<<(std::ostream& os, const AffineTransformation& t) {
    const Field& F = t.field();
    os << "A=[";
    for (std::size_t i = 0; i < t.dimension(); ++i) {
        os << (i ? ";" : "");
        for (std::size_t j = 0; j < t.dimension(); ++j)
            os << (j ? "," : "") << F.to_string(t.A()(i, j));
    }
    os << "] b=[";
    for (std::size_t i = 0; i < t.dimension(); ++i)
        os << (i ? "," : "") << F.to_string(t.b()[i]);
    return os << ']';
}

} // namespace cartperm
