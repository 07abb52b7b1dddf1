#ifndef CARTPERM_LINALG_HPP
#define CARTPERM_LINALG_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cartperm/finite_field.hpp"

namespace cartperm {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix of field elements. Carries no field; the
/// operations below take one.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, FieldElement fill = {})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const FieldElement> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    friend auto operator<=>(const Matrix&, const Matrix&) = default;
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
Vector multiply(const Field& F, const Matrix& a, std::span<const FieldElement> x);

/// Reduced row-echelon form with leading ones. Zero rows are dropped, so
/// `reduced.rows() == rank`.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(const Field& F, Matrix m);
std::size_t rank(const Field& F, const Matrix& m);
FieldElement determinant(const Field& F, Matrix m);
std::optional<Matrix> inverse(const Field& F, const Matrix& m);

} // namespace cartperm

#endif // CARTPERM_LINALG_HPP
