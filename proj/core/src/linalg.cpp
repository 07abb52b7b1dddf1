#include "cartperm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cartperm {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = FieldElement{1};
    return m;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = F.add(out(i, j), F.mul(aik, b(k, j)));
        }
    return out;
}

Vector multiply(const Field& F, const Matrix& a, std::span<const FieldElement> x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        FieldElement s{};
        for (std::size_t j = 0; j < a.cols(); ++j)
            s = F.add(s, F.mul(a(i, j), x[j]));
        out[i] = s;
    }
    return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
    if (r1 == r2)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(r1, c), m(r2, c));
}

} // namespace

RowEchelon rref(const Field& F, Matrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        swap_rows(m, r, piv);
        const FieldElement s = F.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = F.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const FieldElement f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            reduced(i, j) = m(i, j);
    out.reduced = std::move(reduced);
    return out;
}

std::size_t rank(const Field& F, const Matrix& m) { return rref(F, m).rank(); }

FieldElement determinant(const Field& F, Matrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    FieldElement det = F.one();
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero())
            ++piv;
        if (piv == n)
            return F.zero();
        if (piv != c) {
            swap_rows(m, piv, c);
            det = F.neg(det);
        }
        det = F.mul(det, m(c, c));
        const FieldElement s = F.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero())
                continue;
            const FieldElement f = F.mul(m(i, c), s);
            for (std::size_t j = c; j < n; ++j)
                m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = F.one();
    }
    RowEchelon e = rref(F, std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = e.reduced(i, n + j);
    return out;
}

} // namespace cartperm
