#include "kacpal/linalg.hpp"

#include <stdexcept>

namespace kacpal {

Matrix::Matrix(const CycContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, ctx.zero()) {}

Matrix Matrix::identity(const CycContext& ctx, std::size_t size) {
    Matrix m(ctx, size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = ctx.one();
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(*ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const CycScalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const CycScalar& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const CycScalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
}

Matrix Matrix::pow(unsigned e) const {
    Matrix acc = identity(*ctx_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const CycScalar inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const CycScalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<CycScalar>> nullspace(Matrix m) {
    const CycContext& ctx = m.context();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycScalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycScalar> v(m.cols(), ctx.zero());
        v[free] = ctx.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

CycScalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const CycContext& ctx = m.context();
    CycScalar det = ctx.one();
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return ctx.zero();
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det = det * m(col, col);
        const CycScalar inv = m(col, col).inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const CycScalar f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

bool SpanBuilder::insert(std::vector<CycScalar> v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: wrong vector length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const CycScalar f = v[pivots_[r]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv].is_zero()) ++piv;
    if (piv == dim_) return false;
    const CycScalar inv = v[piv].inv();
    for (auto& x : v) x = x * inv;
    // keep existing rows reduced at the new pivot
    for (auto& row : rows_) {
        const CycScalar f = row[piv];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    (void)ctx_;
    return true;
}

}  // namespace kacpal
