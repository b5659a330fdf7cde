#pragma once

#include <cstddef>
#include <vector>

#include "kacpal/cyclotomic.hpp"

namespace kacpal {

/// Dense matrix over Q(ζ_N), row-major.
class Matrix {
public:
    Matrix(const CycContext& ctx, std::size_t rows, std::size_t cols);
    static Matrix identity(const CycContext& ctx, std::size_t size);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CycContext& context() const { return *ctx_; }

    CycScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const CycScalar& s) const;
    Matrix pow(unsigned e) const;

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Row-major entries as one vector (used for span computations).
    std::vector<CycScalar> flatten() const { return data_; }

private:
    const CycContext* ctx_;
    std::size_t rows_, cols_;
    std::vector<CycScalar> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}, one vector per free column, in reduced form.
std::vector<std::vector<CycScalar>> nullspace(Matrix m);

CycScalar determinant(Matrix m);

/// Incrementally maintained row space of vectors of a fixed length; `insert`
/// reports whether the vector enlarged the span.
class SpanBuilder {
public:
    SpanBuilder(const CycContext& ctx, std::size_t dim) : ctx_(&ctx), dim_(dim) {}
    bool insert(std::vector<CycScalar> v);
    std::size_t dimension() const { return rows_.size(); }

private:
    const CycContext* ctx_;
    std::size_t dim_;
    std::vector<std::vector<CycScalar>> rows_;  // each normalised at its pivot
    std::vector<std::size_t> pivots_;
};

}  // namespace kacpal
