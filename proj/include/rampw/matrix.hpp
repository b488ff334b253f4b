#pragma once

#include <cstdint>
#include <vector>

#include "rampw/field.hpp"

namespace rampw {

// Dense row-major matrix of packed GF(q) elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldRef field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    // Row-major initial values, already packed.
    Matrix(FieldRef field, size_t rows, size_t cols, std::vector<uint8_t> data);

    static Matrix identity(FieldRef field, size_t n);
    static Matrix from_rows(FieldRef field, const std::vector<std::vector<uint8_t>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldRef& field() const { return field_; }

    uint8_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    uint8_t& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const uint8_t* row(size_t r) const { return data_.data() + r * cols_; }
    uint8_t* row(size_t r) { return data_.data() + r * cols_; }

    std::vector<uint8_t> row_vec(size_t r) const {
        return {row(r), row(r) + cols_};
    }

    Matrix transpose() const;
    // Keeps the listed columns, in the given order.
    Matrix select_columns(const std::vector<size_t>& cols) const;
    // Stacks this on top of other (same column count and field).
    Matrix vstack(const Matrix& other) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const;

private:
    FieldRef field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> data_;
};

struct RrefResult {
    Matrix matrix;               // reduced row echelon form, zero rows dropped when requested
    size_t rank = 0;
    std::vector<size_t> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form.  RREF is canonical per row space, so two matrices
// with equal row spaces reduce to the identical result.
RrefResult rref(const Matrix& m, bool drop_zero_rows = false);

// Rank via Gaussian elimination on a copy.
size_t rank(const Matrix& m);

// Basis of the right null space { x : M x^T = 0 }, returned as rows in RREF.
// Result has n - rank(M) rows of length cols(M).
Matrix null_space(const Matrix& m);

// Does v lie in the row space of the RREF matrix r?
bool rref_contains(const RrefResult& r, const std::vector<uint8_t>& v);

}  // namespace rampw
