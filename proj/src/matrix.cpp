#include "rampw/matrix.hpp"

#include <stdexcept>

namespace rampw {

Matrix::Matrix(FieldRef field, size_t rows, size_t cols, std::vector<uint8_t> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: data size mismatch");
    for (uint8_t v : data_)
        if (v >= field_->q()) throw std::invalid_argument("Matrix: element out of field range");
}

Matrix Matrix::identity(FieldRef field, size_t n) {
    Matrix m(std::move(field), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldRef field, const std::vector<std::vector<uint8_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("Matrix: no rows");
    size_t cols = rows[0].size();
    std::vector<uint8_t> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("Matrix: ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::select_columns(const std::vector<size_t>& cols) const {
    Matrix s(field_, rows_, cols.size());
    for (size_t r = 0; r < rows_; ++r)
        for (size_t i = 0; i < cols.size(); ++i) s.at(r, i) = at(r, cols[i]);
    return s;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (other.cols_ != cols_ || other.field_.get() != field_.get())
        throw std::invalid_argument("Matrix::vstack: shape or field mismatch");
    Matrix s(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), s.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), s.data_.begin() + data_.size());
    return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.field_.get() != b.field_.get())
        throw std::invalid_argument("Matrix::mul: shape or field mismatch");
    const FieldSpec& f = *a.field_;
    Matrix c(a.field_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            uint8_t aik = a.at(i, k);
            if (aik == 0) continue;
            const uint8_t* brow = b.row(k);
            uint8_t* crow = c.row(i);
            for (size_t j = 0; j < b.cols_; ++j)
                crow[j] = f.add(crow[j], f.mul(aik, brow[j]));
        }
    return c;
}

bool Matrix::is_zero() const {
    for (uint8_t v : data_)
        if (v != 0) return false;
    return true;
}

RrefResult rref(const Matrix& m, bool drop_zero_rows) {
    const FieldSpec& f = *m.field();
    Matrix a = m;
    const size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (a.at(i, c) != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        if (pivot != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
        uint8_t inv = f.inv(a.at(r, c));
        if (inv != 1)
            for (size_t j = c; j < cols; ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint8_t factor = a.at(i, c);
            if (factor == 0) continue;
            for (size_t j = c; j < cols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivots = std::move(pivots);
    if (drop_zero_rows && r < rows) {
        Matrix trimmed(m.field(), r, cols);
        for (size_t i = 0; i < r; ++i)
            std::copy(a.row(i), a.row(i) + cols, trimmed.row(i));
        out.matrix = std::move(trimmed);
    } else {
        out.matrix = std::move(a);
    }
    return out;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix null_space(const Matrix& m) {
    auto r = rref(m);
    const FieldSpec& f = *m.field();
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : r.pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(m.field(), free_cols.size(), n);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t fc = free_cols[i];
        basis.at(i, fc) = 1;
        for (size_t pr = 0; pr < r.pivots.size(); ++pr)
            basis.at(i, r.pivots[pr]) = f.neg(r.matrix.at(pr, fc));
    }
    return rref(basis, true).matrix;
}

bool rref_contains(const RrefResult& r, const std::vector<uint8_t>& v) {
    const FieldSpec& f = *r.matrix.field();
    std::vector<uint8_t> w = v;
    for (size_t i = 0; i < r.rank; ++i) {
        uint8_t coeff = w[r.pivots[i]];
        if (coeff == 0) continue;
        const uint8_t* row = r.matrix.row(i);
        for (size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(coeff, row[j]));
    }
    for (uint8_t x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace rampw
