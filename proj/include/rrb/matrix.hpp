#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rrb/rational.hpp"

namespace rrb {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
/// Concatenation: the coordinates of `a` first, then `b`.
Vec concat(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Row-wise construction from small integers, for tests and fixtures.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
    static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Rational>& entries() const { return data_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_column(std::size_t j, const Vec& v);

    /// Copies `block` with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& block);
    Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    Matrix transpose() const;
    bool is_zero() const;

    Vec operator*(const Vec& v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Entries in row-major order; the flattening used for cochain coordinates.
    Vec flatten() const { return data_; }
    static Matrix unflatten(std::size_t rows, std::size_t cols, const Vec& v);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum: a in the top-left corner, b in the bottom-right.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Sparse matrix assembled from (row, col, value) triplets, used for the large
/// but very sparse coboundary operators. Duplicate triplets are summed.
class SparseMatrix {
public:
    struct Entry {
        std::size_t col;
        Rational value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    static SparseMatrix from_dense(const Matrix& m);
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    /// Adds `value` at (i, j). Call finalize() before reading.
    void add(std::size_t i, std::size_t j, const Rational& value);
    void finalize();

    const std::vector<Entry>& row(std::size_t i) const { return row_entries_[i]; }

    Matrix to_dense() const;
    SparseMatrix transpose() const;
    bool is_zero() const;

    Vec operator*(const Vec& v) const;
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Rational& s, const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

    /// Rows [r0, r0+nr) and columns [c0, c0+nc) as a new matrix.
    SparseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Places `b` with its top-left corner at (r0, c0); call finalize() afterwards.
    void add_block(std::size_t r0, std::size_t c0, const SparseMatrix& b);

private:
    struct Triplet {
        std::size_t row;
        std::size_t col;
        Rational value;
    };

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Triplet> pending_;
    std::vector<std::vector<Entry>> row_entries_;
};

/// Mixed-radix index for tensor products V_1 ⊗ ... ⊗ V_k. The first factor
/// varies slowest (big-endian), fixed across the whole library.
class TensorIndex {
public:
    TensorIndex() = default;
    explicit TensorIndex(std::vector<std::size_t> factor_dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t arity() const { return dims_.size(); }
    /// Product of the factor dimensions (1 for the empty product).
    std::size_t size() const { return size_; }

    std::size_t flatten(std::span<const std::size_t> multi) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;

    /// Calls f(multi_index, flat) for every index in increasing flat order.
    template <class F>
    void for_each(F&& f) const {
        std::vector<std::size_t> idx(dims_.size(), 0);
        if (size_ == 0) return;
        for (std::size_t flat = 0; flat < size_; ++flat) {
            f(static_cast<const std::vector<std::size_t>&>(idx), flat);
            for (std::size_t p = dims_.size(); p-- > 0;) {
                if (++idx[p] < dims_[p]) break;
                idx[p] = 0;
            }
        }
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace rrb
