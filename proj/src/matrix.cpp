#include "rrb/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "rrb/error.hpp"

namespace rrb {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

namespace {
void require_same(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw ShapeError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    }
}
}  // namespace

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    return r += b;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    return r -= b;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) r[i] = s * v[i];
    }
    return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!b[i].is_zero()) a[i] += b[i];
    }
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!b[i].is_zero()) a[i] -= b[i];
    }
    return a;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r(a);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw ShapeError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw ShapeError("block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i) {
        for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
    }
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw ShapeError("block out of range");
    Matrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

bool Matrix::is_zero() const { return rrb::is_zero(data_); }

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_) {
        throw ShapeError("matrix-vector mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " times " + std::to_string(v.size()));
    }
    Vec r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational& a = (*this)(i, j);
            if (!a.is_zero()) r[i] += a * v[j];
        }
    }
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw ShapeError("matrix product mismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (!y.is_zero()) c(i, j) += x * y;
            }
        }
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c(a);
    for (auto& x : c.data_) x *= s;
    return c;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vec& v) {
    if (v.size() != rows * cols) throw ShapeError("unflatten: wrong length");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ShapeError("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_entries_(rows) {}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) s.row_entries_[i].push_back({j, m(i, j)});
        }
    }
    return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s.row_entries_[i].push_back({i, Rational(1)});
    return s;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : row_entries_) n += r.size();
    return n;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= rows_ || j >= cols_) {
        throw ShapeError("sparse entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    if (value.is_zero()) return;
    pending_.push_back({i, j, value});
}

void SparseMatrix::finalize() {
    if (pending_.empty()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (auto& e : row_entries_[i]) pending_.push_back({i, e.col, std::move(e.value)});
        row_entries_[i].clear();
    }
    std::stable_sort(pending_.begin(), pending_.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t k = 0; k < pending_.size();) {
        std::size_t r = pending_[k].row;
        std::size_t c = pending_[k].col;
        Rational sum = std::move(pending_[k].value);
        ++k;
        while (k < pending_.size() && pending_[k].row == r && pending_[k].col == c) {
            sum += pending_[k].value;
            ++k;
        }
        if (!sum.is_zero()) row_entries_[r].push_back({c, std::move(sum)});
    }
    pending_.clear();
    pending_.shrink_to_fit();
}

Matrix SparseMatrix::to_dense() const {
    if (!pending_.empty()) throw InternalError("SparseMatrix used before finalize()");
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : row_entries_[i]) m(i, e.col) = e.value;
    }
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : row_entries_[i]) t.row_entries_[e.col].push_back({i, e.value});
    }
    return t;
}

bool SparseMatrix::is_zero() const {
    if (!pending_.empty()) throw InternalError("SparseMatrix used before finalize()");
    return std::all_of(row_entries_.begin(), row_entries_.end(), [](const auto& r) { return r.empty(); });
}

Vec SparseMatrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw ShapeError("sparse matrix-vector mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : row_entries_[i]) {
            if (!v[e.col].is_zero()) r[i] += e.value * v[e.col];
        }
    }
    return r;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("sparse product mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    std::vector<Rational> acc(b.cols_);
    std::vector<char> touched(b.cols_, 0);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        cols.clear();
        for (const auto& ea : a.row_entries_[i]) {
            for (const auto& eb : b.row_entries_[ea.col]) {
                if (!touched[eb.col]) {
                    touched[eb.col] = 1;
                    cols.push_back(eb.col);
                }
                acc[eb.col] += ea.value * eb.value;
            }
        }
        std::sort(cols.begin(), cols.end());
        for (std::size_t j : cols) {
            if (!acc[j].is_zero()) c.row_entries_[i].push_back({j, acc[j]});
            acc[j] = Rational();
            touched[j] = 0;
        }
    }
    return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("sparse sum mismatch");
    SparseMatrix c(a.rows_, a.cols_);
    c.add_block(0, 0, a);
    c.add_block(0, 0, b);
    c.finalize();
    return c;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Rational(-1) * b; }

SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
    SparseMatrix c(a.rows_, a.cols_);
    if (s.is_zero()) return c;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (const auto& e : a.row_entries_[i]) c.row_entries_[i].push_back({e.col, s * e.value});
    }
    return c;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const auto& ra = a.row_entries_[i];
        const auto& rb = b.row_entries_[i];
        if (ra.size() != rb.size()) return false;
        for (std::size_t k = 0; k < ra.size(); ++k) {
            if (ra[k].col != rb[k].col || !(ra[k].value == rb[k].value)) return false;
        }
    }
    return true;
}

SparseMatrix SparseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("sparse block out of range");
    SparseMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (const auto& e : row_entries_[r0 + i]) {
            if (e.col >= c0 && e.col < c0 + nc) b.row_entries_[i].push_back({e.col - c0, e.value});
        }
    }
    return b;
}

void SparseMatrix::add_block(std::size_t r0, std::size_t c0, const SparseMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("sparse block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i) {
        for (const auto& e : b.row_entries_[i]) pending_.push_back({r0 + i, c0 + e.col, e.value});
    }
}

// ---------------------------------------------------------------------------

TensorIndex::TensorIndex(std::vector<std::size_t> factor_dims) : dims_(std::move(factor_dims)) {
    strides_.assign(dims_.size(), 1);
    size_ = 1;
    for (std::size_t p = dims_.size(); p-- > 0;) {
        strides_[p] = size_;
        size_ *= dims_[p];
    }
}

std::size_t TensorIndex::flatten(std::span<const std::size_t> multi) const {
    if (multi.size() != dims_.size()) throw ShapeError("tensor index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t p = 0; p < multi.size(); ++p) {
        if (multi[p] >= dims_[p]) throw ShapeError("tensor index out of range");
        flat += multi[p] * strides_[p];
    }
    return flat;
}

std::vector<std::size_t> TensorIndex::unflatten(std::size_t flat) const {
    if (flat >= size_) throw ShapeError("flat tensor index out of range");
    std::vector<std::size_t> multi(dims_.size());
    for (std::size_t p = 0; p < dims_.size(); ++p) {
        multi[p] = flat / strides_[p];
        flat %= strides_[p];
    }
    return multi;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace rrb
