#include "rrb/linalg.hpp"

#include <map>

#include "rrb/error.hpp"

namespace rrb {

Echelon row_reduce(Matrix m) {
    Echelon e;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        }
        Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) {
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rref = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) {
    // Forward elimination only; cheaper than the full reduced form.
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Matrix a = m.rows() <= m.cols() ? m : m.transpose();
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        }
        Rational inv = a(r, c).inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c).is_zero()) continue;
            Rational f = a(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) {
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
            }
        }
        ++r;
    }
    return r;
}

std::size_t rank(const SparseMatrix& m) {
    // Sparse Gaussian elimination over rows kept as ordered maps; the
    // coboundary operators stay sparse long enough for this to pay off.
    using Row = std::map<std::size_t, Rational>;
    std::map<std::size_t, Row> pivot_rows;  // leading column -> row
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row row;
        for (const auto& e : m.row(i)) row.emplace(e.col, e.value);
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivot_rows.find(lead->first);
            if (it == pivot_rows.end()) {
                Rational inv = lead->second.inverse();
                for (auto& [c, v] : row) v *= inv;
                pivot_rows.emplace(lead->first, std::move(row));
                ++r;
                break;
            }
            Rational f = lead->second;
            for (const auto& [c, v] : it->second) {
                auto [pos, inserted] = row.try_emplace(c, -(f * v));
                if (!inserted) {
                    pos->second -= f * v;
                    if (pos->second.is_zero()) row.erase(pos);
                }
            }
        }
    }
    return r;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : e.pivots) is_pivot[c] = 1;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw ShapeError("solve: right-hand side has wrong length");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    Echelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rref(k, m.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Echelon e = row_reduce(hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        throw PreconditionError("inverse: matrix is singular");
    }
    return e.rref.block(0, n, n, n);
}

std::size_t homology_dim(const Matrix& d_out, const Matrix& d_in) {
    if (d_in.rows() != d_out.cols()) throw ShapeError("homology_dim: maps are not composable");
    if (!(d_out * d_in).is_zero()) throw PreconditionError("homology_dim: d_out * d_in is not zero");
    return d_out.cols() - rank(d_out) - rank(d_in);
}

std::size_t homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in) {
    if (d_in.rows() != d_out.cols()) throw ShapeError("homology_dim: maps are not composable");
    if (!(d_out * d_in).is_zero()) throw PreconditionError("homology_dim: d_out * d_in is not zero");
    return d_out.cols() - rank(d_out) - rank(d_in);
}

bool in_column_span(const Matrix& m, const Vec& v) { return solve(m, v).has_value(); }

}  // namespace rrb
