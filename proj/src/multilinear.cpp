#include "rrb/multilinear.hpp"

#include "rrb/error.hpp"

namespace rrb {

Multilinear::Multilinear(std::size_t out_dim, std::vector<std::size_t> in_dims)
    : out_dim_(out_dim), index_(std::move(in_dims)), mat_(out_dim, index_.size()) {}

Multilinear::Multilinear(std::size_t out_dim, std::vector<std::size_t> in_dims, Matrix m)
    : out_dim_(out_dim), index_(std::move(in_dims)), mat_(std::move(m)) {
    if (mat_.rows() != out_dim_ || mat_.cols() != index_.size()) {
        throw ShapeError("structure constants have shape " + std::to_string(mat_.rows()) + "x" +
                         std::to_string(mat_.cols()) + ", expected " + std::to_string(out_dim_) + "x" +
                         std::to_string(index_.size()));
    }
}

Rational& Multilinear::at(std::size_t out, std::initializer_list<std::size_t> in) {
    return mat_(out, index_.flatten(std::span<const std::size_t>(in.begin(), in.size())));
}

const Rational& Multilinear::at(std::size_t out, std::initializer_list<std::size_t> in) const {
    return mat_(out, index_.flatten(std::span<const std::size_t>(in.begin(), in.size())));
}

Vec Multilinear::on_basis(std::span<const std::size_t> in) const { return mat_.column(index_.flatten(in)); }

void Multilinear::accumulate(Vec& out, const Rational& s, std::span<const Vec> args) const {
    if (args.size() != arity()) throw ShapeError("multilinear map applied to wrong number of arguments");
    if (out.size() != out_dim_) throw ShapeError("multilinear accumulate: output length mismatch");
    std::vector<std::vector<std::size_t>> nz(args.size());
    for (std::size_t p = 0; p < args.size(); ++p) {
        if (args[p].size() != in_dims()[p]) {
            throw ShapeError("multilinear argument " + std::to_string(p) + " has length " +
                             std::to_string(args[p].size()) + ", expected " + std::to_string(in_dims()[p]));
        }
        for (std::size_t i = 0; i < args[p].size(); ++i) {
            if (!args[p][i].is_zero()) nz[p].push_back(i);
        }
        if (nz[p].empty()) return;
    }
    if (s.is_zero()) return;
    // Odometer over the nonzero coordinates of every argument.
    std::vector<std::size_t> pos(args.size(), 0);
    std::vector<std::size_t> idx(args.size());
    while (true) {
        Rational coeff = s;
        for (std::size_t p = 0; p < args.size(); ++p) {
            idx[p] = nz[p][pos[p]];
            coeff *= args[p][idx[p]];
        }
        std::size_t col = index_.flatten(idx);
        for (std::size_t o = 0; o < out_dim_; ++o) {
            const Rational& c = mat_(o, col);
            if (!c.is_zero()) out[o] += coeff * c;
        }
        std::size_t p = args.size();
        while (p > 0) {
            --p;
            if (++pos[p] < nz[p].size()) break;
            pos[p] = 0;
            if (p == 0) return;
        }
        if (args.empty()) return;
    }
}

Vec Multilinear::operator()(std::span<const Vec> args) const {
    Vec out(out_dim_);
    accumulate(out, Rational(1), args);
    return out;
}

Vec Multilinear::operator()(const Vec& x, const Vec& y) const {
    const Vec args[2] = {x, y};
    return (*this)(std::span<const Vec>(args, 2));
}

Vec Multilinear::operator()(const Vec& x, const Vec& y, const Vec& z) const {
    const Vec args[3] = {x, y, z};
    return (*this)(std::span<const Vec>(args, 3));
}

Multilinear operator+(const Multilinear& a, const Multilinear& b) {
    if (a.in_dims() != b.in_dims() || a.out_dim_ != b.out_dim_) throw ShapeError("multilinear sum mismatch");
    return Multilinear(a.out_dim_, a.in_dims(), a.mat_ + b.mat_);
}

Multilinear operator-(const Multilinear& a, const Multilinear& b) {
    if (a.in_dims() != b.in_dims() || a.out_dim_ != b.out_dim_) throw ShapeError("multilinear difference mismatch");
    return Multilinear(a.out_dim_, a.in_dims(), a.mat_ - b.mat_);
}

Multilinear operator*(const Rational& s, const Multilinear& a) {
    return Multilinear(a.out_dim_, a.in_dims(), s * a.mat_);
}

Multilinear Multilinear::then(const LinearMap& l) const {
    if (l.cols() != out_dim_) throw ShapeError("post-composition: dimension mismatch");
    return Multilinear(l.rows(), in_dims(), l * mat_);
}

Multilinear Multilinear::precompose(const std::vector<LinearMap>& maps) const {
    if (maps.size() != arity()) throw ShapeError("pre-composition: wrong number of maps");
    std::vector<std::size_t> dims;
    for (std::size_t p = 0; p < maps.size(); ++p) {
        if (maps[p].rows() != in_dims()[p]) throw ShapeError("pre-composition: dimension mismatch");
        dims.push_back(maps[p].cols());
    }
    return Multilinear(out_dim_, dims, mat_ * kron(maps));
}

Multilinear Multilinear::swapped() const {
    if (arity() != 2) throw ShapeError("swapped() needs a bilinear map");
    const std::size_t d0 = in_dims()[0];
    const std::size_t d1 = in_dims()[1];
    Multilinear s(out_dim_, {d1, d0});
    for (std::size_t i = 0; i < d0; ++i) {
        for (std::size_t j = 0; j < d1; ++j) {
            for (std::size_t o = 0; o < out_dim_; ++o) s.at(o, {j, i}) = at(o, {i, j});
        }
    }
    return s;
}

Multilinear Multilinear::unflatten(std::size_t out_dim, std::vector<std::size_t> in_dims, const Vec& v) {
    std::size_t cols = TensorIndex(in_dims).size();
    return Multilinear(out_dim, std::move(in_dims), Matrix::unflatten(out_dim, cols, v));
}

void add_block(Multilinear& t, std::size_t out_offset, const std::vector<std::size_t>& in_offsets,
               const Multilinear& block) {
    if (in_offsets.size() != t.arity() || block.arity() != t.arity()) throw ShapeError("add_block: arity mismatch");
    for (std::size_t p = 0; p < t.arity(); ++p) {
        if (in_offsets[p] + block.in_dims()[p] > t.in_dims()[p]) throw ShapeError("add_block: input out of range");
    }
    if (out_offset + block.out_dim() > t.out_dim()) throw ShapeError("add_block: output out of range");
    std::vector<std::size_t> shifted(t.arity());
    block.index().for_each([&](const std::vector<std::size_t>& idx, std::size_t flat) {
        for (std::size_t p = 0; p < idx.size(); ++p) shifted[p] = idx[p] + in_offsets[p];
        std::size_t col = t.index().flatten(shifted);
        for (std::size_t o = 0; o < block.out_dim(); ++o) {
            const Rational& c = block.matrix()(o, flat);
            if (!c.is_zero()) t.matrix()(out_offset + o, col) += c;
        }
    });
}

Matrix kron(const std::vector<LinearMap>& maps) {
    Matrix k = Matrix::identity(1);
    for (const auto& m : maps) {
        Matrix next(k.rows() * m.rows(), k.cols() * m.cols());
        for (std::size_t i = 0; i < k.rows(); ++i) {
            for (std::size_t j = 0; j < k.cols(); ++j) {
                if (k(i, j).is_zero()) continue;
                for (std::size_t p = 0; p < m.rows(); ++p) {
                    for (std::size_t q = 0; q < m.cols(); ++q) {
                        if (!m(p, q).is_zero()) next(i * m.rows() + p, j * m.cols() + q) = k(i, j) * m(p, q);
                    }
                }
            }
        }
        k = std::move(next);
    }
    return k;
}

SparseMatrix postcompose_operator(const LinearMap& l, std::size_t cols) {
    // (L f)[o][c] = sum_w L[o][w] f[w][c]
    SparseMatrix op(l.rows() * cols, l.cols() * cols);
    for (std::size_t o = 0; o < l.rows(); ++o) {
        for (std::size_t w = 0; w < l.cols(); ++w) {
            if (l(o, w).is_zero()) continue;
            for (std::size_t c = 0; c < cols; ++c) op.add(o * cols + c, w * cols + c, l(o, w));
        }
    }
    op.finalize();
    return op;
}

SparseMatrix precompose_operator(std::size_t rows, const Matrix& k) {
    // (f K)[w][c] = sum_t f[w][t] K[t][c]
    SparseMatrix op(rows * k.cols(), rows * k.rows());
    for (std::size_t t = 0; t < k.rows(); ++t) {
        for (std::size_t c = 0; c < k.cols(); ++c) {
            if (k(t, c).is_zero()) continue;
            for (std::size_t w = 0; w < rows; ++w) op.add(w * k.cols() + c, w * k.rows() + t, k(t, c));
        }
    }
    op.finalize();
    return op;
}

}  // namespace rrb
