#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "rrb/matrix.hpp"

namespace rrb {

/// Linear maps are plain matrices of shape codomain_dim x domain_dim.
using LinearMap = Matrix;

/// Structure constants of a multilinear map V_1 x ... x V_k -> W, stored as a
/// matrix of shape dim W x (dim V_1 * ... * dim V_k) with the inputs flattened
/// big-endian. A bilinear product c[i][j][o] lives at (o, i * dim V_2 + j).
class Multilinear {
public:
    Multilinear() = default;
    Multilinear(std::size_t out_dim, std::vector<std::size_t> in_dims);
    Multilinear(std::size_t out_dim, std::vector<std::size_t> in_dims, Matrix m);

    std::size_t out_dim() const { return out_dim_; }
    const std::vector<std::size_t>& in_dims() const { return index_.dims(); }
    std::size_t arity() const { return index_.arity(); }
    const TensorIndex& index() const { return index_; }
    const Matrix& matrix() const { return mat_; }
    Matrix& matrix() { return mat_; }

    Rational& at(std::size_t out, std::initializer_list<std::size_t> in);
    const Rational& at(std::size_t out, std::initializer_list<std::size_t> in) const;

    /// Value on a tuple of basis vectors.
    Vec on_basis(std::span<const std::size_t> in) const;
    /// Value on arbitrary vectors, one per input slot.
    Vec operator()(std::span<const Vec> args) const;
    Vec operator()(const Vec& x, const Vec& y) const;
    Vec operator()(const Vec& x, const Vec& y, const Vec& z) const;

    /// Adds s * f(args) into `out` without allocating the intermediate.
    void accumulate(Vec& out, const Rational& s, std::span<const Vec> args) const;

    bool is_zero() const { return mat_.is_zero(); }
    friend bool operator==(const Multilinear& a, const Multilinear& b) {
        return a.out_dim_ == b.out_dim_ && a.in_dims() == b.in_dims() && a.mat_ == b.mat_;
    }
    friend Multilinear operator+(const Multilinear& a, const Multilinear& b);
    friend Multilinear operator-(const Multilinear& a, const Multilinear& b);
    friend Multilinear operator*(const Rational& s, const Multilinear& a);

    /// Post-composition L o f.
    Multilinear then(const LinearMap& l) const;
    /// Pre-composition f o (L_1 x ... x L_k); `maps[i]` has codomain V_i.
    Multilinear precompose(const std::vector<LinearMap>& maps) const;
    /// Swaps the two inputs of a bilinear map.
    Multilinear swapped() const;

    /// Cochain coordinates: the matrix entries in row-major order.
    Vec flatten() const { return mat_.flatten(); }
    static Multilinear unflatten(std::size_t out_dim, std::vector<std::size_t> in_dims, const Vec& v);

private:
    std::size_t out_dim_ = 0;
    TensorIndex index_;
    Matrix mat_;
};

/// Adds `block` into `t` with the output shifted by `out_offset` and input p
/// shifted by `in_offsets[p]`; used to assemble maps on direct sums.
void add_block(Multilinear& t, std::size_t out_offset, const std::vector<std::size_t>& in_offsets,
               const Multilinear& block);

/// Kronecker product of linear maps, matching the big-endian flattening.
Matrix kron(const std::vector<LinearMap>& maps);

/// Operator on flattened coordinates realizing f |-> L o f for f with `cols` inputs.
SparseMatrix postcompose_operator(const LinearMap& l, std::size_t cols);
/// Operator on flattened coordinates realizing f |-> f o K for f with `rows` outputs.
SparseMatrix precompose_operator(std::size_t rows, const Matrix& k);

}  // namespace rrb
