#pragma once

#include <optional>
#include <vector>

#include "rrb/matrix.hpp"

namespace rrb {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
std::size_t rank(const SparseMatrix& m);

/// Basis of the null space {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square matrix. Throws PreconditionError if singular.
Matrix inverse(const Matrix& m);

/// dim ker(d_out) - rank(d_in) for a composable pair V -d_in-> W -d_out-> U.
/// Throws ShapeError if the middle dimensions disagree and PreconditionError
/// if d_out * d_in is not zero.
std::size_t homology_dim(const Matrix& d_out, const Matrix& d_in);
std::size_t homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in);

/// Whether `v` lies in the column span of `m`.
bool in_column_span(const Matrix& m, const Vec& v);

}  // namespace rrb
