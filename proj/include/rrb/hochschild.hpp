#pragma once

#include "rrb/algebra.hpp"

namespace rrb {

/// A degree-k Hochschild cochain A^{(x)k} -> M is a Multilinear with k inputs
/// of dimension dim A; degree 0 cochains have one column (elements of M).
/// Cochain coordinates are the row-major entries of its matrix.

/// Matrix of delta: C^k_H(A, M) -> C^{k+1}_H(A, M) in cochain coordinates:
///   (df)(a_1..a_{k+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
///                        + (-1)^{k+1} f(a_1..a_k) a_{k+1}.
SparseMatrix hochschild_operator(const AssocAlgebra& a, const Bimodule& m, std::size_t k);

Multilinear hochschild_differential(const AssocAlgebra& a, const Bimodule& m, const Multilinear& f);

/// dim H^k_H(A, M), with delta^{-1} = 0.
std::size_t hochschild_cohomology_dim(const AssocAlgebra& a, const Bimodule& m, std::size_t k);

/// Shape of a degree-k cochain A^{(x)k} -> M.
Multilinear zero_cochain(std::size_t out_dim, std::size_t in_dim, std::size_t k);

}  // namespace rrb
