#pragma once

#include <random>
#include <string>
#include <vector>

#include "rrb/rrb_bimodule.hpp"

namespace fx {

using namespace rrb;

/// 1-dimensional algebra with e.e = c e.
AssocAlgebra line(long c);
/// k[x]/(x^n) in the basis 1, x, ..., x^(n-1).
AssocAlgebra truncated_poly(std::size_t n);
/// Integration x^i -> x^(i+1)/(i+1) on k[x]/(x^n).
LinearMap integration(std::size_t n);
/// Upper triangular 2x2 matrices, basis e11, e12, e22.
AssocAlgebra upper_triangular();

/// span{x, y, z} with x.y = z as the only nonzero product.
AssocAlgebra heisenberg();
/// Degree derivation x -> x, y -> y, z -> 2z of the Heisenberg algebra.
LinearMap heisenberg_degree();
/// Relative differential algebra built from the degree derivation, over the
/// adjoint bimodules with l(m, b) = m.b and r(b, m) = b.m.
DifferentialPair heisenberg_differential_pair();

/// A = k (e.e = e), M adjoint, R = 0.
RelativeRBAlgebra unit_zero_r();
/// A = k with e.e = 0, M adjoint, R = id.
RelativeRBAlgebra square_zero_identity();
/// Zero algebra and action of the given dimensions with R all ones.
RelativeRBAlgebra zero_structure(std::size_t na, std::size_t nm);
/// Integration on k[x]/(x^n) as a relative Rota-Baxter algebra over the adjoint bimodule.
RelativeRBAlgebra integration_rrb(std::size_t n);

/// Random invertible integer matrix (unitriangular factors and a permutation).
Matrix random_invertible(std::mt19937& rng, std::size_t n);
Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -2, int hi = 2);
Vec random_vec(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3);
Multilinear random_multilinear(std::mt19937& rng, std::size_t out, std::vector<std::size_t> in, int lo = -2,
                               int hi = 2);

/// Structure transported to the bases given by the columns of P (on A) and Q (on M).
AssocAlgebra transport(const AssocAlgebra& a, const Matrix& p);
Bimodule transport(const Bimodule& m, const Matrix& p, const Matrix& q);
RelativeRBAlgebra transport(const RelativeRBAlgebra& x, const Matrix& p, const Matrix& q);
/// Same for a bimodule, with U on B and V on N.
RRBBimodule transport(const RRBBimodule& b, const Matrix& p, const Matrix& q, const Matrix& u, const Matrix& v);

/// Seeded random passing relative Rota-Baxter algebra with small dimensions.
RelativeRBAlgebra random_rrb(std::mt19937& rng);
/// Seeded random passing bimodule over `x`.
RRBBimodule random_bimodule(std::mt19937& rng, const RelativeRBAlgebra& x);
/// Random passing dendriform algebra, induced from a random fixture.
DendriformAlgebra random_dendriform(std::mt19937& rng);

/// Adds 1 to one random structure constant of the named piece.
Multilinear mutate(std::mt19937& rng, const Multilinear& f);
Matrix mutate(std::mt19937& rng, const Matrix& f);

/// Short description for failure messages.
std::string describe(const RelativeRBAlgebra& x);

}  // namespace fx
