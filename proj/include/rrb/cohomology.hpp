#pragma once

#include <vector>

#include "rrb/hochschild.hpp"
#include "rrb/rrb_bimodule.hpp"

namespace rrb {

/// Dimensions of the three components of C^k_rRB.
struct CochainDims {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;

    std::size_t total() const { return alpha + beta + gamma; }
    friend bool operator==(const CochainDims&, const CochainDims&) = default;
};

/// (0,0,0) for k = 0, (ab, mn, 0) for k = 1 and (a^k b, k a^{k-1} m n, m^{k-1} b)
/// for k >= 2, writing a = dim A and so on.
CochainDims cochain_space_dims(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k);

/// Input dimensions of the slot-s summand A x .. x M x .. x A (s counted from 0).
std::vector<std::size_t> mixed_slot_dims(std::size_t dim_a, std::size_t dim_m, std::size_t k, std::size_t s);

/// A k-cochain (alpha, beta, gamma): alpha: A^k -> B, beta[s] defined on the
/// summand with M in slot s and valued in N, gamma: M^{k-1} -> B (k >= 2 only).
/// Coordinates are [alpha | beta[0] | .. | beta[k-1] | gamma].
struct RRBCochain {
    std::size_t k = 0;
    Multilinear alpha;
    std::vector<Multilinear> beta;
    Multilinear gamma;

    static RRBCochain zero(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k);
    static RRBCochain unflatten(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k, const Vec& v);
    Vec flatten() const;

    friend bool operator==(const RRBCochain&, const RRBCochain&) = default;
};

/// Throws ShapeError unless c has the shape of a degree-c.k cochain.
void check_cochain_shape(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c);

/// Hochschild differential of A with coefficients in B.
Multilinear delta_AB(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& alpha);

/// The alpha-twisted differential on the beta part:
///   (l + l_N)(a_1, (alpha + beta)(a_2..))
///   + sum_i (-1)^i beta(.., (mu + l_M + r_M)(a_i, a_{i+1}), ..)
///   + (-1)^{k+1} (r + r_N)((alpha + beta)(a_1..a_k), a_{k+1}),
/// where alpha is used when all arguments lie in A and the pairings are used
/// when the M argument is consumed by the boundary term.
std::vector<Multilinear> delta_alpha_AN(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& alpha,
                                        const std::vector<Multilinear>& beta);

/// Hochschild differential of M_Tot with coefficients in B with the actions
/// m > b = R(m).b - S(l(m,b)), b < m = b.R(m) - S(r(b,m)).
Multilinear delta_MB(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& gamma);

/// h_R(alpha, beta)(m_1..m_k) = (-1)^k { alpha(Rm_1..Rm_k) - sum_i S beta_i(Rm_1..m_i..Rm_k) }.
Multilinear h_R(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& alpha,
                const std::vector<Multilinear>& beta);

/// Matrix of delta_rRB: C^k -> C^{k+1} in cochain coordinates.
SparseMatrix rrb_operator(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k);

/// (delta_AB alpha, delta^alpha beta, h_R) for k = 1 and
/// (delta_AB alpha, delta^alpha beta, delta_MB gamma + h_R) for k >= 2.
RRBCochain rrb_differential(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c);

/// dim ker delta^k - rank delta^{k-1}, with delta^0 = 0.
std::size_t rrb_cohomology_dim(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k);

/// The four derivation identities for a degree-1 pair (alpha, beta):
///   alpha(aa') = alpha(a)a' + a alpha(a'),  beta(a.m) = r(alpha(a), m) + a.beta(m),
///   beta(m.a) = beta(m).a + l(m, alpha(a)),  alpha R = S beta.
Report check_derivation(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c);

/// Basis of Z^1 = ker delta^1.
std::vector<RRBCochain> derivation_basis(const RelativeRBAlgebra& x, const RRBBimodule& b);

/// A Rota-Baxter bimodule (M, R_M) over (A, R) as a bimodule M --R_M--> M over
/// A --R--> A with l and r the A-actions on M.
RRBBimodule rrb_bimodule_from_rb(const AssocAlgebra& a, const LinearMap& rop, const Bimodule& m, const LinearMap& rm);

/// Cochain of the Rota-Baxter complex: beta: A^k -> M and, for k >= 2,
/// gamma: A^{k-1} -> M.
struct RBCochain {
    std::size_t k = 0;
    Multilinear beta;
    Multilinear gamma;

    friend bool operator==(const RBCochain&, const RBCochain&) = default;
};

/// i(beta, gamma) = (beta, beta, gamma), with every beta slot equal to beta.
RRBCochain rb_embed(const RBCochain& c);

/// delta_RB through the embedding. Throws InternalError if the image of an
/// embedded cochain leaves the embedded subspace.
RBCochain rb_restrict(const AssocAlgebra& a, const LinearMap& rop, const Bimodule& m, const LinearMap& rm,
                      const RBCochain& c);

/// Dendriform cochain f[i]: D^k -> E for the labels [1]..[k] (stored 0-based).
struct DendriformCochain {
    std::size_t k = 0;
    std::vector<Multilinear> f;

    static DendriformCochain zero(std::size_t dim_d, std::size_t dim_e, std::size_t k);
    friend bool operator==(const DendriformCochain&, const DendriformCochain&) = default;
};

/// D_Tot + D with (X, x)(Y, y) = (X*Y, X > y + x < Y).
AssocAlgebra dendriform_hat_algebra(const DendriformAlgebra& d);
/// E_Tot + E with (X, x).(F, e) = (X<F + X>F, X > e + x < F) and
/// (F, e).(X, x) = (F<X + F>X, F > x + e < X).
Bimodule dendriform_hat_bimodule(const DendriformRepresentation& e);

/// Hochschild cochain on (D_Tot + D)^k: sum_i f[i] on first components,
/// (0, f[i]) with exactly one second component in slot i, zero otherwise.
Multilinear dendriform_hat(const DendriformCochain& f, std::size_t dim_d, std::size_t dim_e);
/// f[i](x_1..x_k) = pr_2 g((x_1,0)..(0,x_i)..(x_k,0)).
DendriformCochain dendriform_unhat(const Multilinear& g, std::size_t dim_d, std::size_t dim_e);

/// delta_D through the hat map. Throws InternalError if the Hochschild
/// differential of the hat leaves the hat image.
DendriformCochain dendriform_differential(const DendriformAlgebra& d, const DendriformRepresentation& e,
                                          const DendriformCochain& f);

/// psi_k(f)[1] = (-1)^{k+1} l(m_1, f(m_2..)), psi_k(f)[k+1] = r(f(m_1..m_k), m_{k+1}),
/// zero for the labels in between. f: M^k -> B.
DendriformCochain psi_map(const RRBBimodule& b, const Multilinear& f);

}  // namespace rrb
