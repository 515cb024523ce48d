#pragma once

#include <utility>

#include "rrb/rrb.hpp"

namespace rrb {

/// Bimodule N --S--> B over a relative Rota-Baxter algebra M --R--> A:
/// A-bimodules B and N, a map S: N -> B and pairings l: M x B -> N,
/// r: B x M -> N.
struct RRBBimodule {
    RelativeRBAlgebra over;
    Bimodule B;
    Bimodule N;
    LinearMap S;
    Multilinear l;
    Multilinear r;

    RRBBimodule() = default;
    RRBBimodule(RelativeRBAlgebra x, Bimodule b, Bimodule n, LinearMap s, Multilinear l, Multilinear r);

    std::size_t dim_b() const { return B.dim(); }
    std::size_t dim_n() const { return N.dim(); }

    static RRBBimodule zero(const RelativeRBAlgebra& x, std::size_t dim_b, std::size_t dim_n);

    friend bool operator==(const RRBBimodule& x, const RRBBimodule& y) {
        return x.over == y.over && x.B == y.B && x.N == y.N && x.S == y.S && x.l == y.l && x.r == y.r;
    }
};

/// The six pairing identities:
///   l(a.m, b) = a.l(m, b),  l(m.a, b) = l(m, a.b),  l(m, b.a) = l(m, b).a,
///   r(a.b, m) = a.r(b, m),  r(b.a, m) = r(b, a.m),  r(b, m.a) = r(b, m).a.
Report check_pairings(const RRBBimodule& b);
/// The two operator identities:
///   R(m).S(n) = S(R(m).n + l(m, S n)),  S(n).R(m) = S(r(S n, m) + n.R(m)).
Report check_operator_identities(const RRBBimodule& b);
/// Pairing and operator identities together.
Report check_rrb_bimodule(const RRBBimodule& b);
/// Also checks the underlying algebra, module and bimodules B, N.
Report check_rrb_bimodule_full(const RRBBimodule& b);

/// B = A, N = M, S = R, l(m, a) = m.a, r(a, m) = a.m.
RRBBimodule adjoint_bimodule(const RelativeRBAlgebra& x);
/// Dual bimodule B* --(-S^T)--> N*: new N = B*, new B = N*, with the dual
/// A-actions and l'(m, f)(b) = f(r(b, m)), r'(f, m)(b) = f(l(m, b)).
RRBBimodule dual_rrb_bimodule(const RRBBimodule& b);
RRBBimodule coadjoint_bimodule(const RelativeRBAlgebra& x);

/// Target's adjoint bimodule pulled back along a morphism (phi, psi):
/// l(m, b) = psi(m).b, r(b, m) = b.psi(m).
RRBBimodule morphism_induced_bimodule(const RRBMorphism& m);

/// M + N --(R + S)--> A + B with (a,b).(m,n) = (a.m, a.n + r(b,m)) and
/// (m,n).(a,b) = (m.a, l(m,b) + n.a). A-basis (resp. M-basis) first.
RelativeRBAlgebra semidirect_rrb(const RRBBimodule& b);

/// B + N as a bimodule over the semidirect algebra A + M:
///   (a,m).(b,n) = (a.b, a.n + l(m,b)),  (b,n).(a,m) = (b.a, r(b,m) + n.a),
/// with S^(b, n) = (S(n), 0), together with the lifted (A + M, R^).
struct LiftedBimodule {
    LiftedRB base;
    Bimodule module;
    LinearMap S;
};

/// Throws PreconditionError if the pairing identities fail.
LiftedBimodule lift_bimodule(const RRBBimodule& b);
Report check_lifted(const LiftedBimodule& lb);

/// B as an M_Tot-bimodule: m > b = R(m).b - S(l(m,b)), b < m = b.R(m) - S(r(b,m)).
Bimodule mtot_action_bimodule(const RRBBimodule& b);

/// m < n = l(m, S n), m > n = R(m).n, n < m = n.R(m), n > m = r(S n, m).
DendriformRepresentation induced_dendriform_representation(const RRBBimodule& b);

/// D --id--> D_Tot and E --id--> E_Tot built from a dendriform algebra and a
/// representation.
std::pair<RelativeRBAlgebra, RRBBimodule> dendriform_to_rrb(const DendriformAlgebra& d,
                                                            const DendriformRepresentation& e);

/// The inclusion x -> (0, x) of D into D_Tot + D, whose dendriform structure is
/// induced by R^(X, x) = (x, 0), checked as a dendriform morphism.
Report check_dendriform_embedding(const DendriformAlgebra& d);

/// Relative differential algebra: a derivation d: A -> M and delta: B -> N
/// with pairings l, r such that
///   delta(a.b) = a.delta(b) + l(d(a), b),  delta(b.a) = r(b, d(a)) + delta(b).a.
struct DifferentialPair {
    AssocAlgebra A;
    Bimodule M;
    LinearMap d;
    Bimodule B;
    Bimodule N;
    LinearMap delta;
    Multilinear l;
    Multilinear r;
};

Report check_differential_pair(const DifferentialPair& p);
/// R = d^-1 and S = delta^-1. Throws PreconditionError unless both d and delta
/// are invertible.
std::pair<RelativeRBAlgebra, RRBBimodule> invert_differential_pair(const DifferentialPair& p);

}  // namespace rrb
