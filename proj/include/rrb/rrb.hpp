#pragma once

#include <utility>

#include "rrb/algebra.hpp"
#include "rrb/dendriform.hpp"

namespace rrb {

/// Relative Rota-Baxter algebra M --R--> A: an algebra A, an A-bimodule M and
/// a linear map R: M -> A with R(m)R(m') = R(R(m)m' + mR(m')).
struct RelativeRBAlgebra {
    AssocAlgebra algebra;
    Bimodule module;
    LinearMap R;

    RelativeRBAlgebra() = default;
    RelativeRBAlgebra(AssocAlgebra a, Bimodule m, LinearMap r);

    std::size_t dim_a() const { return algebra.dim(); }
    std::size_t dim_m() const { return module.dim(); }

    /// Rota-Baxter algebra (A, R) seen as the relative one over the adjoint bimodule.
    static RelativeRBAlgebra from_rota_baxter(const AssocAlgebra& a, const LinearMap& r);

    friend bool operator==(const RelativeRBAlgebra& x, const RelativeRBAlgebra& y) {
        return x.algebra == y.algebra && x.module == y.module && x.R == y.R;
    }
};

/// The relative Rota-Baxter identity on all basis pairs of M.
Report check_relative_rb(const RelativeRBAlgebra& x);
/// Associativity, the bimodule identities and the relative Rota-Baxter identity.
Report check_relative_rb_full(const RelativeRBAlgebra& x);

/// Rota-Baxter identity R(a)R(b) = R(R(a)b + aR(b)) of weight zero.
Report check_rota_baxter(const AssocAlgebra& a, const LinearMap& r);

/// Rota-Baxter bimodule (M, R_M) over a Rota-Baxter algebra (A, R):
///   R(a).R_M(m) = R_M(R(a).m + a.R_M(m)),  R_M(m).R(a) = R_M(R_M(m).a + m.R(a)).
Report check_rb_bimodule(const AssocAlgebra& a, const LinearMap& r, const Bimodule& m, const LinearMap& rm);

/// Morphism (phi, psi) from M --R--> A to N' --S--> B'.
struct RRBMorphism {
    RelativeRBAlgebra source;
    RelativeRBAlgebra target;
    LinearMap phi;
    LinearMap psi;
};

/// The four morphism conditions, in the order: algebra morphism, left
/// intertwining, right intertwining, phi R = S psi. The first failing
/// condition is the first entry of the report.
Report check_morphism(const RRBMorphism& m);

/// Semidirect algebra A + M with R^(a, m) = (R(m), 0).
struct LiftedRB {
    AssocAlgebra algebra;
    LinearMap R;
};

LiftedRB lift_to_rb(const RelativeRBAlgebra& x);

/// Product m *_R m' = R(m)m' + mR(m') on M.
AssocAlgebra mtot_algebra(const RelativeRBAlgebra& x);

/// Dendriform structure m < m' = m.R(m'), m > m' = R(m).m' on M, its total
/// algebra, and the check that R: M_Tot -> A is an algebra morphism.
struct InducedDendriform {
    DendriformAlgebra dendriform;
    AssocAlgebra total;
    Report morphism;
};

InducedDendriform induced_dendriform(const RelativeRBAlgebra& x);

/// r = sum r[i][j] e_i (x) e_j over an algebra.
struct RMatrix {
    AssocAlgebra over;
    Matrix r;
};

/// r13 r12 - r12 r23 + r23 r13 = 0, reported per coordinate of A (x) A (x) A.
Report aybe_check(const RMatrix& r);
/// R(a) = sum r[i][j] e_i a e_j.
std::pair<AssocAlgebra, LinearMap> rb_from_r_matrix(const RMatrix& r);
/// R_M(m) = sum r[i][j] e_i . m . e_j.
LinearMap rb_bimodule_from_r_matrix(const RMatrix& r, const Bimodule& m);

/// Two-term complex A1 --d--> A0.
struct TwoTermComplex {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    LinearMap d;
};

/// End(A) = chain maps (f0, f1) with f0 d = d f1 under composition,
/// M = Hom(A0, ker d) with (f0, f1).phi = f1 phi and phi.(f0, f1) = phi f0,
/// R(phi) = (0, phi d). End(A) has the kernel basis of the chain-map
/// condition on coordinates (f0 row-major, then f1 row-major); M has the
/// basis E_ij of Hom(A0, ker d) in the kernel basis of d.
RelativeRBAlgebra endomorphism_rrb(const TwoTermComplex& c);

}  // namespace rrb
