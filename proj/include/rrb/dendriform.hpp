#pragma once

#include "rrb/algebra.hpp"

namespace rrb {

/// Dendriform algebra (D, prec, succ).
struct DendriformAlgebra {
    Multilinear prec;
    Multilinear succ;

    DendriformAlgebra() = default;
    DendriformAlgebra(Multilinear p, Multilinear s);

    std::size_t dim() const { return prec.out_dim(); }
    static DendriformAlgebra zero(std::size_t dim);

    friend bool operator==(const DendriformAlgebra&, const DendriformAlgebra&) = default;
};

/// Representation E of a dendriform algebra: the four actions
/// x < e, x > e (D x E -> E) and e < x, e > x (E x D -> E).
struct DendriformRepresentation {
    Multilinear prec_left;   // x < e
    Multilinear succ_left;   // x > e
    Multilinear prec_right;  // e < x
    Multilinear succ_right;  // e > x

    DendriformRepresentation() = default;
    DendriformRepresentation(Multilinear pl, Multilinear sl, Multilinear pr, Multilinear sr);

    std::size_t dim() const { return prec_left.out_dim(); }
    std::size_t alg_dim() const { return prec_left.in_dims()[0]; }

    static DendriformRepresentation zero(std::size_t alg_dim, std::size_t dim);
    static DendriformRepresentation adjoint(const DendriformAlgebra& d);

    friend bool operator==(const DendriformRepresentation&, const DendriformRepresentation&) = default;
};

/// The three dendriform axioms on basis triples:
///   (x<y)<z = x<(y<z + y>z),  (x>y)<z = x>(y<z),  (x<y + x>y)>z = x>(y>z).
Report check_dendriform(const DendriformAlgebra& d);

/// Associative algebra with product prec + succ.
AssocAlgebra total_algebra(const DendriformAlgebra& d);

/// The nine representation identities, obtained by placing E in each of the
/// three slots of each dendriform axiom (identity names carry the slot).
Report check_dendriform_representation(const DendriformAlgebra& d, const DendriformRepresentation& e);

/// Tot-bimodule on E with a.e = a<e + a>e and e.a = e<a + e>a.
Bimodule total_bimodule(const DendriformRepresentation& e);

/// Morphism check phi(x<y) = phi(x)<phi(y), phi(x>y) = phi(x)>phi(y).
Report check_dendriform_morphism(const DendriformAlgebra& src, const DendriformAlgebra& dst, const LinearMap& phi);

}  // namespace rrb
