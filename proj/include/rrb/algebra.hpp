#pragma once

#include <string>
#include <vector>

#include "rrb/multilinear.hpp"
#include "rrb/report.hpp"

namespace rrb {

/// Finite-dimensional associative algebra given by structure constants
/// mu: A x A -> A.
struct AssocAlgebra {
    Multilinear mu;
    std::vector<std::string> basis_names;

    AssocAlgebra() = default;
    explicit AssocAlgebra(Multilinear m, std::vector<std::string> names = {});

    std::size_t dim() const { return mu.out_dim(); }
    Vec mul(const Vec& x, const Vec& y) const { return mu(x, y); }

    static AssocAlgebra zero(std::size_t dim);

    friend bool operator==(const AssocAlgebra& a, const AssocAlgebra& b) { return a.mu == b.mu; }
};

/// Bimodule over an algebra of dimension `alg_dim`, given by the left action
/// A x M -> M and the right action M x A -> M. The algebra itself is passed
/// alongside wherever it matters.
struct Bimodule {
    Multilinear left;
    Multilinear right;
    std::vector<std::string> basis_names;

    Bimodule() = default;
    Bimodule(Multilinear l, Multilinear r, std::vector<std::string> names = {});

    std::size_t dim() const { return left.out_dim(); }
    std::size_t alg_dim() const { return left.in_dims()[0]; }
    Vec act_left(const Vec& a, const Vec& m) const { return left(a, m); }
    Vec act_right(const Vec& m, const Vec& a) const { return right(m, a); }

    static Bimodule zero(std::size_t alg_dim, std::size_t dim);
    static Bimodule adjoint(const AssocAlgebra& a);

    friend bool operator==(const Bimodule& a, const Bimodule& b) {
        return a.left == b.left && a.right == b.right;
    }
};

Report check_associativity(const AssocAlgebra& a);
/// The three bimodule identities. Throws ShapeError on dimension mismatch.
Report check_bimodule(const AssocAlgebra& a, const Bimodule& m);

/// Dual bimodule on M*: (a.f)(x) = f(x.a) and (f.a)(x) = f(a.x), in the dual basis.
Bimodule dual_bimodule(const Bimodule& m);

/// Semidirect product A + M with (a,m)(a',m') = (aa', am' + ma'); A-basis first.
AssocAlgebra semidirect_algebra(const AssocAlgebra& a, const Bimodule& m);

/// Algebra morphism check phi(xy) = phi(x)phi(y) for phi: A -> A'.
Report check_algebra_morphism(const AssocAlgebra& src, const AssocAlgebra& dst, const LinearMap& phi);

/// Pull back an A'-bimodule along an algebra map phi: A -> A'.
Bimodule pullback_bimodule(const Bimodule& m, const LinearMap& phi);

}  // namespace rrb
