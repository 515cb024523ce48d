#include "rrb/algebra.hpp"

#include "rrb/error.hpp"

namespace rrb {

AssocAlgebra::AssocAlgebra(Multilinear m, std::vector<std::string> names)
    : mu(std::move(m)), basis_names(std::move(names)) {
    if (mu.arity() != 2 || mu.in_dims()[0] != mu.out_dim() || mu.in_dims()[1] != mu.out_dim()) {
        throw ShapeError("algebra multiplication must be a bilinear map A x A -> A");
    }
}

AssocAlgebra AssocAlgebra::zero(std::size_t dim) { return AssocAlgebra(Multilinear(dim, {dim, dim})); }

Bimodule::Bimodule(Multilinear l, Multilinear r, std::vector<std::string> names)
    : left(std::move(l)), right(std::move(r)), basis_names(std::move(names)) {
    if (left.arity() != 2 || right.arity() != 2) throw ShapeError("bimodule actions must be bilinear");
    const std::size_t m = left.out_dim();
    const std::size_t a = left.in_dims()[0];
    if (left.in_dims()[1] != m || right.out_dim() != m || right.in_dims()[0] != m || right.in_dims()[1] != a) {
        throw ShapeError("bimodule actions must have shapes A x M -> M and M x A -> M");
    }
}

Bimodule Bimodule::zero(std::size_t alg_dim, std::size_t dim) {
    return Bimodule(Multilinear(dim, {alg_dim, dim}), Multilinear(dim, {dim, alg_dim}));
}

Bimodule Bimodule::adjoint(const AssocAlgebra& a) { return Bimodule(a.mu, a.mu, a.basis_names); }

namespace {

std::vector<Vec> units(std::size_t n) {
    std::vector<Vec> u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(unit_vec(n, i));
    return u;
}

}  // namespace

Report check_associativity(const AssocAlgebra& a) {
    Report rep;
    const auto e = units(a.dim());
    const std::size_t n = a.dim();
    check_identity(rep, "associativity", {n, n, n}, [&](const auto& t) {
        return std::pair{a.mul(a.mul(e[t[0]], e[t[1]]), e[t[2]]), a.mul(e[t[0]], a.mul(e[t[1]], e[t[2]]))};
    });
    return rep;
}

Report check_bimodule(const AssocAlgebra& a, const Bimodule& m) {
    if (m.alg_dim() != a.dim()) throw ShapeError("bimodule is over an algebra of a different dimension");
    Report rep;
    const auto ea = units(a.dim());
    const auto em = units(m.dim());
    const std::size_t na = a.dim();
    const std::size_t nm = m.dim();
    check_identity(rep, "(aa')m = a(a'm)", {na, na, nm}, [&](const auto& t) {
        return std::pair{m.act_left(a.mul(ea[t[0]], ea[t[1]]), em[t[2]]),
                         m.act_left(ea[t[0]], m.act_left(ea[t[1]], em[t[2]]))};
    });
    check_identity(rep, "(am)a' = a(ma')", {na, nm, na}, [&](const auto& t) {
        return std::pair{m.act_right(m.act_left(ea[t[0]], em[t[1]]), ea[t[2]]),
                         m.act_left(ea[t[0]], m.act_right(em[t[1]], ea[t[2]]))};
    });
    check_identity(rep, "(ma)a' = m(aa')", {nm, na, na}, [&](const auto& t) {
        return std::pair{m.act_right(m.act_right(em[t[0]], ea[t[1]]), ea[t[2]]),
                         m.act_right(em[t[0]], a.mul(ea[t[1]], ea[t[2]]))};
    });
    return rep;
}

Bimodule dual_bimodule(const Bimodule& m) {
    const std::size_t na = m.alg_dim();
    const std::size_t nm = m.dim();
    Multilinear left(nm, {na, nm});
    Multilinear right(nm, {nm, na});
    // (e_i . f_j)(e_k) = f_j(e_k . e_i);  (f_j . e_i)(e_k) = f_j(e_i . e_k)
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nm; ++j) {
            for (std::size_t k = 0; k < nm; ++k) {
                left.at(k, {i, j}) = m.right.at(j, {k, i});
                right.at(k, {j, i}) = m.left.at(j, {i, k});
            }
        }
    }
    std::vector<std::string> names;
    for (const auto& s : m.basis_names) names.push_back(s + "*");
    return Bimodule(std::move(left), std::move(right), std::move(names));
}

AssocAlgebra semidirect_algebra(const AssocAlgebra& a, const Bimodule& m) {
    if (m.alg_dim() != a.dim()) throw ShapeError("semidirect product: bimodule over a different algebra");
    const std::size_t na = a.dim();
    const std::size_t nm = m.dim();
    const std::size_t n = na + nm;
    Multilinear mu(n, {n, n});
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            for (std::size_t o = 0; o < na; ++o) mu.at(o, {i, j}) = a.mu.at(o, {i, j});
        }
        for (std::size_t j = 0; j < nm; ++j) {
            for (std::size_t o = 0; o < nm; ++o) {
                mu.at(na + o, {i, na + j}) = m.left.at(o, {i, j});
                mu.at(na + o, {na + j, i}) = m.right.at(o, {j, i});
            }
        }
    }
    std::vector<std::string> names = a.basis_names;
    names.insert(names.end(), m.basis_names.begin(), m.basis_names.end());
    if (names.size() != n) names.clear();
    return AssocAlgebra(std::move(mu), std::move(names));
}

Report check_algebra_morphism(const AssocAlgebra& src, const AssocAlgebra& dst, const LinearMap& phi) {
    if (phi.rows() != dst.dim() || phi.cols() != src.dim()) throw ShapeError("algebra morphism has wrong shape");
    Report rep;
    const auto e = units(src.dim());
    const std::size_t n = src.dim();
    check_identity(rep, "phi(xy) = phi(x)phi(y)", {n, n}, [&](const auto& t) {
        return std::pair{phi * src.mul(e[t[0]], e[t[1]]), dst.mul(phi * e[t[0]], phi * e[t[1]])};
    });
    return rep;
}

Bimodule pullback_bimodule(const Bimodule& m, const LinearMap& phi) {
    if (phi.rows() != m.alg_dim()) throw ShapeError("pullback: map does not land in the acting algebra");
    const std::size_t nm = m.dim();
    return Bimodule(m.left.precompose({phi, Matrix::identity(nm)}), m.right.precompose({Matrix::identity(nm), phi}),
                    m.basis_names);
}

}  // namespace rrb
