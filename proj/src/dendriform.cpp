#include "rrb/dendriform.hpp"

#include "rrb/error.hpp"

namespace rrb {

namespace {

void require_bilinear(const Multilinear& m, std::size_t out, std::size_t in0, std::size_t in1, const char* what) {
    if (m.arity() != 2 || m.out_dim() != out || m.in_dims()[0] != in0 || m.in_dims()[1] != in1) {
        throw ShapeError(std::string(what) + " has the wrong shape");
    }
}

// Arguments of the generic identities are basis vectors tagged with the space
// they live in; the products dispatch on the tags so that every axiom is
// written once and instantiated with the representation in any slot.
struct Tagged {
    Vec v;
    bool rep = false;
};

struct Dispatch {
    const DendriformAlgebra& d;
    const DendriformRepresentation* e;

    Tagged prec(const Tagged& x, const Tagged& y) const { return apply(x, y, true); }
    Tagged succ(const Tagged& x, const Tagged& y) const { return apply(x, y, false); }

    Tagged apply(const Tagged& x, const Tagged& y, bool is_prec) const {
        if (x.rep && y.rep) throw InternalError("dendriform identity multiplies two representation elements");
        if (!x.rep && !y.rep) return {(is_prec ? d.prec : d.succ)(x.v, y.v), false};
        if (y.rep) return {(is_prec ? e->prec_left : e->succ_left)(x.v, y.v), true};
        return {(is_prec ? e->prec_right : e->succ_right)(x.v, y.v), true};
    }
};

Tagged operator+(const Tagged& a, const Tagged& b) { return {a.v + b.v, a.rep || b.rep}; }

using Axiom = std::pair<Vec, Vec> (*)(const Dispatch&, const Tagged&, const Tagged&, const Tagged&);

std::pair<Vec, Vec> axiom1(const Dispatch& o, const Tagged& x, const Tagged& y, const Tagged& z) {
    return {o.prec(o.prec(x, y), z).v, o.prec(x, o.prec(y, z) + o.succ(y, z)).v};
}

std::pair<Vec, Vec> axiom2(const Dispatch& o, const Tagged& x, const Tagged& y, const Tagged& z) {
    return {o.prec(o.succ(x, y), z).v, o.succ(x, o.prec(y, z)).v};
}

std::pair<Vec, Vec> axiom3(const Dispatch& o, const Tagged& x, const Tagged& y, const Tagged& z) {
    return {o.succ(o.prec(x, y) + o.succ(x, y), z).v, o.succ(x, o.succ(y, z)).v};
}

constexpr Axiom kAxioms[3] = {axiom1, axiom2, axiom3};
constexpr const char* kAxiomNames[3] = {"(x<y)<z = x<(y<z + y>z)", "(x>y)<z = x>(y<z)",
                                        "(x<y + x>y)>z = x>(y>z)"};

}  // namespace

DendriformAlgebra::DendriformAlgebra(Multilinear p, Multilinear s) : prec(std::move(p)), succ(std::move(s)) {
    const std::size_t n = prec.out_dim();
    require_bilinear(prec, n, n, n, "dendriform product <");
    require_bilinear(succ, n, n, n, "dendriform product >");
}

DendriformAlgebra DendriformAlgebra::zero(std::size_t dim) {
    return DendriformAlgebra(Multilinear(dim, {dim, dim}), Multilinear(dim, {dim, dim}));
}

DendriformRepresentation::DendriformRepresentation(Multilinear pl, Multilinear sl, Multilinear pr, Multilinear sr)
    : prec_left(std::move(pl)), succ_left(std::move(sl)), prec_right(std::move(pr)), succ_right(std::move(sr)) {
    const std::size_t e = prec_left.out_dim();
    const std::size_t n = prec_left.arity() == 2 ? prec_left.in_dims()[0] : 0;
    require_bilinear(prec_left, e, n, e, "representation action x < e");
    require_bilinear(succ_left, e, n, e, "representation action x > e");
    require_bilinear(prec_right, e, e, n, "representation action e < x");
    require_bilinear(succ_right, e, e, n, "representation action e > x");
}

DendriformRepresentation DendriformRepresentation::zero(std::size_t alg_dim, std::size_t dim) {
    return DendriformRepresentation(Multilinear(dim, {alg_dim, dim}), Multilinear(dim, {alg_dim, dim}),
                                    Multilinear(dim, {dim, alg_dim}), Multilinear(dim, {dim, alg_dim}));
}

DendriformRepresentation DendriformRepresentation::adjoint(const DendriformAlgebra& d) {
    return DendriformRepresentation(d.prec, d.succ, d.prec, d.succ);
}

Report check_dendriform(const DendriformAlgebra& d) {
    Report rep;
    const std::size_t n = d.dim();
    Dispatch ops{d, nullptr};
    for (int ax = 0; ax < 3; ++ax) {
        check_identity(rep, kAxiomNames[ax], {n, n, n}, [&](const auto& t) {
            return kAxioms[ax](ops, {unit_vec(n, t[0])}, {unit_vec(n, t[1])}, {unit_vec(n, t[2])});
        });
    }
    return rep;
}

AssocAlgebra total_algebra(const DendriformAlgebra& d) { return AssocAlgebra(d.prec + d.succ); }

Report check_dendriform_representation(const DendriformAlgebra& d, const DendriformRepresentation& e) {
    if (e.alg_dim() != d.dim()) throw ShapeError("representation is over a dendriform algebra of another dimension");
    Report rep;
    const std::size_t n = d.dim();
    const std::size_t m = e.dim();
    Dispatch ops{d, &e};
    static const char* kSlot[3] = {" [E in slot 1]", " [E in slot 2]", " [E in slot 3]"};
    for (int ax = 0; ax < 3; ++ax) {
        for (int slot = 0; slot < 3; ++slot) {
            std::vector<std::size_t> dims{n, n, n};
            dims[slot] = m;
            check_identity(rep, std::string(kAxiomNames[ax]) + kSlot[slot], dims, [&](const auto& t) {
                Tagged args[3];
                for (int p = 0; p < 3; ++p) args[p] = {unit_vec(dims[p], t[p]), p == slot};
                return kAxioms[ax](ops, args[0], args[1], args[2]);
            });
        }
    }
    return rep;
}

Bimodule total_bimodule(const DendriformRepresentation& e) {
    return Bimodule(e.prec_left + e.succ_left, e.prec_right + e.succ_right);
}

Report check_dendriform_morphism(const DendriformAlgebra& src, const DendriformAlgebra& dst, const LinearMap& phi) {
    if (phi.rows() != dst.dim() || phi.cols() != src.dim()) throw ShapeError("dendriform morphism has wrong shape");
    Report rep;
    const std::size_t n = src.dim();
    check_identity(rep, "phi(x<y) = phi(x)<phi(y)", {n, n}, [&](const auto& t) {
        Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]);
        return std::pair{phi * src.prec(x, y), dst.prec(phi * x, phi * y)};
    });
    check_identity(rep, "phi(x>y) = phi(x)>phi(y)", {n, n}, [&](const auto& t) {
        Vec x = unit_vec(n, t[0]), y = unit_vec(n, t[1]);
        return std::pair{phi * src.succ(x, y), dst.succ(phi * x, phi * y)};
    });
    return rep;
}

}  // namespace rrb
