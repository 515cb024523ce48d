#include "rrb/rrb_bimodule.hpp"

#include "rrb/error.hpp"
#include "rrb/linalg.hpp"

namespace rrb {

namespace {

void require_bilinear(const Multilinear& f, std::size_t out, std::size_t in0, std::size_t in1, const char* what) {
    if (f.arity() != 2 || f.out_dim() != out || f.in_dims()[0] != in0 || f.in_dims()[1] != in1) {
        throw ShapeError(std::string(what) + " has the wrong shape");
    }
}

Matrix id(std::size_t n) { return Matrix::identity(n); }

}  // namespace

RRBBimodule::RRBBimodule(RelativeRBAlgebra x, Bimodule b, Bimodule n, LinearMap s, Multilinear lp, Multilinear rp)
    : over(std::move(x)), B(std::move(b)), N(std::move(n)), S(std::move(s)), l(std::move(lp)), r(std::move(rp)) {
    const std::size_t na = over.dim_a(), nm = over.dim_m();
    if (B.alg_dim() != na || N.alg_dim() != na) throw ShapeError("B and N must be bimodules over A");
    if (S.rows() != B.dim() || S.cols() != N.dim()) throw ShapeError("operator S: N -> B has the wrong shape");
    require_bilinear(l, N.dim(), nm, B.dim(), "pairing l: M x B -> N");
    require_bilinear(r, N.dim(), B.dim(), nm, "pairing r: B x M -> N");
}

RRBBimodule RRBBimodule::zero(const RelativeRBAlgebra& x, std::size_t dim_b, std::size_t dim_n) {
    return RRBBimodule(x, Bimodule::zero(x.dim_a(), dim_b), Bimodule::zero(x.dim_a(), dim_n), Matrix(dim_b, dim_n),
                       Multilinear(dim_n, {x.dim_m(), dim_b}), Multilinear(dim_n, {dim_b, x.dim_m()}));
}

Report check_pairings(const RRBBimodule& bm) {
    const auto& M = bm.over.module;
    const std::size_t na = bm.over.dim_a(), nm = bm.over.dim_m(), nb = bm.dim_b();
    Report rep;
    auto ea = [&](std::size_t i) { return unit_vec(na, i); };
    auto em = [&](std::size_t i) { return unit_vec(nm, i); };
    auto eb = [&](std::size_t i) { return unit_vec(nb, i); };
    check_identity(rep, "l(a.m, b) = a.l(m, b)", {na, nm, nb}, [&](const auto& t) {
        return std::pair{bm.l(M.act_left(ea(t[0]), em(t[1])), eb(t[2])),
                         bm.N.act_left(ea(t[0]), bm.l(em(t[1]), eb(t[2])))};
    });
    check_identity(rep, "l(m.a, b) = l(m, a.b)", {nm, na, nb}, [&](const auto& t) {
        return std::pair{bm.l(M.act_right(em(t[0]), ea(t[1])), eb(t[2])),
                         bm.l(em(t[0]), bm.B.act_left(ea(t[1]), eb(t[2])))};
    });
    check_identity(rep, "l(m, b.a) = l(m, b).a", {nm, nb, na}, [&](const auto& t) {
        return std::pair{bm.l(em(t[0]), bm.B.act_right(eb(t[1]), ea(t[2]))),
                         bm.N.act_right(bm.l(em(t[0]), eb(t[1])), ea(t[2]))};
    });
    check_identity(rep, "r(a.b, m) = a.r(b, m)", {na, nb, nm}, [&](const auto& t) {
        return std::pair{bm.r(bm.B.act_left(ea(t[0]), eb(t[1])), em(t[2])),
                         bm.N.act_left(ea(t[0]), bm.r(eb(t[1]), em(t[2])))};
    });
    check_identity(rep, "r(b.a, m) = r(b, a.m)", {nb, na, nm}, [&](const auto& t) {
        return std::pair{bm.r(bm.B.act_right(eb(t[0]), ea(t[1])), em(t[2])),
                         bm.r(eb(t[0]), M.act_left(ea(t[1]), em(t[2])))};
    });
    check_identity(rep, "r(b, m.a) = r(b, m).a", {nb, nm, na}, [&](const auto& t) {
        return std::pair{bm.r(eb(t[0]), M.act_right(em(t[1]), ea(t[2]))),
                         bm.N.act_right(bm.r(eb(t[0]), em(t[1])), ea(t[2]))};
    });
    return rep;
}

Report check_operator_identities(const RRBBimodule& bm) {
    const auto& R = bm.over.R;
    const std::size_t nm = bm.over.dim_m(), nn = bm.dim_n();
    Report rep;
    check_identity(rep, "R(m).S(n) = S(R(m).n + l(m, S n))", {nm, nn}, [&](const auto& t) {
        Vec m = unit_vec(nm, t[0]), n = unit_vec(nn, t[1]);
        Vec rm = R * m, sn = bm.S * n;
        return std::pair{bm.B.act_left(rm, sn), bm.S * (bm.N.act_left(rm, n) + bm.l(m, sn))};
    });
    check_identity(rep, "S(n).R(m) = S(r(S n, m) + n.R(m))", {nn, nm}, [&](const auto& t) {
        Vec n = unit_vec(nn, t[0]), m = unit_vec(nm, t[1]);
        Vec rm = R * m, sn = bm.S * n;
        return std::pair{bm.B.act_right(sn, rm), bm.S * (bm.r(sn, m) + bm.N.act_right(n, rm))};
    });
    return rep;
}

Report check_rrb_bimodule(const RRBBimodule& b) {
    Report rep = check_pairings(b);
    rep.merge(check_operator_identities(b));
    return rep;
}

Report check_rrb_bimodule_full(const RRBBimodule& b) {
    Report rep = check_relative_rb_full(b.over);
    rep.merge(check_bimodule(b.over.algebra, b.B), "B");
    rep.merge(check_bimodule(b.over.algebra, b.N), "N");
    rep.merge(check_rrb_bimodule(b));
    return rep;
}

RRBBimodule adjoint_bimodule(const RelativeRBAlgebra& x) {
    return RRBBimodule(x, Bimodule::adjoint(x.algebra), x.module, x.R, x.module.right, x.module.left);
}

RRBBimodule dual_rrb_bimodule(const RRBBimodule& b) {
    const std::size_t nm = b.over.dim_m(), nb = b.dim_b(), nn = b.dim_n();
    // New B = N*, new N = B*.
    Multilinear l(nb, {nm, nn});
    Multilinear r(nb, {nn, nm});
    for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t i = 0; i < nm; ++i) {
            for (std::size_t j = 0; j < nn; ++j) {
                // l'(m_i, f_j)(b_k) = f_j(r(b_k, m_i));  r'(f_j, m_i)(b_k) = f_j(l(m_i, b_k))
                l.at(k, {i, j}) = b.r.at(j, {k, i});
                r.at(k, {j, i}) = b.l.at(j, {i, k});
            }
        }
    }
    return RRBBimodule(b.over, dual_bimodule(b.N), dual_bimodule(b.B), Rational(-1) * b.S.transpose(), std::move(l),
                       std::move(r));
}

RRBBimodule coadjoint_bimodule(const RelativeRBAlgebra& x) { return dual_rrb_bimodule(adjoint_bimodule(x)); }

RRBBimodule morphism_induced_bimodule(const RRBMorphism& m) {
    const auto& t = m.target;
    if (m.phi.rows() != t.dim_a() || m.phi.cols() != m.source.dim_a() || m.psi.rows() != t.dim_m() ||
        m.psi.cols() != m.source.dim_m()) {
        throw ShapeError("morphism maps have the wrong shape");
    }
    const std::size_t ta = t.dim_a();
    Bimodule b = pullback_bimodule(Bimodule::adjoint(t.algebra), m.phi);
    Bimodule n = pullback_bimodule(t.module, m.phi);
    Multilinear l = t.module.right.precompose({m.psi, id(ta)});
    Multilinear r = t.module.left.precompose({id(ta), m.psi});
    return RRBBimodule(m.source, std::move(b), std::move(n), t.R, std::move(l), std::move(r));
}

RelativeRBAlgebra semidirect_rrb(const RRBBimodule& b) {
    const auto& x = b.over;
    const std::size_t na = x.dim_a(), nm = x.dim_m(), nb = b.dim_b(), nn = b.dim_n();
    Multilinear left(nm + nn, {na + nb, nm + nn});
    add_block(left, 0, {0, 0}, x.module.left);
    add_block(left, nm, {0, nm}, b.N.left);
    add_block(left, nm, {na, 0}, b.r);
    Multilinear right(nm + nn, {nm + nn, na + nb});
    add_block(right, 0, {0, 0}, x.module.right);
    add_block(right, nm, {0, na}, b.l);
    add_block(right, nm, {nm, 0}, b.N.right);
    LinearMap op(na + nb, nm + nn);
    op.set_block(0, 0, x.R);
    op.set_block(na, nm, b.S);
    return RelativeRBAlgebra(semidirect_algebra(x.algebra, b.B), Bimodule(std::move(left), std::move(right)),
                             std::move(op));
}

LiftedBimodule lift_bimodule(const RRBBimodule& b) {
    Report pairings = check_pairings(b);
    if (!pairings) throw PreconditionError("lift_bimodule: pairing identity fails: " + pairings.first_failure());
    const auto& x = b.over;
    const std::size_t na = x.dim_a(), nb = b.dim_b(), nn = b.dim_n();
    const std::size_t nm = x.dim_m();
    Multilinear left(nb + nn, {na + nm, nb + nn});
    add_block(left, 0, {0, 0}, b.B.left);
    add_block(left, nb, {0, nb}, b.N.left);
    add_block(left, nb, {na, 0}, b.l);
    Multilinear right(nb + nn, {nb + nn, na + nm});
    add_block(right, 0, {0, 0}, b.B.right);
    add_block(right, nb, {0, na}, b.r);
    add_block(right, nb, {nb, 0}, b.N.right);
    LinearMap s(nb + nn, nb + nn);
    s.set_block(0, nb, b.S);
    return {lift_to_rb(x), Bimodule(std::move(left), std::move(right)), std::move(s)};
}

Report check_lifted(const LiftedBimodule& lb) {
    Report rep;
    rep.merge(check_bimodule(lb.base.algebra, lb.module), "bimodule");
    rep.merge(check_rb_bimodule(lb.base.algebra, lb.base.R, lb.module, lb.S));
    return rep;
}

Bimodule mtot_action_bimodule(const RRBBimodule& b) {
    const auto& R = b.over.R;
    const std::size_t nb = b.dim_b();
    Multilinear left = b.B.left.precompose({R, id(nb)}) - b.l.then(b.S);
    Multilinear right = b.B.right.precompose({id(nb), R}) - b.r.then(b.S);
    return Bimodule(std::move(left), std::move(right), b.B.basis_names);
}

DendriformRepresentation induced_dendriform_representation(const RRBBimodule& b) {
    const auto& R = b.over.R;
    const std::size_t nm = b.over.dim_m(), nn = b.dim_n();
    return DendriformRepresentation(b.l.precompose({id(nm), b.S}), b.N.left.precompose({R, id(nn)}),
                                    b.N.right.precompose({id(nn), R}), b.r.precompose({b.S, id(nm)}));
}

std::pair<RelativeRBAlgebra, RRBBimodule> dendriform_to_rrb(const DendriformAlgebra& d,
                                                            const DendriformRepresentation& e) {
    if (e.alg_dim() != d.dim()) throw ShapeError("representation is over a dendriform algebra of another dimension");
    RelativeRBAlgebra x(total_algebra(d), Bimodule(d.succ, d.prec), id(d.dim()));
    RRBBimodule b(x, total_bimodule(e), Bimodule(e.succ_left, e.prec_right), id(e.dim()), e.prec_left, e.succ_right);
    return {std::move(x), std::move(b)};
}

Report check_dendriform_embedding(const DendriformAlgebra& d) {
    const std::size_t n = d.dim();
    RelativeRBAlgebra x(total_algebra(d), Bimodule(d.succ, d.prec), id(n));
    LiftedRB lifted = lift_to_rb(x);
    InducedDendriform big = induced_dendriform(RelativeRBAlgebra::from_rota_baxter(lifted.algebra, lifted.R));
    LinearMap incl(2 * n, n);
    incl.set_block(n, 0, id(n));
    return check_dendriform_morphism(d, big.dendriform, incl);
}

Report check_differential_pair(const DifferentialPair& p) {
    const std::size_t na = p.A.dim(), nm = p.M.dim(), nb = p.B.dim(), nn = p.N.dim();
    if (p.d.rows() != nm || p.d.cols() != na) throw ShapeError("derivation d: A -> M has the wrong shape");
    if (p.delta.rows() != nn || p.delta.cols() != nb) throw ShapeError("map delta: B -> N has the wrong shape");
    Report rep;
    rep.merge(check_associativity(p.A), "A");
    rep.merge(check_bimodule(p.A, p.M), "M");
    rep.merge(check_bimodule(p.A, p.B), "B");
    rep.merge(check_bimodule(p.A, p.N), "N");
    RRBBimodule shell(RelativeRBAlgebra(p.A, p.M, Matrix(na, nm)), p.B, p.N, Matrix(nb, nn), p.l, p.r);
    rep.merge(check_pairings(shell));
    check_identity(rep, "d(ab) = a.d(b) + d(a).b", {na, na}, [&](const auto& t) {
        Vec a = unit_vec(na, t[0]), c = unit_vec(na, t[1]);
        return std::pair{p.d * p.A.mul(a, c), p.M.act_left(a, p.d * c) + p.M.act_right(p.d * a, c)};
    });
    check_identity(rep, "delta(a.b) = a.delta(b) + l(d(a), b)", {na, nb}, [&](const auto& t) {
        Vec a = unit_vec(na, t[0]), b = unit_vec(nb, t[1]);
        return std::pair{p.delta * p.B.act_left(a, b), p.N.act_left(a, p.delta * b) + p.l(p.d * a, b)};
    });
    check_identity(rep, "delta(b.a) = r(b, d(a)) + delta(b).a", {nb, na}, [&](const auto& t) {
        Vec b = unit_vec(nb, t[0]), a = unit_vec(na, t[1]);
        return std::pair{p.delta * p.B.act_right(b, a), p.r(b, p.d * a) + p.N.act_right(p.delta * b, a)};
    });
    return rep;
}

std::pair<RelativeRBAlgebra, RRBBimodule> invert_differential_pair(const DifferentialPair& p) {
    if (p.d.rows() != p.d.cols()) throw PreconditionError("derivation d is not square, so it is not invertible");
    if (p.delta.rows() != p.delta.cols()) throw PreconditionError("map delta is not square, so it is not invertible");
    if (rank(p.d) != p.d.rows()) throw PreconditionError("derivation d is singular");
    if (rank(p.delta) != p.delta.rows()) throw PreconditionError("map delta is singular");
    RelativeRBAlgebra x(p.A, p.M, inverse(p.d));
    RRBBimodule b(x, p.B, p.N, inverse(p.delta), p.l, p.r);
    return {std::move(x), std::move(b)};
}

}  // namespace rrb
