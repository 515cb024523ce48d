#include "rrb/extensions.hpp"

#include "rrb/error.hpp"
#include "rrb/linalg.hpp"

namespace rrb {

namespace {

// The unique x with inj x = v for an injective map, or PreconditionError.
Vec preimage(const LinearMap& inj, const Vec& v, const char* what) {
    auto x = solve(inj, v);
    if (!x) throw PreconditionError(std::string(what) + " does not lie in the fiber");
    return *x;
}

void require_equal(Report& rep, const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        rep.add(name, {}, Vec{Rational(static_cast<long long>(lhs.rows())), Rational(static_cast<long long>(lhs.cols()))},
                Vec{Rational(static_cast<long long>(rhs.rows())), Rational(static_cast<long long>(rhs.cols()))});
        return;
    }
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
        if (lhs.column(j) != rhs.column(j)) rep.add(name, {j}, lhs.column(j), rhs.column(j));
    }
}

void require_dim(Report& rep, const std::string& name, std::size_t actual, std::size_t expected) {
    if (actual != expected) {
        rep.add(name, {}, Vec{Rational(static_cast<long long>(actual))}, Vec{Rational(static_cast<long long>(expected))});
    }
}

void require_rank(Report& rep, const std::string& name, const Matrix& m, std::size_t expected) {
    require_dim(rep, name, rank(m), expected);
}

Matrix stacked_inclusion(std::size_t head, std::size_t tail) {
    Matrix m(head + tail, tail);
    m.set_block(head, 0, Matrix::identity(tail));
    return m;
}

Matrix projection(std::size_t head, std::size_t tail) {
    Matrix m(head, head + tail);
    m.set_block(0, 0, Matrix::identity(head));
    return m;
}

}  // namespace

RelativeRBAlgebra fiber_algebra(const AbelianExtension& e) {
    return RelativeRBAlgebra(AssocAlgebra::zero(e.dim_b), Bimodule::zero(e.dim_b, e.dim_n), e.S);
}

Report check_extension(const AbelianExtension& e) {
    Report rep;
    const std::size_t ta = e.total.dim_a(), tm = e.total.dim_m();
    const std::size_t na = e.base.dim_a(), nm = e.base.dim_m();
    if (e.i.rows() != ta || e.i.cols() != e.dim_b || e.ibar.rows() != tm || e.ibar.cols() != e.dim_n ||
        e.p.rows() != na || e.p.cols() != ta || e.pbar.rows() != nm || e.pbar.cols() != tm) {
        throw ShapeError("extension structure maps have inconsistent shapes");
    }
    rep.merge(check_relative_rb_full(e.total), "total");
    require_rank(rep, "i is injective", e.i, e.dim_b);
    require_rank(rep, "p is surjective", e.p, na);
    require_equal(rep, "p i = 0", e.p * e.i, Matrix(na, e.dim_b));
    require_dim(rep, "dim A^ = dim B + dim A", ta, e.dim_b + na);
    require_rank(rep, "ibar is injective", e.ibar, e.dim_n);
    require_rank(rep, "pbar is surjective", e.pbar, nm);
    require_equal(rep, "pbar ibar = 0", e.pbar * e.ibar, Matrix(nm, e.dim_n));
    require_dim(rep, "dim M^ = dim N + dim M", tm, e.dim_n + nm);
    rep.merge(check_morphism({fiber_algebra(e), e.total, e.i, e.ibar}), "inclusion");
    rep.merge(check_morphism({e.total, e.base, e.p, e.pbar}), "projection");
    return rep;
}

Report check_section(const AbelianExtension& e, const Section& sec) {
    Report rep;
    require_equal(rep, "p s = id", e.p * sec.s, Matrix::identity(e.base.dim_a()));
    require_equal(rep, "pbar sbar = id", e.pbar * sec.sbar, Matrix::identity(e.base.dim_m()));
    return rep;
}

Section canonical_section(const AbelianExtension& e) {
    const std::size_t na = e.base.dim_a(), nm = e.base.dim_m();
    Section sec{Matrix(e.total.dim_a(), na), Matrix(e.total.dim_m(), nm)};
    for (std::size_t j = 0; j < na; ++j) {
        auto x = solve(e.p, unit_vec(na, j));
        if (!x) throw PreconditionError("p is not surjective");
        sec.s.set_column(j, *x);
    }
    for (std::size_t j = 0; j < nm; ++j) {
        auto x = solve(e.pbar, unit_vec(nm, j));
        if (!x) throw PreconditionError("pbar is not surjective");
        sec.sbar.set_column(j, *x);
    }
    return sec;
}

AbelianExtension build_extension(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c) {
    if (c.k != 2) throw ShapeError("an extension is built from a degree-2 cochain");
    const RRBCochain dc = rrb_differential(x, b, c);
    if (!dc.alpha.is_zero()) throw PreconditionError("not a 2-cocycle: delta_AB alpha != 0");
    for (const auto& bj : dc.beta) {
        if (!bj.is_zero()) throw PreconditionError("not a 2-cocycle: delta^alpha beta != 0");
    }
    if (!dc.gamma.is_zero()) throw PreconditionError("not a 2-cocycle: delta_MB gamma + h_R != 0");

    const std::size_t na = x.dim_a(), nm = x.dim_m(), nb = b.dim_b(), nn = b.dim_n();
    Multilinear mu(na + nb, {na + nb, na + nb});
    add_block(mu, 0, {0, 0}, x.algebra.mu);
    add_block(mu, na, {0, na}, b.B.left);
    add_block(mu, na, {na, 0}, b.B.right);
    add_block(mu, na, {0, 0}, c.alpha);

    Multilinear left(nm + nn, {na + nb, nm + nn}), right(nm + nn, {nm + nn, na + nb});
    add_block(left, 0, {0, 0}, x.module.left);
    add_block(left, nm, {0, nm}, b.N.left);
    add_block(left, nm, {na, 0}, b.r);
    add_block(left, nm, {0, 0}, c.beta[1]);
    add_block(right, 0, {0, 0}, x.module.right);
    add_block(right, nm, {0, na}, b.l);
    add_block(right, nm, {nm, 0}, b.N.right);
    add_block(right, nm, {0, 0}, c.beta[0]);

    LinearMap rhat(na + nb, nm + nn);
    rhat.set_block(0, 0, x.R);
    rhat.set_block(na, nm, b.S);
    rhat.set_block(na, 0, c.gamma.matrix());

    AbelianExtension e;
    e.base = x;
    e.dim_b = nb;
    e.dim_n = nn;
    e.S = b.S;
    e.total = RelativeRBAlgebra(AssocAlgebra(std::move(mu)), Bimodule(std::move(left), std::move(right)), rhat);
    e.i = stacked_inclusion(na, nb);
    e.ibar = stacked_inclusion(nm, nn);
    e.p = projection(na, nb);
    e.pbar = projection(nm, nn);
    return e;
}

RRBBimodule induced_fiber_bimodule(const AbelianExtension& e, const Section& sec) {
    if (!check_section(e, sec).ok()) throw PreconditionError("not a section of the extension");
    const std::size_t na = e.base.dim_a(), nm = e.base.dim_m(), nb = e.dim_b, nn = e.dim_n;
    const AssocAlgebra& ahat = e.total.algebra;
    const Bimodule& mhat = e.total.module;
    Multilinear bl(nb, {na, nb}), br(nb, {nb, na}), nl(nn, {na, nn}), nr(nn, {nn, na});
    Multilinear l(nn, {nm, nb}), r(nn, {nb, nm});
    auto fill = [](Multilinear& f, auto value) {
        f.index().for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
            f.matrix().set_column(flat, value(t[0], t[1]));
        });
    };
    const LinearMap& s = sec.s;
    const LinearMap& sb = sec.sbar;
    fill(bl, [&](auto a, auto y) { return preimage(e.i, ahat.mul(s.column(a), e.i.column(y)), "a.b"); });
    fill(br, [&](auto y, auto a) { return preimage(e.i, ahat.mul(e.i.column(y), s.column(a)), "b.a"); });
    fill(nl, [&](auto a, auto n) { return preimage(e.ibar, mhat.act_left(s.column(a), e.ibar.column(n)), "a.n"); });
    fill(nr, [&](auto n, auto a) { return preimage(e.ibar, mhat.act_right(e.ibar.column(n), s.column(a)), "n.a"); });
    fill(l, [&](auto m, auto y) { return preimage(e.ibar, mhat.act_right(sb.column(m), e.i.column(y)), "l(m, b)"); });
    fill(r, [&](auto y, auto m) { return preimage(e.ibar, mhat.act_left(e.i.column(y), sb.column(m)), "r(b, m)"); });
    return RRBBimodule(e.base, Bimodule(std::move(bl), std::move(br)), Bimodule(std::move(nl), std::move(nr)), e.S,
                       std::move(l), std::move(r));
}

RRBCochain extract_cocycle(const AbelianExtension& e, const Section& sec) {
    const RRBBimodule b = induced_fiber_bimodule(e, sec);
    const RelativeRBAlgebra& x = e.base;
    const AssocAlgebra& ahat = e.total.algebra;
    const Bimodule& mhat = e.total.module;
    const LinearMap& s = sec.s;
    const LinearMap& sb = sec.sbar;
    RRBCochain c = RRBCochain::zero(x, b, 2);
    c.alpha.index().for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
        Vec a = unit_vec(x.dim_a(), t[0]), ap = unit_vec(x.dim_a(), t[1]);
        Vec defect = ahat.mul(s * a, s * ap) - s * x.algebra.mul(a, ap);
        c.alpha.matrix().set_column(flat, preimage(e.i, defect, "alpha"));
    });
    c.beta[0].index().for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
        Vec m = unit_vec(x.dim_m(), t[0]), a = unit_vec(x.dim_a(), t[1]);
        Vec defect = mhat.act_right(sb * m, s * a) - sb * x.module.act_right(m, a);
        c.beta[0].matrix().set_column(flat, preimage(e.ibar, defect, "beta(m, a)"));
    });
    c.beta[1].index().for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
        Vec a = unit_vec(x.dim_a(), t[0]), m = unit_vec(x.dim_m(), t[1]);
        Vec defect = mhat.act_left(s * a, sb * m) - sb * x.module.act_left(a, m);
        c.beta[1].matrix().set_column(flat, preimage(e.ibar, defect, "beta(a, m)"));
    });
    for (std::size_t j = 0; j < x.dim_m(); ++j) {
        Vec m = unit_vec(x.dim_m(), j);
        c.gamma.matrix().set_column(j, preimage(e.i, e.total.R * (sb * m) - s * (x.R * m), "gamma"));
    }
    return c;
}

std::optional<RRBCochain> find_cobounding(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c1,
                                          const RRBCochain& c2) {
    check_cochain_shape(x, b, c1);
    check_cochain_shape(x, b, c2);
    if (c1.k != c2.k || c1.k == 0) throw ShapeError("cobounding needs two cochains of the same degree k >= 1");
    auto sol = solve(rrb_operator(x, b, c1.k - 1).to_dense(), c1.flatten() - c2.flatten());
    if (!sol) return std::nullopt;
    return RRBCochain::unflatten(x, b, c1.k - 1, *sol);
}

RRBMorphism extension_iso_from_cobounding(const AbelianExtension& e1, const AbelianExtension& e2,
                                          const LinearMap& theta, const LinearMap& vartheta) {
    const RRBBimodule b = induced_fiber_bimodule(e1, canonical_section(e1));
    const RelativeRBAlgebra& x = e1.base;
    if (theta.rows() != b.dim_b() || theta.cols() != x.dim_a() || vartheta.rows() != b.dim_n() ||
        vartheta.cols() != x.dim_m()) {
        throw ShapeError("theta: A -> B and vartheta: M -> N have the wrong shape");
    }
    RRBCochain cob = RRBCochain::zero(x, b, 1);
    cob.alpha.matrix() = theta;
    cob.beta[0].matrix() = vartheta;
    const RRBCochain c1 = extract_cocycle(e1, canonical_section(e1));
    const RRBCochain c2 = extract_cocycle(e2, canonical_section(e2));
    if (rrb_differential(x, b, cob).flatten() != c1.flatten() - c2.flatten()) {
        throw PreconditionError("c1 - c2 != delta(theta, vartheta)");
    }
    LinearMap phi = Matrix::identity(e1.total.dim_a()) + e2.i * theta * e1.p;
    LinearMap psi = Matrix::identity(e1.total.dim_m()) + e2.ibar * vartheta * e1.pbar;
    return {e1.total, e2.total, std::move(phi), std::move(psi)};
}

Report check_extension_isomorphism(const AbelianExtension& e1, const AbelianExtension& e2, const RRBMorphism& m) {
    Report rep = check_morphism(m);
    require_equal(rep, "phi i = i'", m.phi * e1.i, e2.i);
    require_equal(rep, "psi ibar = ibar'", m.psi * e1.ibar, e2.ibar);
    require_equal(rep, "p' phi = p", e2.p * m.phi, e1.p);
    require_equal(rep, "pbar' psi = pbar", e2.pbar * m.psi, e1.pbar);
    require_rank(rep, "phi is invertible", m.phi, e2.total.dim_a());
    require_rank(rep, "psi is invertible", m.psi, e2.total.dim_m());
    return rep;
}

}  // namespace rrb
