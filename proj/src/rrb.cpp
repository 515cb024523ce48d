#include "rrb/rrb.hpp"

#include "rrb/error.hpp"
#include "rrb/linalg.hpp"

namespace rrb {

namespace {

void require_map(const LinearMap& f, std::size_t rows, std::size_t cols, const char* what) {
    if (f.rows() != rows || f.cols() != cols) {
        throw ShapeError(std::string(what) + " has shape " + std::to_string(f.rows()) + "x" +
                         std::to_string(f.cols()) + ", expected " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    }
}

}  // namespace

RelativeRBAlgebra::RelativeRBAlgebra(AssocAlgebra a, Bimodule m, LinearMap r)
    : algebra(std::move(a)), module(std::move(m)), R(std::move(r)) {
    if (module.alg_dim() != algebra.dim()) throw ShapeError("module is over an algebra of a different dimension");
    require_map(R, algebra.dim(), module.dim(), "operator R: M -> A");
}

RelativeRBAlgebra RelativeRBAlgebra::from_rota_baxter(const AssocAlgebra& a, const LinearMap& r) {
    return RelativeRBAlgebra(a, Bimodule::adjoint(a), r);
}

Report check_relative_rb(const RelativeRBAlgebra& x) {
    require_map(x.R, x.dim_a(), x.dim_m(), "operator R: M -> A");
    Report rep;
    const std::size_t n = x.dim_m();
    check_identity(rep, "R(m)R(m') = R(R(m)m' + mR(m'))", {n, n}, [&](const auto& t) {
        Vec m = unit_vec(n, t[0]), mp = unit_vec(n, t[1]);
        Vec rm = x.R * m, rmp = x.R * mp;
        return std::pair{x.algebra.mul(rm, rmp),
                         x.R * (x.module.act_left(rm, mp) + x.module.act_right(m, rmp))};
    });
    return rep;
}

Report check_relative_rb_full(const RelativeRBAlgebra& x) {
    Report rep;
    rep.merge(check_associativity(x.algebra), "A");
    rep.merge(check_bimodule(x.algebra, x.module), "M");
    rep.merge(check_relative_rb(x));
    return rep;
}

Report check_rota_baxter(const AssocAlgebra& a, const LinearMap& r) {
    return check_relative_rb(RelativeRBAlgebra::from_rota_baxter(a, r));
}

Report check_rb_bimodule(const AssocAlgebra& a, const LinearMap& r, const Bimodule& m, const LinearMap& rm) {
    require_map(r, a.dim(), a.dim(), "Rota-Baxter operator R");
    require_map(rm, m.dim(), m.dim(), "bimodule operator R_M");
    if (m.alg_dim() != a.dim()) throw ShapeError("bimodule is over an algebra of a different dimension");
    Report rep;
    const std::size_t na = a.dim(), nm = m.dim();
    check_identity(rep, "R(a).R_M(m) = R_M(R(a).m + a.R_M(m))", {na, nm}, [&](const auto& t) {
        Vec x = unit_vec(na, t[0]), y = unit_vec(nm, t[1]);
        Vec rx = r * x, ry = rm * y;
        return std::pair{m.act_left(rx, ry), rm * (m.act_left(rx, y) + m.act_left(x, ry))};
    });
    check_identity(rep, "R_M(m).R(a) = R_M(R_M(m).a + m.R(a))", {nm, na}, [&](const auto& t) {
        Vec y = unit_vec(nm, t[0]), x = unit_vec(na, t[1]);
        Vec rx = r * x, ry = rm * y;
        return std::pair{m.act_right(ry, rx), rm * (m.act_right(ry, x) + m.act_right(y, rx))};
    });
    return rep;
}

Report check_morphism(const RRBMorphism& mor) {
    const auto& s = mor.source;
    const auto& t = mor.target;
    require_map(mor.phi, t.dim_a(), s.dim_a(), "phi");
    require_map(mor.psi, t.dim_m(), s.dim_m(), "psi");
    Report rep;
    rep.merge(check_algebra_morphism(s.algebra, t.algebra, mor.phi));
    const std::size_t na = s.dim_a(), nm = s.dim_m();
    check_identity(rep, "psi(a.m) = phi(a).psi(m)", {na, nm}, [&](const auto& tp) {
        Vec a = unit_vec(na, tp[0]), m = unit_vec(nm, tp[1]);
        return std::pair{mor.psi * s.module.act_left(a, m), t.module.act_left(mor.phi * a, mor.psi * m)};
    });
    check_identity(rep, "psi(m.a) = psi(m).phi(a)", {nm, na}, [&](const auto& tp) {
        Vec m = unit_vec(nm, tp[0]), a = unit_vec(na, tp[1]);
        return std::pair{mor.psi * s.module.act_right(m, a), t.module.act_right(mor.psi * m, mor.phi * a)};
    });
    check_identity(rep, "phi R = S psi", {nm}, [&](const auto& tp) {
        Vec m = unit_vec(nm, tp[0]);
        return std::pair{mor.phi * (s.R * m), t.R * (mor.psi * m)};
    });
    return rep;
}

LiftedRB lift_to_rb(const RelativeRBAlgebra& x) {
    const std::size_t na = x.dim_a(), nm = x.dim_m();
    LinearMap r(na + nm, na + nm);
    r.set_block(0, na, x.R);
    return {semidirect_algebra(x.algebra, x.module), std::move(r)};
}

AssocAlgebra mtot_algebra(const RelativeRBAlgebra& x) {
    const std::size_t n = x.dim_m();
    // m *_R m' = R(m).m' + m.R(m')
    Multilinear star = x.module.left.precompose({x.R, Matrix::identity(n)}) +
                       x.module.right.precompose({Matrix::identity(n), x.R});
    return AssocAlgebra(std::move(star), x.module.basis_names);
}

InducedDendriform induced_dendriform(const RelativeRBAlgebra& x) {
    const std::size_t n = x.dim_m();
    Multilinear prec = x.module.right.precompose({Matrix::identity(n), x.R});
    Multilinear succ = x.module.left.precompose({x.R, Matrix::identity(n)});
    InducedDendriform out;
    out.dendriform = DendriformAlgebra(std::move(prec), std::move(succ));
    out.total = total_algebra(out.dendriform);
    out.morphism = check_algebra_morphism(out.total, x.algebra, x.R);
    return out;
}

Report aybe_check(const RMatrix& rm) {
    const auto& a = rm.over;
    const std::size_t n = a.dim();
    require_map(rm.r, n, n, "r-matrix");
    // Expand each term into A (x) A (x) A and compare the sum with zero.
    Multilinear sum(1, {n, n, n});
    auto add = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
        if (!c.is_zero()) sum.at(0, {i, j, k}) += c;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& rij = rm.r(i, j);
            if (rij.is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p) {
                for (std::size_t q = 0; q < n; ++q) {
                    const Rational& rpq = rm.r(p, q);
                    if (rpq.is_zero()) continue;
                    const Rational c = rij * rpq;
                    for (std::size_t o = 0; o < n; ++o) {
                        // r13 r12 = (e_i e_p) (x) e_q (x) e_j
                        add(o, q, j, c * a.mu.at(o, {i, p}));
                        // - r12 r23 = - e_i (x) (e_j e_p) (x) e_q
                        add(i, o, q, -c * a.mu.at(o, {j, p}));
                        // r23 r13 = e_i (x) e_p (x) (e_q e_j)
                        add(i, p, o, c * a.mu.at(o, {q, j}));
                    }
                }
            }
        }
    }
    Report rep;
    check_identity(rep, "r13 r12 - r12 r23 + r23 r13 = 0", {n, n, n}, [&](const auto& t) {
        return std::pair{Vec{sum.at(0, {t[0], t[1], t[2]})}, Vec{Rational(0)}};
    });
    return rep;
}

std::pair<AssocAlgebra, LinearMap> rb_from_r_matrix(const RMatrix& rm) {
    return {rm.over, rb_bimodule_from_r_matrix(rm, Bimodule::adjoint(rm.over))};
}

LinearMap rb_bimodule_from_r_matrix(const RMatrix& rm, const Bimodule& m) {
    const std::size_t n = rm.over.dim();
    require_map(rm.r, n, n, "r-matrix");
    if (m.alg_dim() != n) throw ShapeError("bimodule is over an algebra of a different dimension");
    const std::size_t d = m.dim();
    LinearMap out(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        Vec x = unit_vec(d, c);
        Vec acc(d);
        for (std::size_t i = 0; i < n; ++i) {
            Vec ex = m.act_left(unit_vec(n, i), x);
            for (std::size_t j = 0; j < n; ++j) {
                if (rm.r(i, j).is_zero()) continue;
                acc += rm.r(i, j) * m.act_right(ex, unit_vec(n, j));
            }
        }
        out.set_column(c, acc);
    }
    return out;
}

RelativeRBAlgebra endomorphism_rrb(const TwoTermComplex& c) {
    const std::size_t n0 = c.dim0, n1 = c.dim1;
    require_map(c.d, n0, n1, "differential d: A1 -> A0");
    const std::size_t s0 = n0 * n0, s1 = n1 * n1;

    // Chain-map condition f0 d - d f1 = 0 on coordinates (f0 | f1).
    Matrix cond(n0 * n1, s0 + s1);
    for (std::size_t i = 0; i < n0; ++i) {
        for (std::size_t j = 0; j < n1; ++j) {
            const std::size_t row = i * n1 + j;
            for (std::size_t k = 0; k < n0; ++k) cond(row, i * n0 + k) += c.d(k, j);
            for (std::size_t k = 0; k < n1; ++k) cond(row, s0 + k * n1 + j) -= c.d(i, k);
        }
    }
    const std::vector<Vec> end_basis = kernel_basis(cond);
    const std::size_t ne = end_basis.size();
    const Matrix end_cols = Matrix::from_columns(s0 + s1, end_basis);
    auto f0_of = [&](const Vec& v) { return Matrix::unflatten(n0, n0, Vec(v.begin(), v.begin() + s0)); };
    auto f1_of = [&](const Vec& v) { return Matrix::unflatten(n1, n1, Vec(v.begin() + s0, v.end())); };
    auto end_coords = [&](const Matrix& f0, const Matrix& f1) {
        auto x = solve(end_cols, concat(f0.flatten(), f1.flatten()));
        if (!x) throw InternalError("endomorphism_rrb: element outside the chain-map space");
        return *x;
    };

    Multilinear mu(ne, {ne, ne});
    for (std::size_t p = 0; p < ne; ++p) {
        for (std::size_t q = 0; q < ne; ++q) {
            const Vec& u = end_basis[p];
            const Vec& v = end_basis[q];
            Vec w = end_coords(f0_of(u) * f0_of(v), f1_of(u) * f1_of(v));
            for (std::size_t o = 0; o < ne; ++o) mu.at(o, {p, q}) = w[o];
        }
    }

    // M = Hom(A0, ker d) with phi = K C, C of shape dim(ker d) x n0.
    const std::vector<Vec> ker = kernel_basis(c.d);
    const std::size_t nk = ker.size();
    const Matrix kmat = Matrix::from_columns(n1, ker);
    const std::size_t nm = nk * n0;
    auto coeffs_in_kernel = [&](const Matrix& phi) {
        // Solve K C = phi column by column.
        Matrix cm(nk, phi.cols());
        for (std::size_t j = 0; j < phi.cols(); ++j) {
            auto x = solve(kmat, phi.column(j));
            if (!x) throw InternalError("endomorphism_rrb: map does not land in ker d");
            cm.set_column(j, *x);
        }
        return cm;
    };

    Multilinear left(nm, {ne, nm});
    Multilinear right(nm, {nm, ne});
    LinearMap r(ne, nm);
    for (std::size_t b = 0; b < nm; ++b) {
        const Matrix cb = Matrix::unflatten(nk, n0, unit_vec(nm, b));
        const Matrix phi = kmat * cb;
        for (std::size_t p = 0; p < ne; ++p) {
            const Matrix f0 = f0_of(end_basis[p]);
            const Matrix f1 = f1_of(end_basis[p]);
            Vec lv = coeffs_in_kernel(f1 * phi).flatten();
            Vec rv = (cb * f0).flatten();
            for (std::size_t o = 0; o < nm; ++o) {
                left.at(o, {p, b}) = lv[o];
                right.at(o, {b, p}) = rv[o];
            }
        }
        r.set_column(b, end_coords(Matrix(n0, n0), phi * c.d));
    }
    return RelativeRBAlgebra(AssocAlgebra(std::move(mu)), Bimodule(std::move(left), std::move(right)), std::move(r));
}

}  // namespace rrb
