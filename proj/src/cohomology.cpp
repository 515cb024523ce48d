#include "rrb/cohomology.hpp"

#include "rrb/error.hpp"
#include "rrb/linalg.hpp"

namespace rrb {

namespace {

Rational sign_of(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

std::size_t beta_block_size(std::size_t na, std::size_t nm, std::size_t nn, std::size_t k) {
    return nn * ipow(na, k - 1) * nm;
}

// Coordinates of the cochain components inside the flattened degree-k cochain.
struct Layout {
    std::size_t k, na, nm, nb, nn;
    CochainDims dims;

    Layout(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t deg)
        : k(deg), na(x.dim_a()), nm(x.dim_m()), nb(b.dim_b()), nn(b.dim_n()), dims(cochain_space_dims(x, b, deg)) {}

    std::size_t alpha_cols() const { return ipow(na, k); }
    std::size_t beta_cols() const { return ipow(na, k - 1) * nm; }
    std::size_t beta_offset(std::size_t s) const { return dims.alpha + s * beta_block_size(na, nm, nn, k); }
    std::size_t gamma_offset() const { return dims.alpha + dims.beta; }
    TensorIndex alpha_index() const { return TensorIndex(std::vector<std::size_t>(k, na)); }
    TensorIndex beta_index(std::size_t s) const { return TensorIndex(mixed_slot_dims(na, nm, k, s)); }
};

Matrix identity(std::size_t n) { return Matrix::identity(n); }

// delta^alpha as a block from [alpha | beta] of degree k to [beta'] of degree k+1.
SparseMatrix twisted_operator(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k) {
    const Layout in(x, b, k), out(x, b, k + 1);
    const std::size_t na = in.na, nm = in.nm, nb = in.nb, nn = in.nn;
    SparseMatrix op(out.dims.beta, in.dims.alpha + in.dims.beta);
    if (nn == 0) {
        op.finalize();
        return op;
    }
    const auto& mu = x.algebra.mu;
    const auto& M = x.module;
    const TensorIndex a_idx = in.alpha_index();
    std::vector<TensorIndex> b_idx;
    for (std::size_t j = 0; j < k; ++j) b_idx.push_back(in.beta_index(j));
    const std::size_t acols = in.alpha_cols(), bcols = in.beta_cols(), ocols = out.beta_cols();
    auto alpha_col = [&](std::size_t w, const std::vector<std::size_t>& sub) { return w * acols + a_idx.flatten(sub); };
    auto beta_col = [&](std::size_t j, std::size_t w, const std::vector<std::size_t>& sub) {
        return in.dims.alpha + j * nn * bcols + w * bcols + b_idx[j].flatten(sub);
    };
    std::vector<std::size_t> sub(k);
    const Rational last_sign = sign_of(k + 1);
    for (std::size_t s = 0; s <= k; ++s) {
        const std::size_t row0 = s * nn * ocols;
        out.beta_index(s).for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
            // (l + l_N)(a_1, (alpha + beta)(a_2, ..., a_{k+1}))
            std::copy(t.begin() + 1, t.end(), sub.begin());
            for (std::size_t o = 0; o < nn; ++o) {
                const std::size_t row = row0 + o * ocols + flat;
                if (s == 0) {
                    for (std::size_t w = 0; w < nb; ++w) {
                        const Rational& c = b.l.at(o, {t[0], w});
                        if (!c.is_zero()) op.add(row, alpha_col(w, sub), c);
                    }
                } else {
                    for (std::size_t w = 0; w < nn; ++w) {
                        const Rational& c = b.N.left.at(o, {t[0], w});
                        if (!c.is_zero()) op.add(row, beta_col(s - 1, w, sub), c);
                    }
                }
            }
            // (-1)^i beta(.., (mu + l_M + r_M)(a_i, a_{i+1}), ..)
            for (std::size_t p = 0; p < k; ++p) {
                const Rational sign = sign_of(p + 1);
                for (std::size_t q = 0, u = 0; q < k + 1; ++q) {
                    if (q == p + 1) continue;
                    sub[u++] = t[q];
                }
                const Multilinear* prod = &mu;
                std::size_t target = s < p ? s : s - 1;
                std::size_t range = na;
                if (s == p) {
                    prod = &M.right;
                    target = p;
                    range = nm;
                } else if (s == p + 1) {
                    prod = &M.left;
                    target = p;
                    range = nm;
                }
                for (std::size_t c = 0; c < range; ++c) {
                    const Rational& coef = prod->at(c, {t[p], t[p + 1]});
                    if (coef.is_zero()) continue;
                    sub[p] = c;
                    const Rational v = sign * coef;
                    for (std::size_t w = 0; w < nn; ++w) op.add(row0 + w * ocols + flat, beta_col(target, w, sub), v);
                }
            }
            // (-1)^{k+1} (r + r_N)((alpha + beta)(a_1, ..., a_k), a_{k+1})
            std::copy(t.begin(), t.end() - 1, sub.begin());
            for (std::size_t o = 0; o < nn; ++o) {
                const std::size_t row = row0 + o * ocols + flat;
                if (s == k) {
                    for (std::size_t w = 0; w < nb; ++w) {
                        const Rational& c = b.r.at(o, {w, t[k]});
                        if (!c.is_zero()) op.add(row, alpha_col(w, sub), last_sign * c);
                    }
                } else {
                    for (std::size_t w = 0; w < nn; ++w) {
                        const Rational& c = b.N.right.at(o, {w, t[k]});
                        if (!c.is_zero()) op.add(row, beta_col(s, w, sub), last_sign * c);
                    }
                }
            }
        });
    }
    op.finalize();
    return op;
}

// h_R as a block from [alpha | beta] of degree k to gamma' (arity k).
SparseMatrix h_operator(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k) {
    const Layout in(x, b, k);
    const std::size_t nm = in.nm, nb = in.nb, nn = in.nn;
    const std::size_t out_cols = ipow(nm, k);
    SparseMatrix op(nb * out_cols, in.dims.alpha + in.dims.beta);
    const Rational sign = sign_of(k);
    op.add_block(0, 0, sign * precompose_operator(nb, kron(std::vector<LinearMap>(k, x.R))));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<LinearMap> maps(k, x.R);
        maps[i] = identity(nm);
        SparseMatrix term = postcompose_operator(b.S, out_cols) * precompose_operator(nn, kron(maps));
        op.add_block(0, in.beta_offset(i), Rational(-1) * sign * term);
    }
    op.finalize();
    return op;
}

SparseMatrix mtot_operator(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t arity) {
    return hochschild_operator(mtot_algebra(x), mtot_action_bimodule(b), arity);
}

void require_dims(const Multilinear& f, std::size_t out, const std::vector<std::size_t>& in, const char* what) {
    if (f.out_dim() != out || f.in_dims() != in) throw ShapeError(std::string(what) + " has the wrong shape");
}

Vec alpha_beta_coords(const Multilinear& alpha, const std::vector<Multilinear>& beta) {
    Vec v = alpha.flatten();
    for (const auto& bj : beta) v = concat(v, bj.flatten());
    return v;
}

std::size_t beta_degree(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& alpha,
                        const std::vector<Multilinear>& beta) {
    const std::size_t k = alpha.arity();
    if (k == 0 || beta.size() != k) throw ShapeError("alpha and beta must have the same degree k >= 1");
    require_dims(alpha, b.dim_b(), std::vector<std::size_t>(k, x.dim_a()), "alpha");
    for (std::size_t s = 0; s < k; ++s) {
        require_dims(beta[s], b.dim_n(), mixed_slot_dims(x.dim_a(), x.dim_m(), k, s), "beta");
    }
    return k;
}

}  // namespace

CochainDims cochain_space_dims(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k) {
    const std::size_t na = x.dim_a(), nm = x.dim_m(), nb = b.dim_b(), nn = b.dim_n();
    if (k == 0) return {};
    if (k == 1) return {na * nb, nm * nn, 0};
    return {ipow(na, k) * nb, k * ipow(na, k - 1) * nm * nn, ipow(nm, k - 1) * nb};
}

std::vector<std::size_t> mixed_slot_dims(std::size_t dim_a, std::size_t dim_m, std::size_t k, std::size_t s) {
    std::vector<std::size_t> dims(k, dim_a);
    dims.at(s) = dim_m;
    return dims;
}

RRBCochain RRBCochain::zero(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k) {
    RRBCochain c;
    c.k = k;
    if (k == 0) return c;
    c.alpha = Multilinear(b.dim_b(), std::vector<std::size_t>(k, x.dim_a()));
    for (std::size_t s = 0; s < k; ++s) c.beta.emplace_back(b.dim_n(), mixed_slot_dims(x.dim_a(), x.dim_m(), k, s));
    if (k >= 2) c.gamma = Multilinear(b.dim_b(), std::vector<std::size_t>(k - 1, x.dim_m()));
    return c;
}

RRBCochain RRBCochain::unflatten(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k, const Vec& v) {
    const CochainDims dims = cochain_space_dims(x, b, k);
    if (v.size() != dims.total()) throw ShapeError("cochain coordinate vector has the wrong length");
    RRBCochain c = zero(x, b, k);
    std::size_t pos = 0;
    auto take = [&](Multilinear& f) {
        const std::size_t n = f.matrix().rows() * f.matrix().cols();
        Vec part(v.begin() + static_cast<std::ptrdiff_t>(pos), v.begin() + static_cast<std::ptrdiff_t>(pos + n));
        f = Multilinear::unflatten(f.out_dim(), f.in_dims(), part);
        pos += n;
    };
    if (k == 0) return c;
    take(c.alpha);
    for (auto& bj : c.beta) take(bj);
    if (k >= 2) take(c.gamma);
    return c;
}

Vec RRBCochain::flatten() const {
    if (k == 0) return {};
    Vec v = alpha_beta_coords(alpha, beta);
    if (k >= 2) v = concat(v, gamma.flatten());
    return v;
}

void check_cochain_shape(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c) {
    const RRBCochain z = RRBCochain::zero(x, b, c.k);
    if (c.k == 0) return;
    require_dims(c.alpha, z.alpha.out_dim(), z.alpha.in_dims(), "alpha");
    if (c.beta.size() != c.k) throw ShapeError("beta must have one map per slot");
    for (std::size_t s = 0; s < c.k; ++s) require_dims(c.beta[s], z.beta[s].out_dim(), z.beta[s].in_dims(), "beta");
    if (c.k >= 2) require_dims(c.gamma, z.gamma.out_dim(), z.gamma.in_dims(), "gamma");
}

Multilinear delta_AB(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& alpha) {
    return hochschild_differential(x.algebra, b.B, alpha);
}

std::vector<Multilinear> delta_alpha_AN(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& alpha,
                                        const std::vector<Multilinear>& beta) {
    const std::size_t k = beta_degree(x, b, alpha, beta);
    Vec out = twisted_operator(x, b, k) * alpha_beta_coords(alpha, beta);
    RRBCochain shape = RRBCochain::zero(x, b, k + 1);
    std::vector<Multilinear> result;
    const std::size_t block = beta_block_size(x.dim_a(), x.dim_m(), b.dim_n(), k + 1);
    for (std::size_t s = 0; s <= k; ++s) {
        Vec part(out.begin() + static_cast<std::ptrdiff_t>(s * block),
                 out.begin() + static_cast<std::ptrdiff_t>((s + 1) * block));
        result.push_back(Multilinear::unflatten(b.dim_n(), shape.beta[s].in_dims(), part));
    }
    return result;
}

Multilinear delta_MB(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& gamma) {
    return hochschild_differential(mtot_algebra(x), mtot_action_bimodule(b), gamma);
}

Multilinear h_R(const RelativeRBAlgebra& x, const RRBBimodule& b, const Multilinear& alpha,
                const std::vector<Multilinear>& beta) {
    const std::size_t k = beta_degree(x, b, alpha, beta);
    Vec out = h_operator(x, b, k) * alpha_beta_coords(alpha, beta);
    return Multilinear::unflatten(b.dim_b(), std::vector<std::size_t>(k, x.dim_m()), out);
}

SparseMatrix rrb_operator(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k) {
    const Layout in(x, b, k), out(x, b, k + 1);
    SparseMatrix op(out.dims.total(), in.dims.total());
    if (k == 0) {
        op.finalize();
        return op;
    }
    op.add_block(0, 0, hochschild_operator(x.algebra, b.B, k));
    op.add_block(out.dims.alpha, 0, twisted_operator(x, b, k));
    op.add_block(out.gamma_offset(), 0, h_operator(x, b, k));
    if (k >= 2) op.add_block(out.gamma_offset(), in.gamma_offset(), mtot_operator(x, b, k - 1));
    op.finalize();
    return op;
}

RRBCochain rrb_differential(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c) {
    check_cochain_shape(x, b, c);
    return RRBCochain::unflatten(x, b, c.k + 1, rrb_operator(x, b, c.k) * c.flatten());
}

std::size_t rrb_cohomology_dim(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k) {
    return homology_dim(rrb_operator(x, b, k), rrb_operator(x, b, k - 1));
}

Report check_derivation(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c) {
    if (c.k != 1) throw ShapeError("a derivation is a degree-1 cochain");
    check_cochain_shape(x, b, c);
    const std::size_t na = x.dim_a(), nm = x.dim_m();
    const LinearMap alpha = c.alpha.matrix(), beta = c.beta[0].matrix();
    Report rep;
    check_identity(rep, "alpha(aa') = alpha(a)a' + a alpha(a')", {na, na}, [&](const auto& t) {
        Vec a = unit_vec(na, t[0]), ap = unit_vec(na, t[1]);
        return std::pair{alpha * x.algebra.mul(a, ap), b.B.act_right(alpha * a, ap) + b.B.act_left(a, alpha * ap)};
    });
    check_identity(rep, "beta(a.m) = r(alpha(a), m) + a.beta(m)", {na, nm}, [&](const auto& t) {
        Vec a = unit_vec(na, t[0]), m = unit_vec(nm, t[1]);
        return std::pair{beta * x.module.act_left(a, m), b.r(alpha * a, m) + b.N.act_left(a, beta * m)};
    });
    check_identity(rep, "beta(m.a) = beta(m).a + l(m, alpha(a))", {nm, na}, [&](const auto& t) {
        Vec m = unit_vec(nm, t[0]), a = unit_vec(na, t[1]);
        return std::pair{beta * x.module.act_right(m, a), b.N.act_right(beta * m, a) + b.l(m, alpha * a)};
    });
    check_identity(rep, "alpha R = S beta", {nm}, [&](const auto& t) {
        Vec m = unit_vec(nm, t[0]);
        return std::pair{alpha * (x.R * m), b.S * (beta * m)};
    });
    return rep;
}

std::vector<RRBCochain> derivation_basis(const RelativeRBAlgebra& x, const RRBBimodule& b) {
    std::vector<RRBCochain> basis;
    for (const Vec& v : kernel_basis(rrb_operator(x, b, 1).to_dense())) basis.push_back(RRBCochain::unflatten(x, b, 1, v));
    return basis;
}

RRBBimodule rrb_bimodule_from_rb(const AssocAlgebra& a, const LinearMap& rop, const Bimodule& m, const LinearMap& rm) {
    return RRBBimodule(RelativeRBAlgebra::from_rota_baxter(a, rop), m, m, rm, m.left, m.right);
}

RRBCochain rb_embed(const RBCochain& c) {
    RRBCochain e;
    e.k = c.k;
    e.alpha = c.beta;
    e.beta.assign(c.k, c.beta);
    if (c.k >= 2) e.gamma = c.gamma;
    return e;
}

RBCochain rb_restrict(const AssocAlgebra& a, const LinearMap& rop, const Bimodule& m, const LinearMap& rm,
                      const RBCochain& c) {
    const RRBBimodule b = rrb_bimodule_from_rb(a, rop, m, rm);
    const RRBCochain d = rrb_differential(b.over, b, rb_embed(c));
    for (const auto& bj : d.beta) {
        if (!(bj == d.alpha)) throw InternalError("Rota-Baxter cochain left the embedded subcomplex");
    }
    return {d.k, d.alpha, d.gamma};
}

DendriformCochain DendriformCochain::zero(std::size_t dim_d, std::size_t dim_e, std::size_t k) {
    DendriformCochain c;
    c.k = k;
    c.f.assign(k, Multilinear(dim_e, std::vector<std::size_t>(k, dim_d)));
    return c;
}

AssocAlgebra dendriform_hat_algebra(const DendriformAlgebra& d) {
    const std::size_t n = d.dim();
    Multilinear mu(2 * n, {2 * n, 2 * n});
    add_block(mu, 0, {0, 0}, d.prec + d.succ);
    add_block(mu, n, {0, n}, d.succ);
    add_block(mu, n, {n, 0}, d.prec);
    return AssocAlgebra(std::move(mu));
}

Bimodule dendriform_hat_bimodule(const DendriformRepresentation& e) {
    const std::size_t nd = e.alg_dim(), ne = e.dim();
    Multilinear left(2 * ne, {2 * nd, 2 * ne}), right(2 * ne, {2 * ne, 2 * nd});
    add_block(left, 0, {0, 0}, e.prec_left + e.succ_left);
    add_block(left, ne, {0, ne}, e.succ_left);
    add_block(left, ne, {nd, 0}, e.prec_left);
    add_block(right, 0, {0, 0}, e.prec_right + e.succ_right);
    add_block(right, ne, {0, nd}, e.succ_right);
    add_block(right, ne, {ne, 0}, e.prec_right);
    return Bimodule(std::move(left), std::move(right));
}

Multilinear dendriform_hat(const DendriformCochain& f, std::size_t dim_d, std::size_t dim_e) {
    const std::size_t k = f.k;
    if (f.f.size() != k) throw ShapeError("dendriform cochain needs one map per label");
    for (const auto& fi : f.f) require_dims(fi, dim_e, std::vector<std::size_t>(k, dim_d), "dendriform cochain");
    Multilinear g(2 * dim_e, std::vector<std::size_t>(k, 2 * dim_d));
    const TensorIndex small(std::vector<std::size_t>(k, dim_d));
    std::vector<std::size_t> sub(k);
    g.index().for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
        std::size_t seconds = 0, pos = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (t[i] >= dim_d) {
                ++seconds;
                pos = i;
            }
            sub[i] = t[i] % dim_d;
        }
        if (seconds > 1) return;
        const std::size_t col = small.flatten(sub);
        for (std::size_t o = 0; o < dim_e; ++o) {
            if (seconds == 0) {
                Rational sum;
                for (const auto& fi : f.f) sum += fi.matrix()(o, col);
                g.matrix()(o, flat) = sum;
            } else {
                g.matrix()(dim_e + o, flat) = f.f[pos].matrix()(o, col);
            }
        }
    });
    return g;
}

DendriformCochain dendriform_unhat(const Multilinear& g, std::size_t dim_d, std::size_t dim_e) {
    const std::size_t k = g.arity();
    require_dims(g, 2 * dim_e, std::vector<std::size_t>(k, 2 * dim_d), "hat cochain");
    DendriformCochain f = DendriformCochain::zero(dim_d, dim_e, k);
    const TensorIndex small(std::vector<std::size_t>(k, dim_d));
    std::vector<std::size_t> big(k);
    for (std::size_t i = 0; i < k; ++i) {
        small.for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
            for (std::size_t p = 0; p < k; ++p) big[p] = t[p] + (p == i ? dim_d : 0);
            const std::size_t col = g.index().flatten(big);
            for (std::size_t o = 0; o < dim_e; ++o) f.f[i].matrix()(o, flat) = g.matrix()(dim_e + o, col);
        });
    }
    return f;
}

DendriformCochain dendriform_differential(const DendriformAlgebra& d, const DendriformRepresentation& e,
                                          const DendriformCochain& f) {
    const std::size_t nd = d.dim(), ne = e.dim();
    if (e.alg_dim() != nd) throw ShapeError("representation is over a dendriform algebra of a different dimension");
    Multilinear g = hochschild_differential(dendriform_hat_algebra(d), dendriform_hat_bimodule(e),
                                            dendriform_hat(f, nd, ne));
    DendriformCochain out = dendriform_unhat(g, nd, ne);
    if (!(dendriform_hat(out, nd, ne) == g)) throw InternalError("Hochschild differential left the hat image");
    return out;
}

DendriformCochain psi_map(const RRBBimodule& b, const Multilinear& f) {
    const std::size_t k = f.arity(), nm = b.over.dim_m();
    if (k == 0) throw ShapeError("psi is defined on cochains of degree k >= 1");
    require_dims(f, b.dim_b(), std::vector<std::size_t>(k, nm), "M_Tot cochain");
    DendriformCochain out = DendriformCochain::zero(nm, b.dim_n(), k + 1);
    const std::vector<std::size_t> dims(k + 1, nm);
    const Matrix& fm = f.matrix();
    out.f[0] = Multilinear(b.dim_n(), dims, (sign_of(k + 1) * b.l.precompose({identity(nm), fm})).matrix());
    out.f[k] = Multilinear(b.dim_n(), dims, b.r.precompose({fm, identity(nm)}).matrix());
    return out;
}

}  // namespace rrb
