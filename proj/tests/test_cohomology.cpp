#include <random>

#include "doctest.h"
#include "rrb/cohomology.hpp"
#include "rrb/error.hpp"
#include "rrb/linalg.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace rrb;

namespace {

// Every product, action, pairing and operator zero; all spaces 1-dimensional.
std::pair<RelativeRBAlgebra, RRBBimodule> all_zero() {
    RelativeRBAlgebra x(AssocAlgebra::zero(1), Bimodule::zero(1, 1), Matrix(1, 1));
    return {x, RRBBimodule::zero(x, 1, 1)};
}

RRBCochain random_cochain(std::mt19937& rng, const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t k) {
    return RRBCochain::unflatten(x, b, k, fx::random_vec(rng, cochain_space_dims(x, b, k).total()));
}

bool small(const RelativeRBAlgebra& x, const RRBBimodule& b, std::size_t bound) {
    return x.dim_a() <= bound && x.dim_m() <= bound && b.dim_b() <= bound && b.dim_n() <= bound;
}

// A random passing (algebra, bimodule) pair with all dimensions at most `bound`.
std::pair<RelativeRBAlgebra, RRBBimodule> random_pair(std::mt19937& rng, std::size_t bound) {
    while (true) {
        auto x = fx::random_rrb(rng);
        if (x.dim_a() > bound || x.dim_m() > bound) continue;
        auto b = fx::random_bimodule(rng, x);
        if (small(x, b, bound)) return {x, b};
    }
}

DendriformCochain random_dendriform_cochain(std::mt19937& rng, std::size_t nd, std::size_t ne, std::size_t k) {
    DendriformCochain f = DendriformCochain::zero(nd, ne, k);
    for (auto& fi : f.f) fi = fx::random_multilinear(rng, ne, std::vector<std::size_t>(k, nd));
    return f;
}

// Rota-Baxter algebras with Rota-Baxter bimodules built from r-matrices.
struct RBPair {
    AssocAlgebra a;
    LinearMap rop;
    Bimodule m;
    LinearMap rm;
};

std::vector<RBPair> r_matrix_pairs(std::mt19937& rng) {
    std::vector<RBPair> out;
    for (const auto& a : {fx::truncated_poly(2), fx::upper_triangular(), fx::heisenberg()}) {
        const std::size_t n = a.dim();
        int found = 0;
        for (int t = 0; t < 400 && found < 3; ++t) {
            Matrix r(n, n);
            for (int s = 0; s < 2; ++s) {
                auto i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                auto j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                r(i, j) = std::uniform_int_distribution<int>(-2, 2)(rng);
            }
            RMatrix rmat{a, r};
            if (!aybe_check(rmat).ok() || rb_from_r_matrix(rmat).second.is_zero()) continue;
            ++found;
            auto [alg, op] = rb_from_r_matrix(rmat);
            for (const Bimodule& m : {Bimodule::adjoint(a), dual_bimodule(Bimodule::adjoint(a))}) {
                out.push_back({alg, op, m, rb_bimodule_from_r_matrix(rmat, m)});
            }
        }
    }
    out.push_back({fx::truncated_poly(3), fx::integration(3), Bimodule::adjoint(fx::truncated_poly(3)),
                   fx::integration(3)});
    return out;
}

}  // namespace

TEST_CASE("cochain space dimensions") {
    auto [x, b] = all_zero();
    CHECK(cochain_space_dims(x, b, 2) == CochainDims{1, 2, 1});
    CHECK(cochain_space_dims(x, b, 2).total() == 4);
    CHECK(cochain_space_dims(x, b, 1) == CochainDims{1, 1, 0});
    CHECK(cochain_space_dims(x, b, 0) == CochainDims{0, 0, 0});
    auto y = fx::integration_rrb(2);
    auto c = RRBBimodule::zero(y, 3, 1);
    CHECK(cochain_space_dims(y, c, 3) == CochainDims{8 * 3, 3 * 4 * 2 * 1, 4 * 3});
    CHECK(RRBCochain::zero(y, c, 3).flatten().size() == cochain_space_dims(y, c, 3).total());
}

TEST_CASE("cochain coordinates round trip") {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto [x, b] = random_pair(rng, 3);
        for (std::size_t k = 1; k <= 3; ++k) {
            Vec v = fx::random_vec(rng, cochain_space_dims(x, b, k).total());
            RRBCochain c = RRBCochain::unflatten(x, b, k, v);
            CHECK(c.flatten() == v);
            CHECK_NOTHROW(check_cochain_shape(x, b, c));
        }
    }
    auto [x, b] = all_zero();
    CHECK_THROWS_AS(RRBCochain::unflatten(x, b, 2, Vec(3)), ShapeError);
    RRBCochain bad = RRBCochain::zero(x, b, 2);
    bad.beta.pop_back();
    CHECK_THROWS_AS(rrb_differential(x, b, bad), ShapeError);
}

TEST_CASE("component differentials: degenerate inputs") {
    std::mt19937 rng(5);
    auto [x, b] = all_zero();
    for (std::size_t k = 1; k <= 3; ++k) {
        RRBCochain c = random_cochain(rng, x, b, k);
        CHECK(delta_AB(x, b, c.alpha).is_zero());
        for (const auto& bj : delta_alpha_AN(x, b, c.alpha, c.beta)) CHECK(bj.is_zero());
        CHECK(h_R(x, b, c.alpha, c.beta).is_zero());
        if (k >= 2) CHECK(delta_MB(x, b, c.gamma).is_zero());
        CHECK(rrb_differential(x, b, c).flatten() == zero_vec(cochain_space_dims(x, b, k + 1).total()));
    }
    for (int t = 0; t < 20; ++t) {
        auto [y, c] = random_pair(rng, 3);
        for (std::size_t k = 1; k <= 2; ++k) {
            RRBCochain z = RRBCochain::zero(y, c, k);
            CHECK(rrb_differential(y, c, z) == RRBCochain::zero(y, c, k + 1));
        }
        // With R = 0 and S = 0 every term of delta_MB vanishes.
        RelativeRBAlgebra y0 = y;
        y0.R = Matrix(y.dim_a(), y.dim_m());
        RRBBimodule c0 = c;
        c0.over = y0;
        c0.S = Matrix(c.dim_b(), c.dim_n());
        Multilinear g = fx::random_multilinear(rng, c.dim_b(), {y.dim_m()});
        CHECK(delta_MB(y0, c0, g).is_zero());
    }
}

TEST_CASE("h_R in degree one is S beta - alpha R") {
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto [x, b] = random_pair(rng, 3);
        RRBCochain c = random_cochain(rng, x, b, 1);
        Multilinear h = h_R(x, b, c.alpha, c.beta);
        CHECK(h.matrix() == b.S * c.beta[0].matrix() - c.alpha.matrix() * x.R);
    }
}

TEST_CASE("differential matches the reference evaluator") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto [x, b] = random_pair(rng, 3);
        const oracle::Structure s = oracle::structure_of(x, b);
        for (std::size_t k = 1; k <= 2; ++k) {
            RRBCochain c = random_cochain(rng, x, b, k);
            CHECK(rrb_differential(x, b, c).flatten() == oracle::delta_coords(s, oracle::functions_of(c)));
        }
    }
}

TEST_CASE("differential squares to zero on 100 random fixtures") {
    std::mt19937 rng(2024);
    int nonzero = 0;
    for (int t = 0; t < 100; ++t) {
        auto [x, b] = random_pair(rng, 3);
        INFO(fx::describe(x));
        REQUIRE(check_rrb_bimodule_full(b).ok());
        for (std::size_t k = 1; k <= 3; ++k) {
            SparseMatrix d1 = rrb_operator(x, b, k);
            CHECK((rrb_operator(x, b, k + 1) * d1).is_zero());
            nonzero += d1.is_zero() ? 0 : 1;
        }
    }
    CHECK(nonzero > 100);
}

TEST_CASE("restriction of the semidirect product complex") {
    std::mt19937 rng(17);
    for (int t = 0; t < 25; ++t) {
        auto [x, b] = random_pair(rng, 2);
        const RelativeRBAlgebra big = semidirect_rrb(b);
        const oracle::Structure s = oracle::structure_of(x, b);
        const oracle::Structure sb = oracle::self_structure(big);
        for (std::size_t k = 1; k <= 2; ++k) {
            RRBCochain c = random_cochain(rng, x, b, k);
            oracle::FnCochain lhs = oracle::include_in_semidirect(s, oracle::functions_of(c));
            oracle::FnCochain rhs =
                oracle::include_in_semidirect(s, oracle::functions_of(rrb_differential(x, b, c)));
            // Compare value by value on every basis tuple of the semidirect product.
            const std::size_t na = big.dim_a(), nm = big.dim_m();
            TensorIndex a_idx(std::vector<std::size_t>(k + 1, na));
            a_idx.for_each([&](const std::vector<std::size_t>& tup, std::size_t) {
                std::vector<Vec> args;
                for (auto i : tup) args.push_back(unit_vec(na, i));
                CHECK(oracle::delta_alpha(sb, lhs, args) == rhs.alpha(args));
            });
            for (std::size_t slot = 0; slot <= k; ++slot) {
                std::vector<std::size_t> dims(k + 1, na);
                dims[slot] = nm;
                TensorIndex(dims).for_each([&](const std::vector<std::size_t>& tup, std::size_t) {
                    std::vector<Vec> args;
                    for (std::size_t p = 0; p <= k; ++p) args.push_back(unit_vec(dims[p], tup[p]));
                    CHECK(oracle::delta_beta(sb, lhs, slot, args) == rhs.beta[slot](args));
                });
            }
            TensorIndex(std::vector<std::size_t>(k, nm)).for_each([&](const std::vector<std::size_t>& tup, std::size_t) {
                std::vector<Vec> args;
                for (auto i : tup) args.push_back(unit_vec(nm, i));
                CHECK(oracle::delta_gamma(sb, lhs, args) == rhs.gamma(args));
            });
        }
    }
}

TEST_CASE("adjoint bimodule reproduces the complex of the relative Rota-Baxter algebra") {
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
        auto x = fx::random_rrb(rng);
        if (x.dim_a() > 3 || x.dim_m() > 3) continue;
        const RRBBimodule adj = adjoint_bimodule(x);
        const oracle::Structure s = oracle::self_structure(x);
        std::vector<Matrix> ref;
        for (std::size_t k = 1; k <= 3; ++k) {
            if (k == 3 && x.dim_a() + x.dim_m() > 4) break;
            ref.push_back(oracle::delta_matrix(s, k));
            CHECK(rrb_operator(x, adj, k).to_dense() == ref.back());
        }
        const std::size_t c1 = cochain_space_dims(x, adj, 1).total();
        if (!ref.empty()) CHECK(rrb_cohomology_dim(x, adj, 1) == homology_dim(ref[0], Matrix(c1, 0)));
        for (std::size_t k = 2; k <= ref.size(); ++k) {
            CHECK(rrb_cohomology_dim(x, adj, k) == homology_dim(ref[k - 1], ref[k - 2]));
        }
    }
}

TEST_CASE("cohomology examples") {
    auto [x, b] = all_zero();
    CHECK(rrb_cohomology_dim(x, b, 2) == 4);
    CHECK(rrb_cohomology_dim(x, b, 1) == 2);
    CHECK(rrb_cohomology_dim(x, b, 3) == cochain_space_dims(x, b, 3).total());
    // B = N = 0: every cochain space is zero.
    auto y = fx::integration_rrb(3);
    auto zero = RRBBimodule::zero(y, 0, 0);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(rrb_cohomology_dim(y, zero, k) == 0);
    std::mt19937 rng(29);
    for (int t = 0; t < 20; ++t) {
        auto [z, c] = random_pair(rng, 3);
        for (std::size_t k = 1; k <= 2; ++k) {
            const std::size_t h = rrb_cohomology_dim(z, c, k);
            const std::size_t dim = cochain_space_dims(z, c, k).total();
            CHECK(h == dim - rank(rrb_operator(z, c, k)) - (k == 1 ? 0 : rank(rrb_operator(z, c, k - 1))));
        }
    }
}

TEST_CASE("derivation examples") {
    auto [x, b] = all_zero();
    auto basis = derivation_basis(x, b);
    CHECK(basis.size() == 2);
    for (const auto& c : basis) CHECK(check_derivation(x, b, c).ok());

    // e.e = e with the adjoint bimodule: alpha(e) = 2 alpha(e) forces alpha = 0, beta is free.
    auto u = fx::unit_zero_r();
    auto adj = adjoint_bimodule(u);
    CHECK(derivation_basis(u, adj).size() == 1);
    int solutions = 0;
    for (int a = -2; a <= 2; ++a) {
        for (int m = -2; m <= 2; ++m) {
            RRBCochain c = RRBCochain::unflatten(u, adj, 1, Vec{a, m});
            const bool ok = check_derivation(u, adj, c).ok();
            CHECK(ok == (a == 0));
            solutions += ok ? 1 : 0;
        }
    }
    CHECK(solutions == 5);
    RRBCochain bad = RRBCochain::unflatten(u, adj, 1, Vec{1, 0});
    CHECK(check_derivation(u, adj, bad).fails("alpha(aa') = alpha(a)a' + a alpha(a')"));
}

TEST_CASE("derivations are the degree-one cocycles") {
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        auto [x, b] = random_pair(rng, 3);
        auto basis = derivation_basis(x, b);
        const SparseMatrix d1 = rrb_operator(x, b, 1);
        CHECK(basis.size() == cochain_space_dims(x, b, 1).total() - rank(d1));
        for (const auto& c : basis) CHECK(check_derivation(x, b, c).ok());
        RRBCochain c = random_cochain(rng, x, b, 1);
        CHECK(check_derivation(x, b, c).ok() == is_zero(d1 * c.flatten()));
    }
}

TEST_CASE("Rota-Baxter subcomplex") {
    std::mt19937 rng(37);
    auto pairs = r_matrix_pairs(rng);
    REQUIRE(pairs.size() > 4);
    for (const auto& p : pairs) {
        REQUIRE(check_rb_bimodule(p.a, p.rop, p.m, p.rm).ok());
        RRBBimodule b = rrb_bimodule_from_rb(p.a, p.rop, p.m, p.rm);
        REQUIRE(check_rrb_bimodule_full(b).ok());
        const std::size_t na = p.a.dim(), nm = p.m.dim();
        for (std::size_t k = 1; k <= 2; ++k) {
            RBCochain zero{k, Multilinear(nm, std::vector<std::size_t>(k, na)),
                           k >= 2 ? Multilinear(nm, std::vector<std::size_t>(k - 1, na)) : Multilinear()};
            RBCochain dz = rb_restrict(p.a, p.rop, p.m, p.rm, zero);
            CHECK(dz.beta.is_zero());
            CHECK(dz.gamma.is_zero());

            RBCochain c{k, fx::random_multilinear(rng, nm, std::vector<std::size_t>(k, na)),
                        k >= 2 ? fx::random_multilinear(rng, nm, std::vector<std::size_t>(k - 1, na)) : Multilinear()};
            RBCochain dc = rb_restrict(p.a, p.rop, p.m, p.rm, c);
            CHECK(dc.k == k + 1);
            RBCochain ddc = rb_restrict(p.a, p.rop, p.m, p.rm, dc);
            CHECK(ddc.beta.is_zero());
            CHECK(ddc.gamma.is_zero());
            // The embedded differential agrees with delta_rRB on the embedded cochain.
            CHECK(rb_embed(dc) == rrb_differential(b.over, b, rb_embed(c)));
        }
    }
}

TEST_CASE("dendriform hat examples") {
    DendriformCochain id = DendriformCochain::zero(1, 1, 1);
    id.f[0].matrix()(0, 0) = 1;
    CHECK(dendriform_hat(id, 1, 1).matrix() == Matrix::identity(2));
    CHECK(dendriform_hat(DendriformCochain::zero(2, 3, 2), 2, 3).is_zero());

    std::mt19937 rng(41);
    for (int t = 0; t < 20; ++t) {
        const auto nd = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const auto ne = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        DendriformCochain f = random_dendriform_cochain(rng, nd, ne, k);
        Multilinear g = dendriform_hat(f, nd, ne);
        CHECK(dendriform_unhat(g, nd, ne) == f);
        // f([i]; x) = pr_2 hat((x_1, 0)..(0, x_i)..(x_k, 0)) on random vectors.
        std::vector<Vec> xs;
        for (std::size_t p = 0; p < k; ++p) xs.push_back(fx::random_vec(rng, nd));
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Vec> args;
            for (std::size_t p = 0; p < k; ++p) {
                args.push_back(p == i ? concat(zero_vec(nd), xs[p]) : concat(xs[p], zero_vec(nd)));
            }
            Vec v = oracle::eval(g, args);
            CHECK(Vec(v.begin() + static_cast<std::ptrdiff_t>(ne), v.end()) == oracle::eval(f.f[i], xs));
            CHECK(is_zero(Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ne))));
        }
    }
}

TEST_CASE("dendriform differential") {
    std::mt19937 rng(43);
    DendriformAlgebra z = DendriformAlgebra::zero(2);
    DendriformCochain f0 = random_dendriform_cochain(rng, 2, 2, 2);
    for (const auto& fi : dendriform_differential(z, DendriformRepresentation::zero(2, 2), f0).f) CHECK(fi.is_zero());
    CHECK(dendriform_differential(z, DendriformRepresentation::zero(2, 2), DendriformCochain::zero(2, 2, 1)) ==
          DendriformCochain::zero(2, 2, 2));

    for (int t = 0; t < 30; ++t) {
        DendriformAlgebra d = fx::random_dendriform(rng);
        if (d.dim() > 3) continue;
        REQUIRE(check_bimodule(dendriform_hat_algebra(d), Bimodule::adjoint(dendriform_hat_algebra(d))).ok());
        std::vector<DendriformRepresentation> reps{DendriformRepresentation::adjoint(d)};
        for (const auto& e : reps) {
            REQUIRE(check_dendriform_representation(d, e).ok());
            CHECK(check_associativity(dendriform_hat_algebra(d)).ok());
            CHECK(check_bimodule(dendriform_hat_algebra(d), dendriform_hat_bimodule(e)).ok());
            for (std::size_t k = 1; k <= 2; ++k) {
                DendriformCochain f = random_dendriform_cochain(rng, d.dim(), e.dim(), k);
                DendriformCochain df = dendriform_differential(d, e, f);
                CHECK(df.k == k + 1);
                // Against the reference evaluation on random vectors.
                std::vector<Vec> xs;
                for (std::size_t p = 0; p <= k; ++p) xs.push_back(fx::random_vec(rng, d.dim()));
                for (std::size_t i = 0; i <= k; ++i) {
                    CHECK(oracle::eval(df.f[i], xs) == oracle::dendriform_delta(d, e, f, i, xs));
                }
                DendriformCochain ddf = dendriform_differential(d, e, df);
                for (const auto& fi : ddf.f) CHECK(fi.is_zero());
            }
        }
    }
}

TEST_CASE("psi is a chain map") {
    std::mt19937 rng(47);
    int nonzero = 0;
    for (int t = 0; t < 40; ++t) {
        auto [x, b] = random_pair(rng, 3);
        const DendriformAlgebra d = induced_dendriform(x).dendriform;
        const DendriformRepresentation e = induced_dendriform_representation(b);
        const AssocAlgebra mtot = mtot_algebra(x);
        const Bimodule act = mtot_action_bimodule(b);
        for (std::size_t k = 1; k <= 2; ++k) {
            Multilinear f = fx::random_multilinear(rng, b.dim_b(), std::vector<std::size_t>(k, x.dim_m()));
            DendriformCochain lhs = dendriform_differential(d, e, psi_map(b, f));
            DendriformCochain rhs = psi_map(b, hochschild_differential(mtot, act, f));
            CHECK(lhs == rhs);
            for (const auto& fi : rhs.f) nonzero += fi.is_zero() ? 0 : 1;
        }
    }
    CHECK(nonzero > 0);

    auto [x, b] = all_zero();
    Multilinear f(1, {1});
    f.matrix()(0, 0) = 3;
    for (const auto& fi : psi_map(b, f).f) CHECK(fi.is_zero());
    auto y = fx::integration_rrb(2);
    RRBBimodule adj = adjoint_bimodule(y);
    DendriformCochain p = psi_map(adj, Multilinear(2, {2}));
    CHECK(p.k == 2);
    for (const auto& fi : p.f) CHECK(fi.is_zero());
    CHECK_THROWS_AS(psi_map(adj, Multilinear(2, {})), ShapeError);
}
