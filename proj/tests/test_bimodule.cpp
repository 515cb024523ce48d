#include <random>

#include "doctest.h"
#include "rrb/error.hpp"
#include "rrb/linalg.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace rrb;

namespace {

/// Random morphism between random fixtures: a basis change, the inclusion
/// into a semidirect product, or the projection out of one.
RRBMorphism random_morphism(std::mt19937& rng) {
    auto x = fx::random_rrb(rng);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: {
            Matrix p = fx::random_invertible(rng, x.dim_a()), q = fx::random_invertible(rng, x.dim_m());
            return {x, fx::transport(x, p, q), inverse(p), inverse(q)};
        }
        case 1: {
            auto big = semidirect_rrb(fx::random_bimodule(rng, x));
            Matrix phi(big.dim_a(), x.dim_a()), psi(big.dim_m(), x.dim_m());
            phi.set_block(0, 0, Matrix::identity(x.dim_a()));
            psi.set_block(0, 0, Matrix::identity(x.dim_m()));
            return {x, big, phi, psi};
        }
        default: {
            auto big = semidirect_rrb(fx::random_bimodule(rng, x));
            Matrix phi(x.dim_a(), big.dim_a()), psi(x.dim_m(), big.dim_m());
            phi.set_block(0, 0, Matrix::identity(x.dim_a()));
            psi.set_block(0, 0, Matrix::identity(x.dim_m()));
            return {big, x, phi, psi};
        }
    }
}

}  // namespace

TEST_CASE("bimodule check examples") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto x = fx::random_rrb(rng);
        CHECK(check_rrb_bimodule_full(adjoint_bimodule(x)).ok());
        CHECK(check_rrb_bimodule(RRBBimodule::zero(x, 2, 1)).ok());
    }
    // Doubling l keeps the pairing identities but breaks the first operator identity.
    auto adj = adjoint_bimodule(fx::integration_rrb(3));
    adj.l = Rational(2) * adj.l;
    Report rep = check_rrb_bimodule(adj);
    CHECK(check_pairings(adj).ok());
    CHECK(rep.fails("R(m).S(n) = S(R(m).n + l(m, S n))"));
    CHECK(!rep.fails("S(n).R(m)"));
    // On the 1-dimensional fixtures every term of that identity vanishes.
    auto line = adjoint_bimodule(fx::square_zero_identity());
    line.l = Rational(2) * line.l;
    CHECK(check_rrb_bimodule(line).ok());
}

TEST_CASE("random bimodules pass") {
    std::mt19937 rng(29);
    for (int t = 0; t < 60; ++t) {
        auto x = fx::random_rrb(rng);
        auto b = fx::random_bimodule(rng, x);
        INFO(fx::describe(x));
        CHECK(check_rrb_bimodule_full(b).ok());
    }
}

TEST_CASE("adjoint bimodule examples") {
    auto x = fx::unit_zero_r();
    auto b = adjoint_bimodule(x);
    CHECK(b.S.is_zero());
    CHECK(b.l == x.module.right);
    CHECK(b.r == x.module.left);
    auto z = adjoint_bimodule(fx::zero_structure(1, 1));
    CHECK(z.B.left.is_zero());
    CHECK(z.l.is_zero());
    CHECK(z.r.is_zero());
}

TEST_CASE("dual bimodule") {
    auto x = fx::zero_structure(2, 1);
    auto zero = RRBBimodule::zero(x, 2, 3);
    auto dz = dual_rrb_bimodule(zero);
    CHECK(dz.dim_b() == 3);
    CHECK(dz.dim_n() == 2);
    CHECK(dz.S.is_zero());
    CHECK(dz.l.is_zero());
    CHECK(dz.B.left.is_zero());

    // Coadjoint of the 1-dim fixture: operator -R^T and l*(m, f)(a) = f(a.m).
    auto u = fx::unit_zero_r();
    auto co = coadjoint_bimodule(u);
    CHECK(co.S == Matrix(1, 1));
    CHECK(co.l.at(0, {0, 0}) == u.module.left.at(0, {0, 0}));
    auto s = fx::square_zero_identity();
    CHECK(coadjoint_bimodule(s).S == Matrix{{-1}});

    std::mt19937 rng(37);
    for (int t = 0; t < 60; ++t) {
        auto y = fx::random_rrb(rng);
        auto b = fx::random_bimodule(rng, y);
        auto d = dual_rrb_bimodule(b);
        CHECK(check_rrb_bimodule_full(d).ok());
        CHECK(dual_rrb_bimodule(d) == b);
        CHECK(coadjoint_bimodule(y) == dual_rrb_bimodule(adjoint_bimodule(y)));
        // l*(m_i, f_j)(b_k) = f_j(r(b_k, m_i)) by direct evaluation.
        for (std::size_t i = 0; i < y.dim_m(); ++i) {
            for (std::size_t j = 0; j < b.dim_n(); ++j) {
                for (std::size_t k = 0; k < b.dim_b(); ++k) {
                    Vec rv = oracle::eval(b.r, {unit_vec(b.dim_b(), k), unit_vec(y.dim_m(), i)});
                    CHECK(d.l.at(k, {i, j}) == rv[j]);
                    Vec lv = oracle::eval(b.l, {unit_vec(y.dim_m(), i), unit_vec(b.dim_b(), k)});
                    CHECK(d.r.at(k, {j, i}) == lv[j]);
                }
            }
        }
    }
}

TEST_CASE("morphism-induced bimodule") {
    std::mt19937 rng(43);
    for (int t = 0; t < 10; ++t) {
        auto x = fx::random_rrb(rng);
        auto id = morphism_induced_bimodule({x, x, Matrix::identity(x.dim_a()), Matrix::identity(x.dim_m())});
        CHECK(id == adjoint_bimodule(x));
        auto y = fx::random_rrb(rng);
        RRBMorphism zero{x, y, Matrix(y.dim_a(), x.dim_a()), Matrix(y.dim_m(), x.dim_m())};
        auto z = morphism_induced_bimodule(zero);
        CHECK(z.B.left.is_zero());
        CHECK(z.N.right.is_zero());
        CHECK(z.l.is_zero());
        CHECK(z.r.is_zero());
        CHECK(z.S == y.R);
        CHECK(check_rrb_bimodule_full(z).ok());
    }
    for (int t = 0; t < 40; ++t) {
        RRBMorphism m = random_morphism(rng);
        REQUIRE(check_morphism(m).ok());
        CHECK(check_rrb_bimodule_full(morphism_induced_bimodule(m)).ok());
    }
}

TEST_CASE("semidirect relative Rota-Baxter algebra") {
    auto s = semidirect_rrb(adjoint_bimodule(fx::unit_zero_r()));
    CHECK(s.dim_a() == 2);
    CHECK(s.dim_m() == 2);
    CHECK(s.R.is_zero());
    auto z = semidirect_rrb(RRBBimodule::zero(fx::zero_structure(1, 1), 1, 1));
    CHECK(z.algebra.mu.is_zero());
    CHECK(z.module.left.is_zero());
    std::mt19937 rng(47);
    for (int t = 0; t < 50; ++t) {
        auto x = fx::random_rrb(rng);
        auto b = fx::random_bimodule(rng, x);
        CHECK(check_relative_rb_full(semidirect_rrb(b)).ok());
    }
}

TEST_CASE("lifted bimodule: operator identities hold iff the lift is a Rota-Baxter bimodule") {
    auto zero = RRBBimodule::zero(fx::unit_zero_r(), 1, 1);
    auto lz = lift_bimodule(zero);
    CHECK(lz.S.is_zero());
    CHECK(check_lifted(lz).ok());
    auto la = lift_bimodule(adjoint_bimodule(fx::unit_zero_r()));
    CHECK(la.module.dim() == 2);
    CHECK(check_lifted(la).ok());

    std::mt19937 rng(59);
    int failing = 0;
    for (int t = 0; t < 120; ++t) {
        auto x = fx::random_rrb(rng);
        auto b = fx::random_bimodule(rng, x);
        switch (t % 4) {
            case 1:
                b.S = fx::mutate(rng, b.S);
                break;
            case 2:
                b.l = Rational(2) * b.l;
                break;
            case 3:
                b.r = Rational(-1) * b.r;
                break;
            default:
                break;
        }
        REQUIRE(check_pairings(b).ok());
        const bool ok = check_rrb_bimodule(b).ok();
        failing += ok ? 0 : 1;
        LiftedBimodule lb = lift_bimodule(b);
        CHECK(check_bimodule(lb.base.algebra, lb.module).ok());
        CHECK(ok == check_lifted(lb).ok());
    }
    CHECK(failing > 10);
}

TEST_CASE("broken operator identity shows up at the matching lifted pair") {
    auto b = adjoint_bimodule(fx::integration_rrb(3));
    b.l = Rational(2) * b.l;
    Report base = check_operator_identities(b);
    REQUIRE(!base.ok());
    LiftedBimodule lb = lift_bimodule(b);
    Report lifted = check_lifted(lb);
    const std::size_t na = b.over.dim_a(), nb = b.dim_b();
    for (const auto& v : base.violations()) {
        if (v.identity.rfind("R(m).S(n)", 0) != 0) continue;
        bool found = false;
        for (const auto& w : lifted.violations()) {
            found |= w.identity == "R(a).R_M(m) = R_M(R(a).m + a.R_M(m))" &&
                     w.tuple == std::vector<std::size_t>{na + v.tuple[0], nb + v.tuple[1]};
        }
        CHECK(found);
    }
}

TEST_CASE("lift rejects pairings that fail their identities") {
    std::mt19937 rng(61);
    int rejected = 0;
    for (int t = 0; t < 20; ++t) {
        auto b = adjoint_bimodule(fx::integration_rrb(3));
        b.l = fx::mutate(rng, b.l);
        if (check_pairings(b).ok()) continue;
        ++rejected;
        CHECK_THROWS_AS(lift_bimodule(b), PreconditionError);
    }
    CHECK(rejected > 0);
}

TEST_CASE("M_Tot action bimodule") {
    auto z = mtot_action_bimodule(RRBBimodule::zero(fx::unit_zero_r(), 2, 2));
    CHECK(z.left.is_zero());
    CHECK(z.right.is_zero());
    auto a = mtot_action_bimodule(adjoint_bimodule(fx::unit_zero_r()));
    CHECK(a.left.is_zero());
    CHECK(a.right.is_zero());
    std::mt19937 rng(67);
    for (int t = 0; t < 50; ++t) {
        auto x = fx::random_rrb(rng);
        auto b = fx::random_bimodule(rng, x);
        CHECK(check_bimodule(mtot_algebra(x), mtot_action_bimodule(b)).ok());
    }
}

TEST_CASE("induced dendriform representation") {
    std::mt19937 rng(71);
    for (int t = 0; t < 50; ++t) {
        auto x = fx::random_rrb(rng);
        auto d = induced_dendriform(x).dendriform;
        CHECK(induced_dendriform_representation(adjoint_bimodule(x)) == DendriformRepresentation::adjoint(d));
        auto zero = induced_dendriform_representation(RRBBimodule::zero(x, 1, 2));
        CHECK(zero == DendriformRepresentation::zero(x.dim_m(), 2));
        auto b = fx::random_bimodule(rng, x);
        CHECK(check_dendriform_representation(d, induced_dendriform_representation(b)).ok());
    }
}

TEST_CASE("dendriform algebras and representations as relative Rota-Baxter data") {
    auto [zx, zb] = dendriform_to_rrb(DendriformAlgebra::zero(2), DendriformRepresentation::zero(2, 1));
    CHECK(zx.algebra.mu.is_zero());
    CHECK(zb.l.is_zero());
    CHECK(induced_dendriform(zx).dendriform == DendriformAlgebra::zero(2));

    Multilinear succ(1, {1, 1});
    succ.at(0, {0, 0}) = 1;
    DendriformAlgebra line(Multilinear(1, {1, 1}), succ);
    auto [lx, lb] = dendriform_to_rrb(line, DendriformRepresentation::adjoint(line));
    CHECK(lx.algebra == fx::line(1));
    CHECK(lx.R == Matrix::identity(1));
    CHECK(check_relative_rb(lx).ok());
    CHECK(induced_dendriform(lx).dendriform.succ == succ);

    std::mt19937 rng(73);
    for (int t = 0; t < 50; ++t) {
        auto y = fx::random_rrb(rng);
        if (y.dim_m() > 3) continue;
        auto d = induced_dendriform(y).dendriform;
        DendriformRepresentation e;
        switch (t % 3) {
            case 0:
                e = DendriformRepresentation::adjoint(d);
                break;
            case 1:
                e = DendriformRepresentation::zero(d.dim(), 2);
                break;
            default:
                e = induced_dendriform_representation(fx::random_bimodule(rng, y));
                break;
        }
        REQUIRE(check_dendriform_representation(d, e).ok());
        auto [x, b] = dendriform_to_rrb(d, e);
        CHECK(check_rrb_bimodule_full(b).ok());
        CHECK(induced_dendriform(x).dendriform == d);
        CHECK(induced_dendriform_representation(b) == e);
    }
}

TEST_CASE("inclusion of D into D_Tot + D is a dendriform morphism") {
    CHECK(check_dendriform_embedding(DendriformAlgebra::zero(2)).ok());
    std::mt19937 rng(79);
    for (int t = 0; t < 40; ++t) CHECK(check_dendriform_embedding(fx::random_dendriform(rng)).ok());
}

TEST_CASE("relative differential algebras invert to relative Rota-Baxter data") {
    AssocAlgebra a = fx::line(0);
    Bimodule adj = Bimodule::adjoint(a);
    Multilinear zero2(1, {1, 1});
    DifferentialPair p{a, adj, Matrix::identity(1), adj, adj, Matrix::identity(1), zero2, zero2};
    CHECK(check_differential_pair(p).ok());
    auto [x, b] = invert_differential_pair(p);
    CHECK(x.R == Matrix::identity(1));
    CHECK(check_relative_rb(x).ok());
    CHECK(check_rrb_bimodule(b).ok());

    p.d = Matrix{{2}};
    auto [x2, b2] = invert_differential_pair(p);
    CHECK(x2.R == Matrix{{Rational(1, 2)}});
    CHECK(check_relative_rb(x2).ok());

    p.d = Matrix{{0}};
    CHECK_THROWS_AS(invert_differential_pair(p), PreconditionError);
    p.d = Matrix::identity(1);
    p.delta = Matrix{{0}};
    CHECK_THROWS_AS(invert_differential_pair(p), PreconditionError);

    auto h = fx::heisenberg_differential_pair();
    CHECK(check_differential_pair(h).ok());
    auto [hx, hb] = invert_differential_pair(h);
    CHECK(!hx.R.is_zero());
    CHECK(check_relative_rb_full(hx).ok());
    CHECK(check_rrb_bimodule_full(hb).ok());

    // A non-derivation is reported.
    auto bad = h;
    bad.d = Matrix::identity(3);
    CHECK(check_differential_pair(bad).fails("d(ab)"));
}
