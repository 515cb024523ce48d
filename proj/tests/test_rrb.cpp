#include <random>

#include "doctest.h"
#include "rrb/error.hpp"
#include "rrb/linalg.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace rrb;

TEST_CASE("relative Rota-Baxter identity examples") {
    std::mt19937 rng(1);
    for (int t = 0; t < 10; ++t) {
        auto x = fx::random_rrb(rng);
        x.R = Matrix(x.dim_a(), x.dim_m());
        CHECK(check_relative_rb(x).ok());
    }
    RelativeRBAlgebra bad = RelativeRBAlgebra::from_rota_baxter(fx::line(1), Matrix::identity(1));
    Report rep = check_relative_rb(bad);
    REQUIRE(!rep.ok());
    CHECK(rep.violations()[0].lhs == Vec{1});
    CHECK(rep.violations()[0].rhs == Vec{2});
    CHECK(check_relative_rb(fx::zero_structure(2, 3)).ok());
    CHECK_THROWS_AS(RelativeRBAlgebra(fx::line(1), Bimodule::adjoint(fx::line(1)), Matrix(2, 1)), ShapeError);
}

TEST_CASE("random fixtures pass and agree with the reference evaluator") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        auto x = fx::random_rrb(rng);
        INFO(fx::describe(x));
        CHECK(check_relative_rb_full(x).ok());
        CHECK(oracle::relative_rb_holds(x));
        auto y = x;
        y.R = fx::mutate(rng, x.R);
        CHECK(check_relative_rb(y).ok() == oracle::relative_rb_holds(y));
    }
}

TEST_CASE("morphism examples") {
    std::mt19937 rng(4);
    for (int t = 0; t < 20; ++t) {
        auto x = fx::random_rrb(rng);
        CHECK(check_morphism({x, x, Matrix::identity(x.dim_a()), Matrix::identity(x.dim_m())}).ok());
        auto y = fx::random_rrb(rng);
        CHECK(check_morphism({x, y, Matrix(y.dim_a(), x.dim_a()), Matrix(y.dim_m(), x.dim_m())}).ok());
    }
    auto x = fx::unit_zero_r();
    Report scaled_phi = check_morphism({x, x, Rational(2) * Matrix::identity(1), Matrix::identity(1)});
    REQUIRE(!scaled_phi.ok());
    CHECK(scaled_phi.first_failure() == "phi(xy) = phi(x)phi(y)");
    CHECK(scaled_phi.violations()[0].lhs == Vec{2});
    CHECK(scaled_phi.violations()[0].rhs == Vec{4});
    // phi = id, psi = 2 id still intertwines the actions.
    CHECK(check_morphism({x, x, Matrix::identity(1), Rational(2) * Matrix::identity(1)}).ok());
    // phi R = S psi is the last condition checked.
    auto z = fx::square_zero_identity();
    Report op = check_morphism({z, z, Matrix::identity(1), Rational(2) * Matrix::identity(1)});
    CHECK(op.first_failure() == "phi R = S psi");
}

TEST_CASE("basis transports are morphisms") {
    std::mt19937 rng(41);
    for (int t = 0; t < 30; ++t) {
        auto x = fx::random_rrb(rng);
        Matrix p = fx::random_invertible(rng, x.dim_a()), q = fx::random_invertible(rng, x.dim_m());
        auto y = fx::transport(x, p, q);
        CHECK(check_relative_rb(y).ok());
        CHECK(check_morphism({x, y, inverse(p), inverse(q)}).ok());
        CHECK(check_morphism({y, x, p, q}).ok());
    }
}

TEST_CASE("lift to a Rota-Baxter operator") {
    auto zero = fx::unit_zero_r();
    LiftedRB l = lift_to_rb(zero);
    CHECK(l.R == Matrix(2, 2));
    CHECK(check_rota_baxter(l.algebra, l.R).ok());

    auto bad = RelativeRBAlgebra::from_rota_baxter(fx::line(1), Matrix::identity(1));
    Report base = check_relative_rb(bad);
    LiftedRB lb = lift_to_rb(bad);
    Report lifted = check_rota_baxter(lb.algebra, lb.R);
    REQUIRE(!lifted.ok());
    // The failing pair (m, m') = (e, e) sits at the M-coordinates (1, 1).
    bool matched = false;
    for (const auto& v : lifted.violations()) matched |= v.tuple == std::vector<std::size_t>{1, 1};
    CHECK(matched);
    CHECK(base.violations()[0].tuple == std::vector<std::size_t>{0, 0});

    std::mt19937 rng(13);
    int failing = 0;
    for (int t = 0; t < 80; ++t) {
        auto x = fx::random_rrb(rng);
        if (t % 2 == 1) x.R = fx::mutate(rng, x.R);
        LiftedRB lr = lift_to_rb(x);
        const bool rrb_ok = check_relative_rb(x).ok();
        failing += rrb_ok ? 0 : 1;
        CHECK(rrb_ok == check_rota_baxter(lr.algebra, lr.R).ok());
    }
    CHECK(failing > 0);
}

TEST_CASE("induced dendriform structure") {
    auto z = fx::unit_zero_r();
    auto d = induced_dendriform(z);
    CHECK(d.dendriform == DendriformAlgebra::zero(1));
    auto zs = induced_dendriform(fx::zero_structure(2, 2));
    CHECK(zs.dendriform == DendriformAlgebra::zero(2));
    std::mt19937 rng(19);
    for (int t = 0; t < 50; ++t) {
        auto x = fx::random_rrb(rng);
        auto ind = induced_dendriform(x);
        CHECK(check_dendriform(ind.dendriform).ok());
        CHECK(check_associativity(ind.total).ok());
        CHECK(ind.morphism.ok());
        // R(m * m') = R(m)R(m') by direct evaluation.
        for (std::size_t i = 0; i < x.dim_m(); ++i) {
            for (std::size_t j = 0; j < x.dim_m(); ++j) {
                Vec m = unit_vec(x.dim_m(), i), mp = unit_vec(x.dim_m(), j);
                Vec star = oracle::eval(x.module.left, {x.R * m, mp}) + oracle::eval(x.module.right, {m, x.R * mp});
                CHECK(x.R * star == oracle::eval(x.algebra.mu, {x.R * m, x.R * mp}));
                CHECK(ind.total.mul(m, mp) == star);
            }
        }
    }
}

TEST_CASE("r-matrix examples") {
    AssocAlgebra p2 = fx::truncated_poly(2);
    RMatrix zero{p2, Matrix(2, 2)};
    CHECK(aybe_check(zero).ok());
    CHECK(rb_from_r_matrix(zero).second == Matrix(2, 2));

    RMatrix xx{p2, Matrix{{0, 0}, {0, 1}}};
    CHECK(aybe_check(xx).ok());
    CHECK(rb_from_r_matrix(xx).second == Matrix(2, 2));

    RMatrix one{p2, Matrix{{1, 0}, {0, 0}}};
    Report rep = aybe_check(one);
    REQUIRE(rep.violations().size() == 1);
    CHECK(rep.violations()[0].tuple == std::vector<std::size_t>{0, 0, 0});
    CHECK(rep.violations()[0].lhs == Vec{1});
}

TEST_CASE("AYBE solutions give Rota-Baxter operators and bimodules") {
    std::mt19937 rng(31);
    const std::vector<AssocAlgebra> algebras{fx::truncated_poly(2), fx::truncated_poly(3), fx::upper_triangular(),
                                             fx::heisenberg(), fx::line(1)};
    int solutions = 0, nonzero = 0;
    for (const auto& a : algebras) {
        const std::size_t n = a.dim();
        for (int t = 0; t < 400; ++t) {
            Matrix r(n, n);
            const int nz = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int s = 0; s < nz; ++s) {
                auto i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                auto j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                r(i, j) = std::uniform_int_distribution<int>(-2, 2)(rng);
            }
            RMatrix rm{a, r};
            if (!aybe_check(rm).ok()) continue;
            ++solutions;
            auto [alg, op] = rb_from_r_matrix(rm);
            if (!op.is_zero()) ++nonzero;
            CHECK(check_rota_baxter(alg, op).ok());
            for (const Bimodule& m : {Bimodule::adjoint(a), dual_bimodule(Bimodule::adjoint(a)), Bimodule::zero(n, 2)}) {
                LinearMap rmm = rb_bimodule_from_r_matrix(rm, m);
                CHECK(check_rb_bimodule(alg, op, m, rmm).ok());
            }
        }
    }
    CHECK(solutions > 20);
    CHECK(nonzero > 0);
}

TEST_CASE("endomorphism relative Rota-Baxter algebra examples") {
    TwoTermComplex zero{1, 1, Matrix(1, 1)};
    auto e0 = endomorphism_rrb(zero);
    CHECK(e0.dim_a() == 2);
    CHECK(e0.dim_m() == 1);
    CHECK(e0.R.is_zero());
    TwoTermComplex iso{1, 1, Matrix::identity(1)};
    auto e1 = endomorphism_rrb(iso);
    CHECK(e1.dim_a() == 1);
    CHECK(e1.dim_m() == 0);
    TwoTermComplex incl{2, 1, Matrix{{1}, {0}}};
    auto e2 = endomorphism_rrb(incl);
    CHECK(e2.dim_a() == 3);
    CHECK(e2.dim_m() == 0);
    for (const auto& e : {e0, e1, e2}) CHECK(check_relative_rb_full(e).ok());
}

TEST_CASE("endomorphism algebras of random complexes pass") {
    std::mt19937 rng(53);
    int nontrivial = 0;
    for (int t = 0; t < 40; ++t) {
        TwoTermComplex c;
        c.dim0 = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        c.dim1 = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        c.d = fx::random_matrix(rng, c.dim0, c.dim1, -1, 1);
        auto x = endomorphism_rrb(c);
        CHECK(check_relative_rb_full(x).ok());
        nontrivial += x.R.is_zero() ? 0 : 1;
    }
    CHECK(nontrivial > 0);
}
