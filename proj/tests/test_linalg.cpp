#include <random>

#include "doctest.h"
#include "rrb/error.hpp"
#include "rrb/linalg.hpp"
#include "support/fixtures.hpp"

using namespace rrb;

TEST_CASE("rational arithmetic stays reduced and exact") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS(Rational(0).inverse());
    // Promotion to arbitrary precision and back.
    Rational big(1LL << 62);
    Rational sq = big * big * big;
    CHECK(sq / (big * big) == big);
    CHECK((sq - sq).is_zero());
    CHECK((Rational(1, 3) * Rational(3)).is_one());
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(2, 2)) == 0);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(SparseMatrix::from_dense(Matrix{{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(Matrix::identity(2)).empty());
    CHECK(kernel_basis(Matrix(1, 2)).size() == 2);
    auto k = kernel_basis(Matrix{{1, 2}, {2, 4}});
    REQUIRE(k.size() == 1);
    // proportional to (2, -1)
    CHECK(k[0][0] * Rational(-1) == k[0][1] * Rational(2));
    CHECK(!is_zero(k[0]));
}

TEST_CASE("solve examples") {
    auto x = solve(Matrix::identity(2), Vec{3, 5});
    REQUIRE(x);
    CHECK(*x == Vec{3, 5});
    CHECK(!solve(Matrix(2, 2), Vec{1, 0}));
    auto y = solve(Matrix{{2, 0}, {0, 4}}, Vec{1, 1});
    REQUIRE(y);
    CHECK(*y == Vec{Rational(1, 2), Rational(1, 4)});
    CHECK_THROWS_AS(solve(Matrix(2, 2), Vec{1}), ShapeError);
}

TEST_CASE("homology dimension examples") {
    const std::size_t n = 3;
    CHECK(homology_dim(Matrix(1, n), Matrix(n, 1)) == n);
    CHECK(homology_dim(Matrix::identity(2), Matrix(2, 1)) == 0);
    CHECK(homology_dim(Matrix{{1, 2}}, Matrix{{2}, {-1}}) == 0);
    CHECK_THROWS_AS(homology_dim(Matrix{{1, 2}}, Matrix{{1}, {1}}), PreconditionError);
    CHECK_THROWS_AS(homology_dim(Matrix{{1, 2}}, Matrix{{1}}), ShapeError);
    CHECK(homology_dim(SparseMatrix::from_dense(Matrix{{1, 2}}), SparseMatrix::from_dense(Matrix{{2}, {-1}})) == 0);
}

TEST_CASE("inverse") {
    Matrix m{{1, 2}, {3, 4}};
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), PreconditionError);
}

TEST_CASE("tensor index flatten/unflatten are inverse and big-endian") {
    TensorIndex idx({2, 3, 4});
    CHECK(idx.size() == 24);
    std::vector<std::size_t> t{1, 2, 3};
    CHECK(idx.flatten(t) == 1 * 12 + 2 * 4 + 3);
    std::size_t expected = 0;
    idx.for_each([&](const std::vector<std::size_t>& multi, std::size_t flat) {
        CHECK(flat == expected++);
        CHECK(idx.unflatten(flat) == multi);
        CHECK(idx.flatten(multi) == flat);
    });
}

TEST_CASE("linear algebra properties on random matrices") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const auto cols = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        // Low-rank products exercise the kernel.
        const auto inner = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        Matrix m = fx::random_matrix(rng, rows, inner, -3, 3) * fx::random_matrix(rng, inner, cols, -3, 3);
        const std::size_t r = rank(m);
        auto ker = kernel_basis(m);
        CHECK(r + ker.size() == cols);
        CHECK(rank(SparseMatrix::from_dense(m)) == r);
        CHECK(rank(m.transpose()) == r);
        for (const auto& v : ker) CHECK(is_zero(m * v));
        if (!ker.empty()) CHECK(rank(Matrix::from_columns(cols, ker)) == ker.size());

        Vec rhs = fx::random_vec(rng, rows);
        auto x = solve(m, rhs);
        Matrix aug(rows, cols + 1);
        aug.set_block(0, 0, m);
        aug.set_column(cols, rhs);
        if (x) {
            CHECK(m * *x == rhs);
        } else {
            CHECK(rank(aug) > r);
        }
        Vec reachable = m * fx::random_vec(rng, cols);
        auto y = solve(m, reachable);
        REQUIRE(y);
        CHECK(m * *y == reachable);
        CHECK(in_column_span(m, reachable));
    }
}

TEST_CASE("sparse and dense products agree") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix a = fx::random_matrix(rng, 4, 5, -1, 1);
        Matrix b = fx::random_matrix(rng, 5, 3, -1, 1);
        SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
        CHECK((sa * sb).to_dense() == a * b);
        CHECK((sa + sa).to_dense() == a + a);
        CHECK(sa.transpose().to_dense() == a.transpose());
        Vec v = fx::random_vec(rng, 5);
        CHECK(sa * v == a * v);
    }
}
