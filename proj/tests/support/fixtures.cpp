#include "support/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "rrb/linalg.hpp"

namespace fx {

namespace {

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix id(std::size_t n) { return Matrix::identity(n); }

}  // namespace

AssocAlgebra line(long c) {
    Multilinear mu(1, {1, 1});
    mu.at(0, {0, 0}) = Rational(c);
    return AssocAlgebra(mu, {"e"});
}

AssocAlgebra truncated_poly(std::size_t n) {
    Multilinear mu(n, {n, n});
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
        for (std::size_t j = 0; i + j < n; ++j) mu.at(i + j, {i, j}) = Rational(1);
    }
    return AssocAlgebra(mu, names);
}

LinearMap integration(std::size_t n) {
    LinearMap r(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) r(i + 1, i) = Rational(1, static_cast<long long>(i + 1));
    return r;
}

AssocAlgebra upper_triangular() {
    // e11 = 0, e12 = 1, e22 = 2
    Multilinear mu(3, {3, 3});
    mu.at(0, {0, 0}) = 1;
    mu.at(1, {0, 1}) = 1;
    mu.at(1, {1, 2}) = 1;
    mu.at(2, {2, 2}) = 1;
    return AssocAlgebra(mu, {"e11", "e12", "e22"});
}

AssocAlgebra heisenberg() {
    Multilinear mu(3, {3, 3});
    mu.at(2, {0, 1}) = 1;
    return AssocAlgebra(mu, {"x", "y", "z"});
}

LinearMap heisenberg_degree() { return Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}; }

DifferentialPair heisenberg_differential_pair() {
    AssocAlgebra a = heisenberg();
    Bimodule adj = Bimodule::adjoint(a);
    return {a, adj, heisenberg_degree(), adj, adj, heisenberg_degree(), a.mu, a.mu};
}

RelativeRBAlgebra unit_zero_r() { return RelativeRBAlgebra::from_rota_baxter(line(1), Matrix(1, 1)); }

RelativeRBAlgebra square_zero_identity() { return RelativeRBAlgebra::from_rota_baxter(line(0), id(1)); }

RelativeRBAlgebra zero_structure(std::size_t na, std::size_t nm) {
    Matrix r(na, nm);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nm; ++j) r(i, j) = 1;
    }
    return RelativeRBAlgebra(AssocAlgebra::zero(na), Bimodule::zero(na, nm), r);
}

RelativeRBAlgebra integration_rrb(std::size_t n) {
    return RelativeRBAlgebra::from_rota_baxter(truncated_poly(n), integration(n));
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
    }
    return m;
}

Vec random_vec(std::mt19937& rng, std::size_t n, int lo, int hi) {
    Vec v(n);
    for (auto& x : v) x = uniform(rng, lo, hi);
    return v;
}

Multilinear random_multilinear(std::mt19937& rng, std::size_t out, std::vector<std::size_t> in, int lo, int hi) {
    Multilinear f(out, std::move(in));
    f.matrix() = random_matrix(rng, f.matrix().rows(), f.matrix().cols(), lo, hi);
    return f;
}

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
    Matrix lower = id(n), upper = id(n), perm(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = uniform(rng, -1, 1);
            upper(j, i) = uniform(rng, -1, 1);
        }
    }
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    for (std::size_t i = 0; i < n; ++i) perm(i, p[i]) = uniform(rng, 0, 1) == 0 ? 1 : 2;
    return lower * perm * upper;
}

AssocAlgebra transport(const AssocAlgebra& a, const Matrix& p) {
    return AssocAlgebra(a.mu.precompose({p, p}).then(inverse(p)));
}

Bimodule transport(const Bimodule& m, const Matrix& p, const Matrix& q) {
    const Matrix qi = inverse(q);
    return Bimodule(m.left.precompose({p, q}).then(qi), m.right.precompose({q, p}).then(qi));
}

RelativeRBAlgebra transport(const RelativeRBAlgebra& x, const Matrix& p, const Matrix& q) {
    return RelativeRBAlgebra(transport(x.algebra, p), transport(x.module, p, q), inverse(p) * x.R * q);
}

RRBBimodule transport(const RRBBimodule& b, const Matrix& p, const Matrix& q, const Matrix& u, const Matrix& v) {
    const Matrix vi = inverse(v);
    return RRBBimodule(transport(b.over, p, q), transport(b.B, p, u), transport(b.N, p, v), inverse(u) * b.S * v,
                       b.l.precompose({q, u}).then(vi), b.r.precompose({u, q}).then(vi));
}

namespace {

RelativeRBAlgebra base_rrb(std::mt19937& rng) {
    switch (uniform(rng, 0, 8)) {
        case 0:
            return integration_rrb(static_cast<std::size_t>(uniform(rng, 2, 3)));
        case 1:
            return square_zero_identity();
        case 2:
            return unit_zero_r();
        case 3: {
            auto na = static_cast<std::size_t>(uniform(rng, 1, 2));
            auto nm = static_cast<std::size_t>(uniform(rng, 1, 2));
            return RelativeRBAlgebra(AssocAlgebra::zero(na), Bimodule::zero(na, nm), random_matrix(rng, na, nm));
        }
        case 4: {
            // D --id--> D_Tot for the dendriform structure induced by integration.
            auto d = induced_dendriform(integration_rrb(3)).dendriform;
            return dendriform_to_rrb(d, DendriformRepresentation::adjoint(d)).first;
        }
        case 5:
            return semidirect_rrb(coadjoint_bimodule(integration_rrb(2)));
        case 6: {
            TwoTermComplex c;
            c.dim0 = static_cast<std::size_t>(uniform(rng, 1, 2));
            c.dim1 = static_cast<std::size_t>(uniform(rng, 1, 2));
            c.d = random_matrix(rng, c.dim0, c.dim1, -1, 1);
            return endomorphism_rrb(c);
        }
        case 7:
            return invert_differential_pair(heisenberg_differential_pair()).first;
        default: {
            // Rota-Baxter operator on upper triangular matrices: R(e11) = e12, zero elsewhere.
            Matrix r(3, 3);
            r(1, 0) = uniform(rng, 1, 2);
            return RelativeRBAlgebra::from_rota_baxter(upper_triangular(), r);
        }
    }
}

}  // namespace

RelativeRBAlgebra random_rrb(std::mt19937& rng) {
    RelativeRBAlgebra x = base_rrb(rng);
    if (uniform(rng, 0, 3) == 0) return x;
    return transport(x, random_invertible(rng, x.dim_a()), random_invertible(rng, x.dim_m()));
}

RRBBimodule random_bimodule(std::mt19937& rng, const RelativeRBAlgebra& x) {
    RRBBimodule b;
    switch (uniform(rng, 0, 4)) {
        case 0:
            b = adjoint_bimodule(x);
            break;
        case 1:
            b = coadjoint_bimodule(x);
            break;
        case 2:
            b = RRBBimodule::zero(x, static_cast<std::size_t>(uniform(rng, 1, 2)),
                                  static_cast<std::size_t>(uniform(rng, 1, 2)));
            break;
        case 3: {
            // Induced along the inclusion of x into its semidirect product with the adjoint bimodule.
            RelativeRBAlgebra big = semidirect_rrb(adjoint_bimodule(x));
            Matrix phi(big.dim_a(), x.dim_a()), psi(big.dim_m(), x.dim_m());
            phi.set_block(0, 0, id(x.dim_a()));
            psi.set_block(0, 0, id(x.dim_m()));
            b = morphism_induced_bimodule({x, big, phi, psi});
            break;
        }
        default:
            b = dual_rrb_bimodule(adjoint_bimodule(x));
            b = dual_rrb_bimodule(b);
            break;
    }
    if (uniform(rng, 0, 2) == 0) return b;
    return transport(b, id(x.dim_a()), id(x.dim_m()), random_invertible(rng, b.dim_b()),
                     random_invertible(rng, b.dim_n()));
}

DendriformAlgebra random_dendriform(std::mt19937& rng) {
    while (true) {
        RelativeRBAlgebra x = random_rrb(rng);
        if (x.dim_m() <= 3) return induced_dendriform(x).dendriform;
    }
}

Multilinear mutate(std::mt19937& rng, const Multilinear& f) {
    Multilinear g = f;
    g.matrix() = mutate(rng, f.matrix());
    return g;
}

Matrix mutate(std::mt19937& rng, const Matrix& f) {
    Matrix g = f;
    if (g.rows() == 0 || g.cols() == 0) return g;
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(g.rows()) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(g.cols()) - 1));
    g(i, j) += 1;
    return g;
}

std::string describe(const RelativeRBAlgebra& x) {
    std::ostringstream os;
    os << "dim A = " << x.dim_a() << ", dim M = " << x.dim_m() << "\nmu = " << x.algebra.mu.matrix().str()
       << "\nleft = " << x.module.left.matrix().str() << "\nright = " << x.module.right.matrix().str()
       << "\nR = " << x.R.str();
    return os.str();
}

}  // namespace fx
