#include "rrb/homotopy.hpp"

#include "rrb/error.hpp"

namespace rrb {

namespace {

void require(const Multilinear& f, std::size_t out, const std::vector<std::size_t>& in, const char* what) {
    if (f.out_dim() != out || f.in_dims() != in) throw ShapeError(std::string(what) + " has the wrong shape");
}

void require(const LinearMap& f, std::size_t rows, std::size_t cols, const char* what) {
    if (f.rows() != rows || f.cols() != cols) throw ShapeError(std::string(what) + " has the wrong shape");
}

void validate(const TwoTermAInfty& a) {
    const std::size_t n0 = a.dim0, n1 = a.dim1;
    require(a.d, n0, n1, "d");
    require(a.mu00, n0, {n0, n0}, "mu2 on A0 x A0");
    require(a.mu01, n1, {n0, n1}, "mu2 on A0 x A1");
    require(a.mu10, n1, {n1, n0}, "mu2 on A1 x A0");
    require(a.mu3, n1, {n0, n0, n0}, "mu3");
}

void validate(const TwoTermAInfty& a, const AInftyBimodule& m) {
    validate(a);
    const std::size_t a0 = a.dim0, a1 = a.dim1, m0 = m.dim0, m1 = m.dim1;
    require(m.d, m0, m1, "d^M");
    require(m.a0m0, m0, {a0, m0}, "mu2^M on A0 x M0");
    require(m.a0m1, m1, {a0, m1}, "mu2^M on A0 x M1");
    require(m.a1m0, m1, {a1, m0}, "mu2^M on A1 x M0");
    require(m.m0a0, m0, {m0, a0}, "mu2^M on M0 x A0");
    require(m.m1a0, m1, {m1, a0}, "mu2^M on M1 x A0");
    require(m.m0a1, m1, {m0, a1}, "mu2^M on M0 x A1");
    require(m.mu3_maa, m1, {m0, a0, a0}, "mu3^M on M0 x A0 x A0");
    require(m.mu3_ama, m1, {a0, m0, a0}, "mu3^M on A0 x M0 x A0");
    require(m.mu3_aam, m1, {a0, a0, m0}, "mu3^M on A0 x A0 x M0");
}

Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i); }

}  // namespace

TwoTermAInfty TwoTermAInfty::zero(std::size_t dim0, std::size_t dim1) {
    return {dim0,
            dim1,
            Matrix(dim0, dim1),
            Multilinear(dim0, {dim0, dim0}),
            Multilinear(dim1, {dim0, dim1}),
            Multilinear(dim1, {dim1, dim0}),
            Multilinear(dim1, {dim0, dim0, dim0})};
}

AInftyBimodule AInftyBimodule::zero(const TwoTermAInfty& a, std::size_t dim0, std::size_t dim1) {
    const std::size_t a0 = a.dim0, a1 = a.dim1;
    return {dim0,
            dim1,
            Matrix(dim0, dim1),
            Multilinear(dim0, {a0, dim0}),
            Multilinear(dim1, {a0, dim1}),
            Multilinear(dim1, {a1, dim0}),
            Multilinear(dim0, {dim0, a0}),
            Multilinear(dim1, {dim1, a0}),
            Multilinear(dim1, {dim0, a1}),
            Multilinear(dim1, {dim0, a0, a0}),
            Multilinear(dim1, {a0, dim0, a0}),
            Multilinear(dim1, {a0, a0, dim0})};
}

Report check_two_term_ainfty(const TwoTermAInfty& a) {
    validate(a);
    const std::size_t n0 = a.dim0, n1 = a.dim1;
    const auto& d = a.d;
    auto mu = [&](const Vec& x, const Vec& y) { return a.mu00(x, y); };
    auto ap = [&](const Vec& x, const Vec& p) { return a.mu01(x, p); };
    auto pa = [&](const Vec& p, const Vec& x) { return a.mu10(p, x); };
    auto mu3 = [&](const Vec& x, const Vec& y, const Vec& z) { return a.mu3(x, y, z); };
    Report rep;
    check_identity(rep, "(i) d mu2(a, p) = mu2(a, dp)", {n0, n1}, [&](const auto& t) {
        Vec x = e(n0, t[0]), p = e(n1, t[1]);
        return std::pair{d * ap(x, p), mu(x, d * p)};
    });
    check_identity(rep, "(i) d mu2(p, a) = mu2(dp, a)", {n1, n0}, [&](const auto& t) {
        Vec p = e(n1, t[0]), x = e(n0, t[1]);
        return std::pair{d * pa(p, x), mu(d * p, x)};
    });
    check_identity(rep, "(ii) mu2(dp, q) = mu2(p, dq)", {n1, n1}, [&](const auto& t) {
        Vec p = e(n1, t[0]), q = e(n1, t[1]);
        return std::pair{ap(d * p, q), pa(p, d * q)};
    });
    check_identity(rep, "(iii) d mu3(a, b, c) = mu2(mu2(a, b), c) - mu2(a, mu2(b, c))", {n0, n0, n0},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), y = e(n0, t[1]), z = e(n0, t[2]);
                       return std::pair{d * mu3(x, y, z), mu(mu(x, y), z) - mu(x, mu(y, z))};
                   });
    check_identity(rep, "(iii) mu3(a, b, dp) = mu2(mu2(a, b), p) - mu2(a, mu2(b, p))", {n0, n0, n1},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), y = e(n0, t[1]), p = e(n1, t[2]);
                       return std::pair{mu3(x, y, d * p), ap(mu(x, y), p) - ap(x, ap(y, p))};
                   });
    check_identity(rep, "(iii) mu3(a, dp, c) = mu2(mu2(a, p), c) - mu2(a, mu2(p, c))", {n0, n1, n0},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), p = e(n1, t[1]), z = e(n0, t[2]);
                       return std::pair{mu3(x, d * p, z), pa(ap(x, p), z) - ap(x, pa(p, z))};
                   });
    check_identity(rep, "(iii) mu3(dp, b, c) = mu2(mu2(p, b), c) - mu2(p, mu2(b, c))", {n1, n0, n0},
                   [&](const auto& t) {
                       Vec p = e(n1, t[0]), y = e(n0, t[1]), z = e(n0, t[2]);
                       return std::pair{mu3(d * p, y, z), pa(pa(p, y), z) - pa(p, mu(y, z))};
                   });
    check_identity(rep,
                   "(iv) mu3(ab, c, e) - mu3(a, bc, e) + mu3(a, b, ce) = mu2(mu3(a, b, c), e) + mu2(a, mu3(b, c, e))",
                   {n0, n0, n0, n0}, [&](const auto& t) {
                       Vec x = e(n0, t[0]), y = e(n0, t[1]), z = e(n0, t[2]), w = e(n0, t[3]);
                       return std::pair{mu3(mu(x, y), z, w) - mu3(x, mu(y, z), w) + mu3(x, y, mu(z, w)),
                                        pa(mu3(x, y, z), w) + ap(x, mu3(y, z, w))};
                   });
    return rep;
}

Report check_ainfty_bimodule(const TwoTermAInfty& a, const AInftyBimodule& m) {
    validate(a, m);
    const std::size_t n0 = a.dim0, n1 = a.dim1, k0 = m.dim0, k1 = m.dim1;
    const auto& d = a.d;
    const auto& dm = m.d;
    auto mu = [&](const Vec& x, const Vec& y) { return a.mu00(x, y); };
    auto ap = [&](const Vec& x, const Vec& p) { return a.mu01(x, p); };
    auto pa = [&](const Vec& p, const Vec& x) { return a.mu10(p, x); };
    auto mu3 = [&](const Vec& x, const Vec& y, const Vec& z) { return a.mu3(x, y, z); };
    auto am = [&](const Vec& x, const Vec& v) { return m.a0m0(x, v); };
    auto an = [&](const Vec& x, const Vec& n) { return m.a0m1(x, n); };
    auto pm = [&](const Vec& p, const Vec& v) { return m.a1m0(p, v); };
    auto ma = [&](const Vec& v, const Vec& x) { return m.m0a0(v, x); };
    auto na = [&](const Vec& n, const Vec& x) { return m.m1a0(n, x); };
    auto mp = [&](const Vec& v, const Vec& p) { return m.m0a1(v, p); };
    auto maa = [&](const Vec& v, const Vec& x, const Vec& y) { return m.mu3_maa(v, x, y); };
    auto ama = [&](const Vec& x, const Vec& v, const Vec& y) { return m.mu3_ama(x, v, y); };
    auto aam = [&](const Vec& x, const Vec& y, const Vec& v) { return m.mu3_aam(x, y, v); };
    Report rep;
    // (i)
    check_identity(rep, "(i) d mu2(a, p) = mu2(a, dp) [m for a]", {k0, n1}, [&](const auto& t) {
        Vec v = e(k0, t[0]), p = e(n1, t[1]);
        return std::pair{dm * mp(v, p), ma(v, d * p)};
    });
    check_identity(rep, "(i) d mu2(a, p) = mu2(a, dp) [n for p]", {n0, k1}, [&](const auto& t) {
        Vec x = e(n0, t[0]), n = e(k1, t[1]);
        return std::pair{dm * an(x, n), am(x, dm * n)};
    });
    check_identity(rep, "(i) d mu2(p, a) = mu2(dp, a) [m for a]", {n1, k0}, [&](const auto& t) {
        Vec p = e(n1, t[0]), v = e(k0, t[1]);
        return std::pair{dm * pm(p, v), am(d * p, v)};
    });
    check_identity(rep, "(i) d mu2(p, a) = mu2(dp, a) [n for p]", {k1, n0}, [&](const auto& t) {
        Vec n = e(k1, t[0]), x = e(n0, t[1]);
        return std::pair{dm * na(n, x), ma(dm * n, x)};
    });
    // (ii)
    check_identity(rep, "(ii) mu2(dp, q) = mu2(p, dq) [n for p]", {k1, n1}, [&](const auto& t) {
        Vec n = e(k1, t[0]), q = e(n1, t[1]);
        return std::pair{mp(dm * n, q), na(n, d * q)};
    });
    check_identity(rep, "(ii) mu2(dp, q) = mu2(p, dq) [n for q]", {n1, k1}, [&](const auto& t) {
        Vec p = e(n1, t[0]), n = e(k1, t[1]);
        return std::pair{an(d * p, n), pm(p, dm * n)};
    });
    // (iii), first identity
    check_identity(rep, "(iii) d mu3(a, b, c) = mu2(mu2(a, b), c) - mu2(a, mu2(b, c)) [m for a]", {k0, n0, n0},
                   [&](const auto& t) {
                       Vec v = e(k0, t[0]), y = e(n0, t[1]), z = e(n0, t[2]);
                       return std::pair{dm * maa(v, y, z), ma(ma(v, y), z) - ma(v, mu(y, z))};
                   });
    check_identity(rep, "(iii) d mu3(a, b, c) = mu2(mu2(a, b), c) - mu2(a, mu2(b, c)) [m for b]", {n0, k0, n0},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), v = e(k0, t[1]), z = e(n0, t[2]);
                       return std::pair{dm * ama(x, v, z), ma(am(x, v), z) - am(x, ma(v, z))};
                   });
    check_identity(rep, "(iii) d mu3(a, b, c) = mu2(mu2(a, b), c) - mu2(a, mu2(b, c)) [m for c]", {n0, n0, k0},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), y = e(n0, t[1]), v = e(k0, t[2]);
                       return std::pair{dm * aam(x, y, v), am(mu(x, y), v) - am(x, am(y, v))};
                   });
    // (iii), second identity
    check_identity(rep, "(iii) mu3(a, b, dp) = mu2(mu2(a, b), p) - mu2(a, mu2(b, p)) [m for a]", {k0, n0, n1},
                   [&](const auto& t) {
                       Vec v = e(k0, t[0]), y = e(n0, t[1]), p = e(n1, t[2]);
                       return std::pair{maa(v, y, d * p), mp(ma(v, y), p) - mp(v, ap(y, p))};
                   });
    check_identity(rep, "(iii) mu3(a, b, dp) = mu2(mu2(a, b), p) - mu2(a, mu2(b, p)) [m for b]", {n0, k0, n1},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), v = e(k0, t[1]), p = e(n1, t[2]);
                       return std::pair{ama(x, v, d * p), mp(am(x, v), p) - an(x, mp(v, p))};
                   });
    check_identity(rep, "(iii) mu3(a, b, dp) = mu2(mu2(a, b), p) - mu2(a, mu2(b, p)) [n for p]", {n0, n0, k1},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), y = e(n0, t[1]), n = e(k1, t[2]);
                       return std::pair{aam(x, y, dm * n), an(mu(x, y), n) - an(x, an(y, n))};
                   });
    // (iii), third identity
    check_identity(rep, "(iii) mu3(a, dp, c) = mu2(mu2(a, p), c) - mu2(a, mu2(p, c)) [m for a]", {k0, n1, n0},
                   [&](const auto& t) {
                       Vec v = e(k0, t[0]), p = e(n1, t[1]), z = e(n0, t[2]);
                       return std::pair{maa(v, d * p, z), na(mp(v, p), z) - mp(v, pa(p, z))};
                   });
    check_identity(rep, "(iii) mu3(a, dp, c) = mu2(mu2(a, p), c) - mu2(a, mu2(p, c)) [n for p]", {n0, k1, n0},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), n = e(k1, t[1]), z = e(n0, t[2]);
                       return std::pair{ama(x, dm * n, z), na(an(x, n), z) - an(x, na(n, z))};
                   });
    check_identity(rep, "(iii) mu3(a, dp, c) = mu2(mu2(a, p), c) - mu2(a, mu2(p, c)) [m for c]", {n0, n1, k0},
                   [&](const auto& t) {
                       Vec x = e(n0, t[0]), p = e(n1, t[1]), v = e(k0, t[2]);
                       return std::pair{aam(x, d * p, v), pm(ap(x, p), v) - an(x, pm(p, v))};
                   });
    // (iii), fourth identity
    check_identity(rep, "(iii) mu3(dp, b, c) = mu2(mu2(p, b), c) - mu2(p, mu2(b, c)) [n for p]", {k1, n0, n0},
                   [&](const auto& t) {
                       Vec n = e(k1, t[0]), y = e(n0, t[1]), z = e(n0, t[2]);
                       return std::pair{maa(dm * n, y, z), na(na(n, y), z) - na(n, mu(y, z))};
                   });
    check_identity(rep, "(iii) mu3(dp, b, c) = mu2(mu2(p, b), c) - mu2(p, mu2(b, c)) [m for b]", {n1, k0, n0},
                   [&](const auto& t) {
                       Vec p = e(n1, t[0]), v = e(k0, t[1]), z = e(n0, t[2]);
                       return std::pair{ama(d * p, v, z), na(pm(p, v), z) - pm(p, ma(v, z))};
                   });
    check_identity(rep, "(iii) mu3(dp, b, c) = mu2(mu2(p, b), c) - mu2(p, mu2(b, c)) [m for c]", {n1, n0, k0},
                   [&](const auto& t) {
                       Vec p = e(n1, t[0]), y = e(n0, t[1]), v = e(k0, t[2]);
                       return std::pair{aam(d * p, y, v), pm(pa(p, y), v) - pm(p, am(y, v))};
                   });
    // (iv)
    const std::string iv = "(iv) mu3(ab, c, e) - mu3(a, bc, e) + mu3(a, b, ce) = mu2(mu3(a, b, c), e) + mu2(a, mu3(b, c, e))";
    check_identity(rep, iv + " [m for a]", {k0, n0, n0, n0}, [&](const auto& t) {
        Vec v = e(k0, t[0]), y = e(n0, t[1]), z = e(n0, t[2]), w = e(n0, t[3]);
        return std::pair{maa(ma(v, y), z, w) - maa(v, mu(y, z), w) + maa(v, y, mu(z, w)),
                         na(maa(v, y, z), w) + mp(v, mu3(y, z, w))};
    });
    check_identity(rep, iv + " [m for b]", {n0, k0, n0, n0}, [&](const auto& t) {
        Vec x = e(n0, t[0]), v = e(k0, t[1]), z = e(n0, t[2]), w = e(n0, t[3]);
        return std::pair{maa(am(x, v), z, w) - ama(x, ma(v, z), w) + ama(x, v, mu(z, w)),
                         na(ama(x, v, z), w) + an(x, maa(v, z, w))};
    });
    check_identity(rep, iv + " [m for c]", {n0, n0, k0, n0}, [&](const auto& t) {
        Vec x = e(n0, t[0]), y = e(n0, t[1]), v = e(k0, t[2]), w = e(n0, t[3]);
        return std::pair{ama(mu(x, y), v, w) - ama(x, am(y, v), w) + aam(x, y, ma(v, w)),
                         na(aam(x, y, v), w) + an(x, ama(y, v, w))};
    });
    check_identity(rep, iv + " [m for e]", {n0, n0, n0, k0}, [&](const auto& t) {
        Vec x = e(n0, t[0]), y = e(n0, t[1]), z = e(n0, t[2]), v = e(k0, t[3]);
        return std::pair{aam(mu(x, y), z, v) - aam(x, mu(y, z), v) + aam(x, y, am(z, v)),
                         pm(mu3(x, y, z), v) + an(x, aam(y, z, v))};
    });
    return rep;
}

Report check_homotopy_rrb_operator(const TwoTermAInfty& a, const AInftyBimodule& m, const HomotopyRRBOperator& r) {
    validate(a, m);
    const std::size_t k0 = m.dim0, k1 = m.dim1;
    require(r.R0, a.dim0, k0, "R0");
    require(r.R1, a.dim1, k1, "R1");
    require(r.R2, a.dim1, {k0, k0}, "R2");
    const auto& R0 = r.R0;
    const auto& R1 = r.R1;
    auto R2 = [&](const Vec& x, const Vec& y) { return r.R2(x, y); };
    auto mu = [&](const Vec& x, const Vec& y) { return a.mu00(x, y); };
    auto ap = [&](const Vec& x, const Vec& p) { return a.mu01(x, p); };
    auto pa = [&](const Vec& p, const Vec& x) { return a.mu10(p, x); };
    auto am = [&](const Vec& x, const Vec& v) { return m.a0m0(x, v); };
    auto an = [&](const Vec& x, const Vec& n) { return m.a0m1(x, n); };
    auto pm = [&](const Vec& p, const Vec& v) { return m.a1m0(p, v); };
    auto ma = [&](const Vec& v, const Vec& x) { return m.m0a0(v, x); };
    auto na = [&](const Vec& n, const Vec& x) { return m.m1a0(n, x); };
    auto mp = [&](const Vec& v, const Vec& p) { return m.m0a1(v, p); };
    // m * m' = R0(m).m' + m.R0(m')
    auto star = [&](const Vec& x, const Vec& y) { return am(R0 * x, y) + ma(x, R0 * y); };
    Report rep;
    check_identity(rep, "(i) d R1 = R0 d^M", {k1}, [&](const auto& t) {
        Vec n = e(k1, t[0]);
        return std::pair{a.d * (R1 * n), R0 * (m.d * n)};
    });
    check_identity(rep, "(ii) R0(R0(m).m' + m.R0(m')) - mu2(R0(m), R0(m')) = d R2(m, m')", {k0, k0},
                   [&](const auto& t) {
                       Vec x = e(k0, t[0]), y = e(k0, t[1]);
                       return std::pair{R0 * star(x, y) - mu(R0 * x, R0 * y), a.d * R2(x, y)};
                   });
    check_identity(rep, "(iii) R1(R0(m).n + m.R1(n)) - mu2(R0(m), R1(n)) = R2(m, d^M n)", {k0, k1},
                   [&](const auto& t) {
                       Vec x = e(k0, t[0]), n = e(k1, t[1]);
                       return std::pair{R1 * (an(R0 * x, n) + mp(x, R1 * n)) - ap(R0 * x, R1 * n), R2(x, m.d * n)};
                   });
    check_identity(rep, "(iv) R1(R1(n).m + n.R0(m)) - mu2(R1(n), R0(m)) = R2(d^M n, m)", {k1, k0},
                   [&](const auto& t) {
                       Vec n = e(k1, t[0]), x = e(k0, t[1]);
                       return std::pair{R1 * (pm(R1 * n, x) + na(n, R0 * x)) - pa(R1 * n, R0 * x), R2(m.d * n, x)};
                   });
    check_identity(rep, "(v) homotopy Rota-Baxter identity on M0 x M0 x M0", {k0, k0, k0}, [&](const auto& t) {
        Vec x = e(k0, t[0]), y = e(k0, t[1]), z = e(k0, t[2]);
        Vec rx = R0 * x, ry = R0 * y, rz = R0 * z;
        Vec lhs = ap(rx, R2(y, z)) - R1 * mp(x, R2(y, z)) - R2(star(x, y), z) + R2(x, star(y, z)) -
                  pa(R2(x, y), rz) + R1 * pm(R2(x, y), z) +
                  R1 * (m.mu3_maa(x, ry, rz) + m.mu3_ama(rx, y, rz) + m.mu3_aam(rx, ry, z));
        return std::pair{lhs, a.mu3(rx, ry, rz)};
    });
    return rep;
}

Triple skeletal_to_triple(const SkeletalData& s) {
    const auto& a = s.algebra;
    const auto& m = s.module;
    validate(a, m);
    if (!a.d.is_zero() || !m.d.is_zero()) throw PreconditionError("not skeletal: d and d^M must vanish");
    RelativeRBAlgebra x(AssocAlgebra(a.mu00), Bimodule(m.a0m0, m.m0a0), s.op.R0);
    RRBBimodule b(x, Bimodule(a.mu01, a.mu10), Bimodule(m.a0m1, m.m1a0), s.op.R1, m.m0a1, m.a1m0);
    RRBCochain c = RRBCochain::zero(x, b, 3);
    c.alpha = a.mu3;
    c.beta = {m.mu3_maa, m.mu3_ama, m.mu3_aam};
    c.gamma = s.op.R2;
    Report rep = check_relative_rb_full(x);
    rep.merge(check_rrb_bimodule_full(b));
    if (!rep.ok()) throw PreconditionError("skeletal data does not give a bimodule: " + rep.first_failure());
    if (!is_zero(rrb_operator(x, b, 3) * c.flatten())) throw PreconditionError("(mu3, mu3^M, R2) is not a 3-cocycle");
    return {std::move(x), std::move(b), std::move(c)};
}

SkeletalData triple_to_skeletal(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c) {
    if (c.k != 3) throw ShapeError("a skeletal algebra corresponds to a degree-3 cochain");
    check_cochain_shape(x, b, c);
    if (!is_zero(rrb_operator(x, b, 3) * c.flatten())) throw PreconditionError("not a 3-cocycle");
    SkeletalData s;
    s.algebra = {x.dim_a(), b.dim_b(), Matrix(x.dim_a(), b.dim_b()), x.algebra.mu, b.B.left, b.B.right, c.alpha};
    s.module = {x.dim_m(), b.dim_n(), Matrix(x.dim_m(), b.dim_n()), x.module.left, b.N.left, b.r,
                x.module.right, b.N.right, b.l, c.beta[0], c.beta[1], c.beta[2]};
    s.op = {x.R, b.S, c.gamma};
    return s;
}

}  // namespace rrb
