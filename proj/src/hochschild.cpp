#include "rrb/hochschild.hpp"

#include "rrb/error.hpp"
#include "rrb/linalg.hpp"

namespace rrb {

Multilinear zero_cochain(std::size_t out_dim, std::size_t in_dim, std::size_t k) {
    return Multilinear(out_dim, std::vector<std::size_t>(k, in_dim));
}

SparseMatrix hochschild_operator(const AssocAlgebra& a, const Bimodule& m, std::size_t k) {
    if (m.alg_dim() != a.dim()) throw ShapeError("Hochschild complex: bimodule over a different algebra");
    const std::size_t n = a.dim();
    const std::size_t d = m.dim();
    const std::size_t in_cols = ipow(n, k);
    const std::size_t out_cols = ipow(n, k + 1);
    SparseMatrix op(d * out_cols, d * in_cols);
    if (n == 0 || d == 0) {
        op.finalize();
        return op;
    }
    TensorIndex out_idx(std::vector<std::size_t>(k + 1, n));
    TensorIndex in_idx(std::vector<std::size_t>(k, n));
    std::vector<std::size_t> sub(k);
    const Rational last_sign = (k + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    out_idx.for_each([&](const std::vector<std::size_t>& t, std::size_t flat) {
        // a_1 . f(a_2, ..., a_{k+1})
        std::copy(t.begin() + 1, t.end(), sub.begin());
        std::size_t tail = in_idx.flatten(sub);
        for (std::size_t wo = 0; wo < d; ++wo) {
            for (std::size_t w = 0; w < d; ++w) {
                const Rational& c = m.left.at(wo, {t[0], w});
                if (!c.is_zero()) op.add(wo * out_cols + flat, w * in_cols + tail, c);
            }
        }
        // (-1)^i f(.., a_i a_{i+1}, ..)
        for (std::size_t i = 0; i < k; ++i) {
            const Rational sign = (i + 1) % 2 == 0 ? Rational(1) : Rational(-1);
            for (std::size_t p = 0, q = 0; p < k + 1; ++p) {
                if (p == i + 1) continue;
                sub[q++] = t[p];
            }
            for (std::size_t c = 0; c < n; ++c) {
                const Rational& s = a.mu.at(c, {t[i], t[i + 1]});
                if (s.is_zero()) continue;
                sub[i] = c;
                std::size_t col = in_idx.flatten(sub);
                for (std::size_t w = 0; w < d; ++w) op.add(w * out_cols + flat, w * in_cols + col, sign * s);
            }
        }
        // (-1)^{k+1} f(a_1, ..., a_k) . a_{k+1}
        std::copy(t.begin(), t.end() - 1, sub.begin());
        std::size_t head = in_idx.flatten(sub);
        for (std::size_t wo = 0; wo < d; ++wo) {
            for (std::size_t w = 0; w < d; ++w) {
                const Rational& c = m.right.at(wo, {w, t[k]});
                if (!c.is_zero()) op.add(wo * out_cols + flat, w * in_cols + head, last_sign * c);
            }
        }
    });
    op.finalize();
    return op;
}

Multilinear hochschild_differential(const AssocAlgebra& a, const Bimodule& m, const Multilinear& f) {
    const std::size_t k = f.arity();
    for (std::size_t p = 0; p < k; ++p) {
        if (f.in_dims()[p] != a.dim()) throw ShapeError("Hochschild cochain has wrong input dimension");
    }
    if (f.out_dim() != m.dim()) throw ShapeError("Hochschild cochain has wrong output dimension");
    Vec out = hochschild_operator(a, m, k) * f.flatten();
    return Multilinear::unflatten(m.dim(), std::vector<std::size_t>(k + 1, a.dim()), out);
}

std::size_t hochschild_cohomology_dim(const AssocAlgebra& a, const Bimodule& m, std::size_t k) {
    SparseMatrix d_out = hochschild_operator(a, m, k);
    SparseMatrix d_in = k == 0 ? SparseMatrix(m.dim(), 0) : hochschild_operator(a, m, k - 1);
    if (k == 0) d_in.finalize();
    return homology_dim(d_out, d_in);
}

}  // namespace rrb
