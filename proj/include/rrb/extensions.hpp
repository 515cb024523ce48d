#pragma once

#include <optional>

#include "rrb/cohomology.hpp"

namespace rrb {

/// Short exact sequence N --> M^ --> M over B --> A^ --> A of relative
/// Rota-Baxter algebras, the fiber N --S--> B carrying trivial structure.
struct AbelianExtension {
    RelativeRBAlgebra base;
    std::size_t dim_b = 0;
    std::size_t dim_n = 0;
    LinearMap S;
    RelativeRBAlgebra total;
    LinearMap i;     // B -> A^
    LinearMap ibar;  // N -> M^
    LinearMap p;     // A^ -> A
    LinearMap pbar;  // M^ -> M
};

/// The fiber N --S--> B with zero multiplication and zero actions.
RelativeRBAlgebra fiber_algebra(const AbelianExtension& e);

/// Exactness of both rows and the morphism conditions on (i, ibar) and (p, pbar).
Report check_extension(const AbelianExtension& e);

/// s: A -> A^ and sbar: M -> M^ with p s = id and pbar sbar = id.
struct Section {
    LinearMap s;
    LinearMap sbar;
};

Report check_section(const AbelianExtension& e, const Section& sec);
/// The section obtained by solving p x = a on basis vectors; for a built
/// extension this is s(a) = (a, 0), sbar(m) = (m, 0).
Section canonical_section(const AbelianExtension& e);

/// A^ = A + B with (a,b)(a',b') = (aa', a.b' + b.a' + alpha(a,a')),
/// M^ = M + N with (a,b).(m,n) = (a.m, a.n + r(b,m) + beta(a,m)) and
/// (m,n).(a,b) = (m.a, l(m,b) + n.a + beta(m,a)), R^(m,n) = (R(m), S(n) + gamma(m)).
/// Throws PreconditionError if c is not a 2-cocycle.
AbelianExtension build_extension(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c);

/// alpha(a,a') = s(a)s(a') - s(aa'), beta(a,m) = s(a).sbar(m) - sbar(a.m),
/// beta(m,a) = sbar(m).s(a) - sbar(m.a), gamma(m) = R^(sbar(m)) - s(R(m)),
/// read back in fiber coordinates against the induced bimodule.
RRBCochain extract_cocycle(const AbelianExtension& e, const Section& sec);

/// a.b = s(a) i(b), b.a = i(b) s(a), a.n = s(a).ibar(n), n.a = ibar(n).s(a),
/// l(m,b) = sbar(m).i(b), r(b,m) = i(b).sbar(m).
RRBBimodule induced_fiber_bimodule(const AbelianExtension& e, const Section& sec);

/// Some (theta, vartheta) with c1 - c2 = delta(theta, vartheta), if any.
std::optional<RRBCochain> find_cobounding(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c1,
                                          const RRBCochain& c2);

/// phi(a,b) = (a, b + theta(a)), psi(m,n) = (m, n + vartheta(m)) from the
/// extension of c1 to that of c2. Throws PreconditionError unless
/// c1 - c2 = delta(theta, vartheta) for the cocycles read off with canonical sections.
RRBMorphism extension_iso_from_cobounding(const AbelianExtension& e1, const AbelianExtension& e2,
                                          const LinearMap& theta, const LinearMap& vartheta);

/// Morphism check plus phi i = i', psi ibar = ibar', p' phi = p, pbar' psi = pbar
/// and invertibility of phi and psi.
Report check_extension_isomorphism(const AbelianExtension& e1, const AbelianExtension& e2, const RRBMorphism& m);

}  // namespace rrb
