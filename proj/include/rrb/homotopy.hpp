#pragma once

#include <tuple>

#include "rrb/cohomology.hpp"

namespace rrb {

/// 2-term A-infinity algebra A_1 --d--> A_0 with mu_2 on A_i x A_j (i + j <= 1)
/// and mu_3: A_0^3 -> A_1.
struct TwoTermAInfty {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    LinearMap d;       // A_1 -> A_0
    Multilinear mu00;  // A_0 x A_0 -> A_0
    Multilinear mu01;  // A_0 x A_1 -> A_1
    Multilinear mu10;  // A_1 x A_0 -> A_1
    Multilinear mu3;   // A_0 x A_0 x A_0 -> A_1

    static TwoTermAInfty zero(std::size_t dim0, std::size_t dim1);
    friend bool operator==(const TwoTermAInfty&, const TwoTermAInfty&) = default;
};

/// Bimodule M_1 --d--> M_0 over a 2-term A-infinity algebra.
struct AInftyBimodule {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    LinearMap d;          // M_1 -> M_0
    Multilinear a0m0;     // A_0 x M_0 -> M_0
    Multilinear a0m1;     // A_0 x M_1 -> M_1
    Multilinear a1m0;     // A_1 x M_0 -> M_1
    Multilinear m0a0;     // M_0 x A_0 -> M_0
    Multilinear m1a0;     // M_1 x A_0 -> M_1
    Multilinear m0a1;     // M_0 x A_1 -> M_1
    Multilinear mu3_maa;  // M_0 x A_0 x A_0 -> M_1
    Multilinear mu3_ama;  // A_0 x M_0 x A_0 -> M_1
    Multilinear mu3_aam;  // A_0 x A_0 x M_0 -> M_1

    static AInftyBimodule zero(const TwoTermAInfty& a, std::size_t dim0, std::size_t dim1);
    friend bool operator==(const AInftyBimodule&, const AInftyBimodule&) = default;
};

/// R_0: M_0 -> A_0, R_1: M_1 -> A_1, R_2: M_0 x M_0 -> A_1.
struct HomotopyRRBOperator {
    LinearMap R0;
    LinearMap R1;
    Multilinear R2;

    friend bool operator==(const HomotopyRRBOperator&, const HomotopyRRBOperator&) = default;
};

/// Identities (i)-(iv) on all basis tuples. Throws ShapeError on inconsistent shapes.
Report check_two_term_ainfty(const TwoTermAInfty& a);
/// Every identity (i)-(iv) with exactly one variable moved into the bimodule.
Report check_ainfty_bimodule(const TwoTermAInfty& a, const AInftyBimodule& m);
/// Conditions (i)-(v); in (v) the mu_3^M terms lie in M_1 and enter through R_1.
Report check_homotopy_rrb_operator(const TwoTermAInfty& a, const AInftyBimodule& m, const HomotopyRRBOperator& r);

struct SkeletalData {
    TwoTermAInfty algebra;
    AInftyBimodule module;
    HomotopyRRBOperator op;
};

struct Triple {
    RelativeRBAlgebra x;
    RRBBimodule b;
    RRBCochain c;
};

/// (A_0, mu_2) with module M_0 and operator R_0; bimodule M_1 --R_1--> A_1 with
/// l = mu_2(M_0, A_1), r = mu_2(A_1, M_0); cocycle (mu_3, mu_3^M, R_2).
/// Throws PreconditionError unless d = d^M = 0 and the triple passes its checks.
Triple skeletal_to_triple(const SkeletalData& s);
/// A = (B --0--> A, mu_2, alpha), M = (N --0--> M, mu_2^M, beta), R = (R, S, gamma).
/// Throws PreconditionError unless c is a 3-cocycle.
SkeletalData triple_to_skeletal(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c);

}  // namespace rrb
