#pragma once

// Bulk and boundary vertex weights, their cleared (denominator-free)
// forms, symbolic weight builders, and the exhaustive weight-symmetry
// checks.
//
// Weight table (parameter u, global parameter q):
//   bulk   B5,B6 -> 1      B1,B2 -> sigma(q^2 u)/sigma(q^4)
//                          B3,B4 -> sigma(q^2/u)/sigma(q^4)
//   left   L3,L4 -> 1      L1,L2 -> sigma(q u)/sigma(q)
//   right  R3,R4 -> 1      R1,R2 -> sigma(q/u)/sigma(q)
//   top, bottom  -> 1
// Cleared weights multiply bulk rows by sigma(q^4) and boundary rows by
// sigma(q), so products of cleared weights over a configuration give the
// partition function times sigma(q)^(2n) sigma(q^4)^(n^2).

#include "trisix/report.hpp"
#include "trisix/scalar.hpp"
#include "trisix/six_vertex.hpp"

namespace trisix {

struct WeightContext {
    ExactScalar q;
};

// Table value; throws a domain error naming the vanishing denominator when
// sigma(q) or sigma(q^4) is zero for a kind that divides by it.
ExactScalar weight(LocalConfigKind c, const ExactScalar& u, const WeightContext& ctx);
// Denominator-free weight, defined for every q.
ExactScalar weight_cleared(LocalConfigKind c, const ExactScalar& u, const WeightContext& ctx);

// Variable list (q, u1, ..., u_{n+1}) shared by all symbolic work at
// order n.
VarSet z_vars(int n);

// sigma(monomial) = monomial - 1/monomial over the given variables.
LaurentPoly sigma_of_monomial(const VarSet& vars, const std::vector<int>& exps);

// Cleared weight as a Laurent polynomial; `param_exps` is the exponent
// vector of the spectral parameter monomial (e.g. q^0 u_i^1 u_j^1).
LaurentPoly weight_cleared_symbolic(LocalConfigKind c, const VarSet& vars,
                                    const std::vector<int>& param_exps);

// Exhaustive symbolic check of the diagonal-reflection/arrow-reversal
// invariance, the vertical-reflection u -> 1/u relation, and the
// reduction of bulk weights at q^{+-2} / boundary weights at q^{+-1}.
Report verify_weight_symmetries();

}  // namespace trisix
