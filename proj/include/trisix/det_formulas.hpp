#pragma once

// Closed determinantal right-hand sides for the odd-order DASASM
// partition function, plus Okada's alternating-columns determinant
// identity.  All evaluation is exact; singular inputs raise domain errors
// naming the first vanishing factor so callers can resample.

#include "trisix/determinant.hpp"
#include "trisix/scalar.hpp"

namespace trisix {

struct DetFormulaInput {
    int n = 0;
    std::vector<ExactScalar> u;  // u_1..u_{n+1}
    ExactScalar q;
};

// Prefactor times (det1 + det2), the two (n+1) x (n+1) determinants being
// related by u -> 1/u.  Requires u_j^2 != 1 and all prefactor/entry
// denominators nonzero.
ExactScalar rhs_theorem_full(const DetFormulaInput& in);

// The u_{n+1} = 1 closed form: prefactor times a single n x n determinant.
// `u` holds u_1..u_n here.
ExactScalar rhs_corollary_u1(int n, const std::vector<ExactScalar>& u, const ExactScalar& q);

// (Z+, Z-) expressions with last-row entries 1/(1-u_j^2) resp.
// u_{n+1}/(u_j^2-1); singular at u_{n+1}^2 = 1.
std::pair<ExactScalar, ExactScalar> rhs_pm(const DetFormulaInput& in);

// det[(a_i-b_j)/(x_i-y_j)] equals the alternating-columns 2k x 2k
// determinant times (-1)^(k(k+1)/2) / prod (x_i-y_j).
bool okada_check(size_t k, const std::vector<ExactScalar>& a, const std::vector<ExactScalar>& b,
                 const std::vector<ExactScalar>& x, const std::vector<ExactScalar>& y);

}  // namespace trisix
