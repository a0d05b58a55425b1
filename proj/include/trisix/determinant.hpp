#pragma once

// Exact determinants.
//
// det_exact: pivoted fraction-producing elimination over a field-like
// scalar (Rational, Cyclotomic, quotients of Laurent polynomials).
// det_bareiss: fraction-free (Bareiss) elimination over Laurent
// polynomials, where every division is exact in the ring.
//
// Both are independent of pivot order up to exact cancellation, and agree
// with cofactor expansion.

#include <vector>

#include "trisix/scalar.hpp"

namespace trisix {

template <class T>
using Matrix = std::vector<std::vector<T>>;

ExactScalar det_exact(Matrix<ExactScalar> m);
Rational det_exact(Matrix<Rational> m);
Cyclotomic det_exact(Matrix<Cyclotomic> m);

LaurentPoly det_bareiss(Matrix<LaurentPoly> m);

}  // namespace trisix
