#pragma once

// The odd-order DASASM partition function: the sum over six-vertex
// configurations on T_n of products of Table-1 weights, with column/row
// parameter assignment u_i for column i, row i and column 2n+2-i, and the
// bulk parameter u_i * u_min(j, 2n+2-j) at (i,j).
//
// The canonical internal object is the cleared polynomial
// sigma(q)^(2n) sigma(q^4)^(n^2) Z, a genuine Laurent polynomial in
// q, u_1..u_{n+1}; un-cleared values are produced by exact division at
// nonsingular q.

#include <cstdint>

#include "trisix/report.hpp"
#include "trisix/rng.hpp"
#include "trisix/weights.hpp"

namespace trisix {

// Bottom-edge sector: Plus = directed upward (central entry +1).
enum class Sector { All, Plus, Minus };

struct ClearedPartitionFunction {
    int n = 0;
    LaurentPoly poly;  // over z_vars(n)
};

// Exact symbolic sum over all configurations; n bounded by the symbolic
// resource limit (126 configurations at n = 3).
ClearedPartitionFunction partition_function_symbolic(int n, Sector sector = Sector::All);

// Cleared value at exact scalars (rational, or cyclotomic over a common
// conductor) via the column-sweep transfer dynamic program.
ExactScalar partition_function_eval(int n, const std::vector<ExactScalar>& u,
                                    const ExactScalar& q, Sector sector = Sector::All);

// sigma(q)^(2n) * sigma(q^4)^(n^2)
ExactScalar clearing_factor(int n, const ExactScalar& q);

// Un-cleared Z value; requires sigma(q) != 0 and sigma(q^4) != 0.
ExactScalar partition_function_value(int n, const std::vector<ExactScalar>& u,
                                     const ExactScalar& q, Sector sector = Sector::All);

// (Z+, Z-) from the half sum/difference of Z(..., u_{n+1}) and
// Z(..., -u_{n+1}); equals the sector-restricted dynamic program.
std::pair<ExactScalar, ExactScalar> partition_function_pm(int n, const std::vector<ExactScalar>& u,
                                                          const ExactScalar& q);

// (|DASASM(2n+1)|, center +1, center -1) by the unit-weight dynamic
// program; independent of the triangle enumeration.
TriangleCounts count_dasasm_dp(int n);

// Propositions spec1..spec4: symbolic identity for small n, exact
// evaluation at seeded random nonsingular rational points otherwise.
Report verify_specialization(const std::string& prop, int n, int trials, std::uint64_t seed);

// Reciprocity, evenness, degree bounds and u_1..u_n symmetry of the
// cleared polynomial, as exact polynomial assertions.
Report verify_global_properties(int n);

}  // namespace trisix
