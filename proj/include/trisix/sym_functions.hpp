#pragma once

// Partitions, semistandard Young tableaux, Schur polynomials (bialternant
// determinant and tableau sum), the product formula for tableau counts,
// and the Schur-form expressions for the odd-order DASASM counts at the
// q = zeta_12 point, with the q = zeta_6 signed-enumeration conjecture.

#include <functional>

#include "trisix/report.hpp"
#include "trisix/scalar.hpp"

namespace trisix {

class Partition {
public:
    Partition() = default;
    // Weakly decreasing positive parts; trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);

    // (n, n-1, n-1, ..., 2, 2, 1, 1), length 2n-1; empty for n = 0.
    static Partition staircase(int n);
    // (n, n, n-1, n-1, ..., 1, 1), length 2n; the alternative index for
    // the same Schur value after inverting the last variable.
    static Partition staircase_doubled(int n);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, padded
    std::string str() const;

private:
    std::vector<int> parts_;
};

// Semistandard Young tableau: rows weakly increasing, columns strictly
// increasing, entries in 1..k.
struct Ssyt {
    std::vector<std::vector<int>> rows;
};

// Each tableau of the given shape with entries <= k exactly once; an empty
// stream when the shape is too long for k.
void enumerate_ssyt(const Partition& shape, int k, const std::function<bool(const Ssyt&)>& visit);

Integer ssyt_count_enumerated(const Partition& shape, int k);
// prod_{i<j<=k} (lambda_i - lambda_j - i + j) / prod_{i<k} i!
Integer ssyt_count_weyl(const Partition& shape, int k);

// det(x_i^(lambda_j + k - j)) / prod_{i<j} (x_i - x_j); requires pairwise
// distinct x (throws a domain error pointing at schur_ssyt otherwise).
ExactScalar schur_bialternant(const Partition& shape, const std::vector<ExactScalar>& x);
// Tableau sum; defined at coincident points.
ExactScalar schur_ssyt(const Partition& shape, const std::vector<ExactScalar>& x);
// Bialternant when points are distinct, tableau sum otherwise.
ExactScalar schur_eval(const Partition& shape, const std::vector<ExactScalar>& x);
// s_shape(x_1..x_{k-1}, t) as a univariate polynomial in the final
// symbolic argument.
LaurentPoly schur_last_symbolic(const Partition& shape, const std::vector<ExactScalar>& x_first);

// Theorem expression for Z(u_1..u_{n+1}) at q = e^{i pi/6}:
//   3^{-n(n-1)/2} ( u^n/(u+1) s_lam(...,1/u^2) + (1/u)^n/(1/u+1) s_lam(...,u^2) )
// with s_lam indexed by staircase(n); u_{n+1} = -1 is singular.
ExactScalar schur_theorem_rhs(int n, const std::vector<ExactScalar>& u);
// The u_{n+1} = 1 form: 3^{-n(n-1)/2} s_lam(u_1^2,1/u_1^2,...,u_n^2,1/u_n^2,1).
ExactScalar schur_corollary_u1(int n, const std::vector<ExactScalar>& u);
// (Z+, Z-) at q = e^{i pi/6}; u_{n+1}^2 = 1 routes through the derivative
// expression (u_{n+1} = 1) or is rejected (u_{n+1} = -1).
std::pair<ExactScalar, ExactScalar> schur_pm(int n, const std::vector<ExactScalar>& u);

// prod_{i=0}^n (3i)!/(n+i)!
Integer dasasm_count_formula(int n);
// ((n+1)/(2n+1) * prod, n/(2n+1) * prod)
std::pair<Integer, Integer> dasasm_pm_count_formula(int n);

// Number of (2n+1) x (2n+1) VHSASMs, as a closed product.
Integer vhsasm_count(int n);

// Signed sums sum (-1)^M(A) over DASASM(2n+1) and the two central-entry
// sectors, by brute force over triangles.
struct SignedSums {
    Integer total, plus, minus;
};
SignedSums signed_m_sums(int n);

// The weighted-enumeration conjecture at q = e^{i pi/3}: compares the
// brute-force signed sums (and the cyclotomic transfer-program values at
// u = 1) against the closed forms in V_n.  Reported as
// CONJECTURE-CONFIRMED / CONJECTURE-VIOLATED.
Report conjecture_q3_check(int n);

}  // namespace trisix
