#include "trisix/determinant.hpp"

namespace trisix {

namespace {

template <class T>
void check_square(const Matrix<T>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::domain_error("det: matrix is not square");
}

// Gaussian elimination with column pivoting; exact over any field type
// providing is_zero(), arithmetic and division.
template <class T>
T det_gauss(Matrix<T>& a, const T& zero, const T& one) {
    check_square(a);
    const size_t n = a.size();
    T det = one;
    bool negate = false;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return zero;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            negate = !negate;
        }
        det = det * a[col][col];
        T inv_piv = a[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            T factor = a[r][col] * inv_piv;
            for (size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
        }
    }
    return negate ? -det : det;
}

}  // namespace

ExactScalar det_exact(Matrix<ExactScalar> m) {
    return det_gauss<ExactScalar>(m, ExactScalar(Rational(0)), ExactScalar(Rational(1)));
}

Rational det_exact(Matrix<Rational> m) {
    return det_gauss<Rational>(m, Rational(0), Rational(1));
}

Cyclotomic det_exact(Matrix<Cyclotomic> m) {
    if (m.empty()) throw std::domain_error("det: empty cyclotomic matrix has no conductor");
    unsigned N = m[0][0].conductor();
    return det_gauss<Cyclotomic>(m, Cyclotomic(N), Cyclotomic::from_rational(N, Rational(1)));
}

LaurentPoly det_bareiss(Matrix<LaurentPoly> m) {
    check_square(m);
    const size_t n = m.size();
    if (n == 0) throw std::domain_error("det: empty matrix");
    const VarSet& vars = m[0][0].vars();
    LaurentPoly prev = LaurentPoly::constant(vars, FieldScalar(Rational(1)));
    bool negate = false;
    for (size_t col = 0; col + 1 < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return LaurentPoly(vars);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            negate = !negate;
        }
        for (size_t r = col + 1; r < n; ++r) {
            for (size_t c = col + 1; c < n; ++c) {
                LaurentPoly num = m[r][c] * m[col][col] - m[r][col] * m[col][c];
                m[r][c] = num.divide_exact(prev);
            }
            m[r][col] = LaurentPoly(vars);
        }
        prev = m[col][col];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

}  // namespace trisix
