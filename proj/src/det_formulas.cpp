#include "trisix/det_formulas.hpp"

namespace trisix {

namespace {

ExactScalar one() { return ExactScalar(Rational(1)); }

void require_nonzero(const ExactScalar& v, const std::string& factor) {
    if (v.is_zero()) throw std::domain_error("singular input: " + factor + " = 0");
}

ExactScalar checked_sigma(const ExactScalar& x, const std::string& factor) {
    ExactScalar s = sigma(x);
    require_nonzero(s, factor);
    return s;
}

// Shared prefactor of the full theorem and its +- variants:
//   sigma(q^2)^n / (sigma(q)^{2n} sigma(q^4)^{n^2})
//   * prod_i sigma(u_i) sigma(q u_i) sigma(q/u_i) sigma(q^2 u_i u_{n+1})
//            sigma(q^2/(u_i u_{n+1})) / sigma(u_i/u_{n+1})
//   * prod_{i<j} ( sigma(q^2 u_i u_j) sigma(q^2/(u_i u_j)) / sigma(u_i/u_j) )^2
ExactScalar full_prefactor(const DetFormulaInput& in) {
    const int n = in.n;
    const ExactScalar& q = in.q;
    ExactScalar q2 = q.pow(2);
    ExactScalar acc = sigma(q2).pow(n) / checked_sigma(q, "sigma(q)").pow(2 * n) /
                      checked_sigma(q.pow(4), "sigma(q^4)").pow(static_cast<long>(n) * n);
    for (int i = 0; i < n; ++i) {
        const ExactScalar& ui = in.u[i];
        const ExactScalar& ulast = in.u[n];
        acc *= sigma(ui) * sigma(q * ui) * sigma(q * ui.inverse());
        acc *= sigma(q2 * ui * ulast) * sigma(q2 * (ui * ulast).inverse());
        acc /= checked_sigma(ui * ulast.inverse(),
                             "sigma(u_" + std::to_string(i + 1) + "/u_" + std::to_string(n + 1) + ")");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ExactScalar t = sigma(q2 * in.u[i] * in.u[j]) *
                            sigma(q2 * (in.u[i] * in.u[j]).inverse()) /
                            checked_sigma(in.u[i] * in.u[j].inverse(),
                                          "sigma(u_" + std::to_string(i + 1) + "/u_" +
                                              std::to_string(j + 1) + ")");
            acc *= t * t;
        }
    return acc;
}

// Bulk block entry (q^2 + 1/q^2 + u_i^2 + 1/u_j^2) /
// (sigma(q^2 u_i u_j) sigma(q^2/(u_i u_j))) with u replaced by 1/u when
// `inverted`.
ExactScalar bulk_entry(const DetFormulaInput& in, int i, int j, bool inverted) {
    ExactScalar q2 = in.q.pow(2);
    ExactScalar ui = inverted ? in.u[i].inverse() : in.u[i];
    ExactScalar uj = inverted ? in.u[j].inverse() : in.u[j];
    ExactScalar num = q2 + q2.inverse() + ui.pow(2) + uj.pow(-2);
    ExactScalar d1 = checked_sigma(q2 * ui * uj, "sigma(q^2 u_i u_j)");
    ExactScalar d2 = checked_sigma(q2 * (ui * uj).inverse(), "sigma(q^2/(u_i u_j))");
    return num / (d1 * d2);
}

enum class LastRow { Full, Plus, Minus };

ExactScalar det_term(const DetFormulaInput& in, bool inverted, LastRow kind) {
    const int n = in.n;
    Matrix<ExactScalar> m(n + 1, std::vector<ExactScalar>(n + 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) m[i][j] = bulk_entry(in, i, j, inverted);
    for (int j = 0; j <= n; ++j) {
        ExactScalar uj = inverted ? in.u[j].inverse() : in.u[j];
        ExactScalar ulast = inverted ? in.u[n].inverse() : in.u[n];
        ExactScalar den = uj.pow(2) - one();
        require_nonzero(den, "u_" + std::to_string(j + 1) + "^2 - 1");
        switch (kind) {
            case LastRow::Full: m[n][j] = (ulast - one()) / den; break;
            case LastRow::Plus: m[n][j] = -(one() / den); break;
            case LastRow::Minus: m[n][j] = ulast / den; break;
        }
    }
    return det_exact(std::move(m));
}

void check_input(const DetFormulaInput& in) {
    if (static_cast<int>(in.u.size()) != in.n + 1)
        throw std::invalid_argument("DetFormulaInput: expected n+1 parameters");
    for (const auto& x : in.u) require_nonzero(x, "u");
    require_nonzero(in.q, "q");
}

}  // namespace

ExactScalar rhs_theorem_full(const DetFormulaInput& in) {
    check_input(in);
    ExactScalar pref = full_prefactor(in);
    return pref * (det_term(in, false, LastRow::Full) + det_term(in, true, LastRow::Full));
}

std::pair<ExactScalar, ExactScalar> rhs_pm(const DetFormulaInput& in) {
    check_input(in);
    ExactScalar pref = full_prefactor(in);
    ExactScalar plus = pref * (det_term(in, false, LastRow::Plus) + det_term(in, true, LastRow::Plus));
    ExactScalar minus =
        pref * (det_term(in, false, LastRow::Minus) + det_term(in, true, LastRow::Minus));
    return {plus, minus};
}

ExactScalar rhs_corollary_u1(int n, const std::vector<ExactScalar>& u, const ExactScalar& q) {
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("rhs_corollary_u1: expected n parameters");
    if (n == 0) return one();
    ExactScalar q2 = q.pow(2);
    ExactScalar acc = sigma(q2).pow(n) / checked_sigma(q, "sigma(q)").pow(2 * n) /
                      checked_sigma(q.pow(4), "sigma(q^4)").pow(static_cast<long>(n) * n);
    for (int i = 0; i < n; ++i) {
        acc *= sigma(q * u[i]) * sigma(q * u[i].inverse());
        acc *= sigma(q2 * u[i]) * sigma(q2 * u[i].inverse());
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ExactScalar t = sigma(q2 * u[i] * u[j]) * sigma(q2 * (u[i] * u[j]).inverse()) /
                            checked_sigma(u[i] * u[j].inverse(),
                                          "sigma(u_" + std::to_string(i + 1) + "/u_" +
                                              std::to_string(j + 1) + ")");
            acc *= t * t;
        }
    Matrix<ExactScalar> m(n, std::vector<ExactScalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExactScalar num = q2 + q2.inverse() + u[i].pow(2) + u[j].pow(-2);
            ExactScalar d1 = checked_sigma(q2 * u[i] * u[j], "sigma(q^2 u_i u_j)");
            ExactScalar d2 = checked_sigma(q2 * (u[i] * u[j]).inverse(), "sigma(q^2/(u_i u_j))");
            m[i][j] = num / (d1 * d2);
        }
    return acc * det_exact(std::move(m));
}

bool okada_check(size_t k, const std::vector<ExactScalar>& a, const std::vector<ExactScalar>& b,
                 const std::vector<ExactScalar>& x, const std::vector<ExactScalar>& y) {
    if (a.size() != k || b.size() != k || x.size() != k || y.size() != k)
        throw std::invalid_argument("okada_check: inputs must have length k");
    Matrix<ExactScalar> lhs(k, std::vector<ExactScalar>(k));
    ExactScalar denom = one();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            ExactScalar d = x[i] - y[j];
            require_nonzero(d, "x_i - y_j");
            lhs[i][j] = (a[i] - b[j]) / d;
            denom *= d;
        }
    // Rows alternate (1, a_i, x_i, a_i x_i, ..., x_i^{k-1}, a_i x_i^{k-1})
    // and the same with b_i, y_i.
    Matrix<ExactScalar> big(2 * k, std::vector<ExactScalar>(2 * k));
    for (size_t i = 0; i < k; ++i) {
        ExactScalar xp = one(), yp = one();
        for (size_t m = 0; m < k; ++m) {
            big[2 * i][2 * m] = xp;
            big[2 * i][2 * m + 1] = a[i] * xp;
            big[2 * i + 1][2 * m] = yp;
            big[2 * i + 1][2 * m + 1] = b[i] * yp;
            xp *= x[i];
            yp *= y[i];
        }
    }
    ExactScalar sign((k * (k + 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1));
    return det_exact(std::move(lhs)) == sign / denom * det_exact(std::move(big));
}

}  // namespace trisix
