#include <doctest.h>

#include "trisix/determinant.hpp"
#include "trisix/rng.hpp"
#include "trisix/scalar.hpp"

using namespace trisix;

TEST_CASE("rational canonical form") {
    Rational a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 1 * 2);
    CHECK(Rational(3, 5) + Rational(2, 5) == Rational(1));
    CHECK(Rational(1, 3).inverse() == Rational(3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-7).str() == "-7");
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<Integer>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);
}

TEST_CASE("cyclotomic arithmetic basics") {
    auto z = Cyclotomic::zeta_power(12, 1);
    auto one = Cyclotomic::from_rational(12, Rational(1));
    CHECK(z.pow(12) == one);
    CHECK(z.pow(6) == -one);
    // zeta_12^11 equals the inverse of zeta_12
    CHECK(z.inverse() == Cyclotomic::zeta_power(12, 11));
    CHECK(z.inverse() * z == one);
}

TEST_CASE("sigma on special points") {
    // sigma(zeta_12^4) represents i*sqrt(3): power basis 2*z^2 - 1.
    ExactScalar z4(Cyclotomic::zeta_power(12, 4));
    ExactScalar s = sigma(z4);
    Cyclotomic expected(12, {Rational(-1), Rational(0), Rational(2), Rational(0)});
    CHECK(s.cyclotomic() == expected);

    CHECK(sigma(ExactScalar(Rational(1))).is_zero());
    CHECK(sigma(ExactScalar(Rational(2))) == ExactScalar(Rational(3, 2)));
    CHECK_THROWS_AS(sigma(ExactScalar(Rational(0))), std::domain_error);
}

TEST_CASE("cyclotomic inverse property, randomized") {
    SeededRng rng(20250810);
    for (unsigned N : {6u, 8u, 12u, 24u}) {
        unsigned phi = euler_phi(N);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rational> coeffs;
            bool zero = true;
            for (unsigned i = 0; i < phi; ++i) {
                Rational c(rng.next_long(-5, 5), rng.next_long(1, 3));
                if (!c.is_zero()) zero = false;
                coeffs.push_back(c);
            }
            if (zero) continue;
            Cyclotomic x(N, coeffs);
            CHECK(x.inverse() * x == Cyclotomic::from_rational(N, Rational(1)));
        }
    }
    // inverse(2*zeta_8) = 1/2 * zeta_8^7 reduced mod Phi_8
    Cyclotomic two_z8(8, {Rational(0), Rational(2)});
    Cyclotomic expect = Cyclotomic::zeta_power(8, 7);
    Cyclotomic half(8, {Rational(1, 2)});
    CHECK(two_z8.inverse() == expect * half);
    CHECK_THROWS_AS(Cyclotomic(8).inverse(), std::domain_error);
}

TEST_CASE("cyclotomic embedding into a common conductor") {
    // zeta_12^4 = zeta_6^2 = zeta_3; check via embedding into 24.
    auto a = Cyclotomic::zeta_power(12, 4).embed(24);
    auto b = Cyclotomic::zeta_power(6, 2).embed(24);
    CHECK(a == b);
    CHECK(Cyclotomic::zeta_power(8, 2).embed(24) == Cyclotomic::zeta_power(24, 6));
    CHECK_THROWS_AS(Cyclotomic::zeta_power(8, 1).embed(12), std::domain_error);
    // conductor mismatch is an error without an explicit embed
    CHECK_THROWS_AS(Cyclotomic::zeta_power(8, 1) * Cyclotomic::zeta_power(12, 1),
                    std::domain_error);
}

namespace {

LaurentPoly random_sparse(SeededRng& rng, const VarSet& vars) {
    LaurentPoly p(vars);
    int nterms = static_cast<int>(rng.next_long(1, 4));
    for (int t = 0; t < nterms; ++t) {
        LaurentPoly::Exponents e(vars->size());
        for (auto& x : e) x = static_cast<int>(rng.next_long(-3, 3));
        long num = rng.next_long(-6, 6);
        if (num == 0) num = 1;
        p += LaurentPoly::monomial(vars, e, FieldScalar(Rational(num, rng.next_long(1, 3))));
    }
    return p;
}

}  // namespace

TEST_CASE("laurent ring axioms on random sparse triples") {
    SeededRng rng(7);
    auto vars = make_vars({"x", "y", "z"});
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_sparse(rng, vars);
        LaurentPoly b = random_sparse(rng, vars);
        LaurentPoly c = random_sparse(rng, vars);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("laurent evaluation homomorphism") {
    SeededRng rng(11);
    auto vars = make_vars({"x", "y"});
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly p = random_sparse(rng, vars);
        LaurentPoly r = random_sparse(rng, vars);
        std::vector<FieldScalar> v{FieldScalar(rng.next_point(10)),
                                   FieldScalar(rng.next_point(10))};
        CHECK((p * r).eval(v) == p.eval(v) * r.eval(v));
        CHECK((p + r).eval(v) == p.eval(v) + r.eval(v));
    }
}

TEST_CASE("laurent structure helpers") {
    auto vars = make_vars({"q", "u"});
    auto q = LaurentPoly::variable(vars, 0);
    auto u = LaurentPoly::variable(vars, 1);
    auto p = q * u.pow(2) - q.pow(-1) * u.pow(-2);
    CHECK(p.is_even_in(1));
    CHECK(p.min_degree(1) == -2);
    CHECK(p.max_degree(1) == 2);
    CHECK(p.invert_vars({0, 1}) == -p);
    CHECK(p.str() == "-q^-1*u^-2 + q*u^2");

    // sigma of a monomial
    auto m = LaurentPoly::monomial(vars, {1, 1}, FieldScalar(Rational(1)));
    CHECK(LaurentPoly::sigma_monomial(m).str() == "-q^-1*u^-1 + q*u");
    CHECK_THROWS_AS(LaurentPoly::sigma_monomial(p), std::domain_error);

    // substitution u -> q^2 * u^-1
    auto img = p.substitute(vars, {{FieldScalar(Rational(1)), {1, 0}},
                                   {FieldScalar(Rational(1)), {2, -1}}});
    CHECK(img == q.pow(5) * u.pow(-2) - q.pow(-5) * u.pow(2));

    // derivative
    CHECK(p.derivative(1) == (q * u + q.pow(-1) * u.pow(-3)).scaled(FieldScalar(Rational(2))));
}

TEST_CASE("laurent exact division") {
    auto vars = make_vars({"x", "y"});
    auto x = LaurentPoly::variable(vars, 0);
    auto y = LaurentPoly::variable(vars, 1);
    auto a = x.pow(2) - y.pow(2);
    auto b = x - y;
    CHECK(a.divide_exact(b) == x + y);
    auto c = (x + y.pow(-1)) * (x.pow(-2) + y.pow(3)) * (x + y.scaled(FieldScalar(Rational(7, 3))));
    CHECK(c.divide_exact(x + y.pow(-1)) == (x.pow(-2) + y.pow(3)) * (x + y.scaled(FieldScalar(Rational(7, 3)))));
    CHECK_THROWS_AS((x.pow(2) + y).divide_exact(x + y), std::domain_error);
}

TEST_CASE("quotient arithmetic and equality") {
    auto vars = make_vars({"x"});
    auto x = LaurentPoly::variable(vars, 0);
    auto one = LaurentPoly::constant(vars, FieldScalar(Rational(1)));
    LaurentQuot a(one, x + one);                    // 1/(x+1)
    LaurentQuot b(x, x * x + x);                    // x/(x^2+x) == 1/(x+1)
    CHECK(a == b);
    CHECK(a + a == LaurentQuot(one + one, x + one));
    CHECK_THROWS_AS(LaurentQuot(one, LaurentPoly(vars)), std::domain_error);

    ExactScalar s = ExactScalar(LaurentQuot::from_poly(x)) + ExactScalar(Rational(1, 2));
    CHECK(s == ExactScalar(LaurentQuot(x + x + one, one + one)));
    // sigma over quotients: sigma(x) as a scalar = (x^2-1)/x
    CHECK(sigma(ExactScalar(LaurentQuot::from_poly(x))) ==
          ExactScalar(LaurentQuot(x * x - one, x)));
}

namespace {

// Cofactor-expansion oracle, independent of the elimination code paths.
template <class T>
T det_cofactor(const Matrix<T>& m, const T& zero) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    T acc = zero;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        Matrix<T> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * det_cofactor(minor, zero);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

}  // namespace

TEST_CASE("det_exact identity and symbolic 2x2") {
    Matrix<Rational> id3(3, std::vector<Rational>(3, Rational(0)));
    for (int i = 0; i < 3; ++i) id3[i][i] = Rational(1);
    CHECK(det_exact(id3) == Rational(1));

    auto vars = make_vars({"a", "b", "c", "d"});
    Matrix<LaurentPoly> m2{{LaurentPoly::variable(vars, 0), LaurentPoly::variable(vars, 1)},
                           {LaurentPoly::variable(vars, 2), LaurentPoly::variable(vars, 3)}};
    auto det = det_bareiss(m2);
    auto expect = LaurentPoly::variable(vars, 0) * LaurentPoly::variable(vars, 3) -
                  LaurentPoly::variable(vars, 1) * LaurentPoly::variable(vars, 2);
    CHECK(det == expect);

    Matrix<ExactScalar> mq{{ExactScalar(LaurentQuot::from_poly(LaurentPoly::variable(vars, 0))),
                            ExactScalar(LaurentQuot::from_poly(LaurentPoly::variable(vars, 1)))},
                           {ExactScalar(LaurentQuot::from_poly(LaurentPoly::variable(vars, 2))),
                            ExactScalar(LaurentQuot::from_poly(LaurentPoly::variable(vars, 3)))}};
    CHECK(det_exact(mq) == ExactScalar(LaurentQuot::from_poly(expect)));
}

TEST_CASE("det_exact vs cofactor oracle on random rational matrices") {
    SeededRng rng(99);
    for (size_t k = 1; k <= 4; ++k) {
        for (int trial = 0; trial < 50; ++trial) {
            Matrix<Rational> m(k, std::vector<Rational>(k));
            for (auto& row : m)
                for (auto& x : row) x = Rational(rng.next_long(-9, 9), rng.next_long(1, 4));
            Matrix<ExactScalar> ms(k, std::vector<ExactScalar>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) ms[i][j] = ExactScalar(m[i][j]);
            Rational expect = det_cofactor(m, Rational(0));
            CHECK(det_exact(m) == expect);
            CHECK(det_exact(ms) == ExactScalar(expect));
        }
    }
}

TEST_CASE("det_bareiss vs cofactor on random polynomial matrices") {
    SeededRng rng(123);
    auto vars = make_vars({"x", "y"});
    for (size_t k = 2; k <= 3; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
            Matrix<LaurentPoly> m(k, std::vector<LaurentPoly>(k, LaurentPoly(vars)));
            for (auto& row : m)
                for (auto& x : row) x = random_sparse(rng, vars);
            CHECK(det_bareiss(m) == det_cofactor(m, LaurentPoly(vars)));
        }
    }
}

TEST_CASE("cyclotomic determinant") {
    // Vandermonde in Q(zeta_12) on zeta, zeta^5.
    auto z1 = Cyclotomic::zeta_power(12, 1);
    auto z5 = Cyclotomic::zeta_power(12, 5);
    auto one = Cyclotomic::from_rational(12, Rational(1));
    Matrix<Cyclotomic> m{{one, z1}, {one, z5}};
    CHECK(det_exact(m) == z5 - z1);
}
