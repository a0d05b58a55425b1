#pragma once

// ExactScalar: the common coefficient domain for the whole library.
// A tagged union of
//   - Rational,
//   - Cyclotomic (fixed conductor),
//   - LaurentQuot (formal quotient of Laurent polynomials).
//
// Mixed rational/cyclotomic arithmetic promotes the rational side into the
// cyclotomic field; two cyclotomics must share a conductor (callers embed
// explicitly when comparing special points from different fields); scalars
// combine with quotients by promotion to constant quotients over the same
// variable list.

#include <string>
#include <variant>

#include "trisix/laurent.hpp"

namespace trisix {

class ExactScalar {
public:
    enum class Tag { Rational, Cyclotomic, LaurentQuotient };

    ExactScalar() : v_(Rational(0)) {}
    ExactScalar(Rational r) : v_(std::move(r)) {}
    ExactScalar(long n) : v_(Rational(n)) {}
    ExactScalar(Cyclotomic c) : v_(std::move(c)) {}
    ExactScalar(LaurentQuot q) : v_(std::move(q)) {}
    ExactScalar(LaurentPoly p) : v_(LaurentQuot::from_poly(std::move(p))) {}
    ExactScalar(FieldScalar f);

    Tag tag() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_cyclotomic() const { return std::holds_alternative<Cyclotomic>(v_); }
    bool is_quotient() const { return std::holds_alternative<LaurentQuot>(v_); }

    const Rational& rational() const { return std::get<Rational>(v_); }
    const Cyclotomic& cyclotomic() const { return std::get<Cyclotomic>(v_); }
    const LaurentQuot& quotient() const { return std::get<LaurentQuot>(v_); }

    bool is_zero() const;
    bool is_one() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);
    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    ExactScalar inverse() const;
    ExactScalar pow(long e) const;

    // Embed a rational or cyclotomic scalar into Q(zeta_N).
    Cyclotomic as_cyclotomic(unsigned conductor) const;

    // Canonical exact rendering (reduced fraction / power basis /
    // polynomial text).
    std::string str() const;

private:
    std::variant<Rational, Cyclotomic, LaurentQuot> v_;
};

// sigma(x) = x - 1/x.  Rejects x = 0.  (For plain Laurent polynomials the
// unit-monomial form lives in LaurentPoly::sigma_monomial.)
ExactScalar sigma(const ExactScalar& x);

// Compare scalars that may live in different cyclotomic fields (or in Q)
// by embedding both into the smallest common conductor.
bool equal_embedded(const ExactScalar& a, const ExactScalar& b);

}  // namespace trisix
