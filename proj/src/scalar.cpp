#include "trisix/scalar.hpp"

#include <numeric>

namespace trisix {

namespace {

LaurentQuot to_quot(const ExactScalar& s, const VarSet& vars) {
    if (s.is_quotient()) return s.quotient();
    FieldScalar c = s.is_rational() ? FieldScalar(s.rational()) : FieldScalar(s.cyclotomic());
    return LaurentQuot::from_poly(LaurentPoly::constant(vars, c));
}

// Bring two scalars to a common representation for a binary op.
void align(ExactScalar& a, ExactScalar& b) {
    if (a.is_quotient() || b.is_quotient()) {
        const VarSet& vars = a.is_quotient() ? a.quotient().num.vars() : b.quotient().num.vars();
        a = ExactScalar(to_quot(a, vars));
        b = ExactScalar(to_quot(b, vars));
        return;
    }
    if (a.is_cyclotomic() && b.is_rational())
        b = ExactScalar(Cyclotomic::from_rational(a.cyclotomic().conductor(), b.rational()));
    else if (a.is_rational() && b.is_cyclotomic())
        a = ExactScalar(Cyclotomic::from_rational(b.cyclotomic().conductor(), a.rational()));
}

}  // namespace

ExactScalar::ExactScalar(FieldScalar f) : v_(Rational(0)) {
    if (f.is_rational()) v_ = f.rational();
    else v_ = f.cyclotomic();
}

ExactScalar::Tag ExactScalar::tag() const {
    if (is_rational()) return Tag::Rational;
    if (is_cyclotomic()) return Tag::Cyclotomic;
    return Tag::LaurentQuotient;
}

bool ExactScalar::is_zero() const {
    if (is_rational()) return rational().is_zero();
    if (is_cyclotomic()) return cyclotomic().is_zero();
    return quotient().is_zero();
}

bool ExactScalar::is_one() const {
    if (is_rational()) return rational().is_one();
    if (is_cyclotomic()) return cyclotomic().is_rational() && cyclotomic().to_rational().is_one();
    return quotient().num == quotient().den;
}

ExactScalar ExactScalar::operator-() const {
    if (is_rational()) return ExactScalar(-rational());
    if (is_cyclotomic()) return ExactScalar(-cyclotomic());
    return ExactScalar(-quotient());
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    ExactScalar rhs = o;
    align(*this, rhs);
    if (is_rational()) v_ = rational() + rhs.rational();
    else if (is_cyclotomic()) v_ = cyclotomic() + rhs.cyclotomic();
    else v_ = quotient() + rhs.quotient();
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    ExactScalar rhs = o;
    align(*this, rhs);
    if (is_rational()) v_ = rational() - rhs.rational();
    else if (is_cyclotomic()) v_ = cyclotomic() - rhs.cyclotomic();
    else v_ = quotient() - rhs.quotient();
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    ExactScalar rhs = o;
    align(*this, rhs);
    if (is_rational()) v_ = rational() * rhs.rational();
    else if (is_cyclotomic()) v_ = cyclotomic() * rhs.cyclotomic();
    else v_ = quotient() * rhs.quotient();
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
    return *this *= o.inverse();
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar x = a, y = b;
    align(x, y);
    if (x.is_rational()) return x.rational() == y.rational();
    if (x.is_cyclotomic()) return x.cyclotomic() == y.cyclotomic();
    return x.quotient() == y.quotient();
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw std::domain_error("ExactScalar: inverse of zero");
    if (is_rational()) return ExactScalar(rational().inverse());
    if (is_cyclotomic()) return ExactScalar(cyclotomic().inverse());
    return ExactScalar(quotient().inverse());
}

ExactScalar ExactScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ExactScalar acc(Rational(1));
    ExactScalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

Cyclotomic ExactScalar::as_cyclotomic(unsigned conductor) const {
    if (is_rational()) return Cyclotomic::from_rational(conductor, rational());
    if (is_cyclotomic()) return cyclotomic().embed(conductor);
    throw std::domain_error("ExactScalar: cannot embed a Laurent quotient into a cyclotomic field");
}

std::string ExactScalar::str() const {
    if (is_rational()) return rational().str();
    if (is_cyclotomic()) return cyclotomic().str();
    return quotient().str();
}

ExactScalar sigma(const ExactScalar& x) {
    if (x.is_zero()) throw std::domain_error("sigma: argument is not invertible");
    return x - x.inverse();
}

bool equal_embedded(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_quotient() || b.is_quotient()) return a == b;
    if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
    unsigned ca = a.is_cyclotomic() ? a.cyclotomic().conductor() : 1;
    unsigned cb = b.is_cyclotomic() ? b.cyclotomic().conductor() : 1;
    unsigned n = std::lcm(ca, cb);
    return a.as_cyclotomic(n) == b.as_cyclotomic(n);
}

}  // namespace trisix
