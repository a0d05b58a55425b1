#include "trisix/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace trisix {

namespace {

// Promote a rational/cyclotomic pair to a common field in place.
void promote(FieldScalar& a, FieldScalar& b);

}  // namespace

bool FieldScalar::is_zero() const {
    return is_rational() ? rational().is_zero() : cyclotomic().is_zero();
}

bool FieldScalar::is_one() const {
    if (is_rational()) return rational().is_one();
    return cyclotomic().is_rational() && cyclotomic().to_rational().is_one();
}

FieldScalar FieldScalar::operator-() const {
    if (is_rational()) return FieldScalar(-rational());
    return FieldScalar(-cyclotomic());
}

namespace {
void promote(FieldScalar& a, FieldScalar& b) {
    if (a.is_rational() && b.is_cyclotomic())
        a = FieldScalar(Cyclotomic::from_rational(b.cyclotomic().conductor(), a.rational()));
    else if (a.is_cyclotomic() && b.is_rational())
        b = FieldScalar(Cyclotomic::from_rational(a.cyclotomic().conductor(), b.rational()));
}
}  // namespace

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    FieldScalar rhs = o;
    promote(*this, rhs);
    if (is_rational()) v_ = rational() + rhs.rational();
    else v_ = cyclotomic() + rhs.cyclotomic();
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    FieldScalar rhs = o;
    promote(*this, rhs);
    if (is_rational()) v_ = rational() - rhs.rational();
    else v_ = cyclotomic() - rhs.cyclotomic();
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    FieldScalar rhs = o;
    promote(*this, rhs);
    if (is_rational()) v_ = rational() * rhs.rational();
    else v_ = cyclotomic() * rhs.cyclotomic();
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) { return *this *= o.inverse(); }

bool operator==(const FieldScalar& a, const FieldScalar& b) {
    FieldScalar x = a, y = b;
    promote(x, y);
    if (x.is_rational()) return x.rational() == y.rational();
    return x.cyclotomic() == y.cyclotomic();
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar: inverse of zero");
    if (is_rational()) return FieldScalar(rational().inverse());
    return FieldScalar(cyclotomic().inverse());
}

FieldScalar FieldScalar::pow(long e) const {
    if (is_rational()) return FieldScalar(rational().pow(e));
    return FieldScalar(cyclotomic().pow(e));
}

std::string FieldScalar::str() const {
    return is_rational() ? rational().str() : "(" + cyclotomic().str() + ")";
}

VarSet make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarSet& a, const VarSet& b) { return a == b || *a == *b; }

LaurentPoly LaurentPoly::constant(VarSet vars, FieldScalar c) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vars, Exponents exps, FieldScalar coeff) {
    LaurentPoly p(std::move(vars));
    if (exps.size() != p.nvars()) throw std::domain_error("LaurentPoly: exponent arity mismatch");
    p.add_term(exps, coeff);
    return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, size_t index, int power) {
    LaurentPoly p(std::move(vars));
    if (index >= p.nvars()) throw std::domain_error("LaurentPoly: variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = power;
    p.add_term(e, FieldScalar(Rational(1)));
    return p;
}

void LaurentPoly::add_term(const Exponents& e, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

FieldScalar LaurentPoly::constant_value() const {
    if (terms_.empty()) return FieldScalar(Rational(0));
    if (!is_constant()) throw std::domain_error("LaurentPoly: not a constant");
    return terms_.begin()->second;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error("LaurentPoly: inverse requires a unit (single-term) polynomial");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(vars_, inv, c.inverse());
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (!same_vars(vars_, o.vars_)) throw std::domain_error("LaurentPoly: variable list mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (!same_vars(vars_, o.vars_)) throw std::domain_error("LaurentPoly: variable list mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (!same_vars(a.vars_, b.vars_))
        throw std::domain_error("LaurentPoly: variable list mismatch");
    LaurentPoly r(a.vars_);
    LaurentPoly::Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (!same_vars(a.vars_, b.vars_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ita = a.terms_.begin();
    auto itb = b.terms_.begin();
    for (; ita != a.terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (!(ita->second == itb->second)) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::scaled(const FieldScalar& c) const {
    LaurentPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.add_term(e, t * c);
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) return monomial_inverse().pow(-e);
    LaurentPoly acc = constant(vars_, FieldScalar(Rational(1)));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (!same_vars(vars_, divisor.vars_))
        throw std::domain_error("LaurentPoly: variable list mismatch");
    if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    LaurentPoly rem = *this;
    LaurentPoly quot(vars_);
    // Leading term = lexicographically largest exponent tuple (map is
    // ordered, so rbegin).  For exact division the leading term of the
    // remainder is always a multiple of the divisor's leading term, and
    // each step removes one quotient term.
    const auto& dlead = *divisor.terms_.rbegin();
    size_t steps = 0;
    const size_t step_cap = 200000;
    while (!rem.is_zero()) {
        if (++steps > step_cap)
            throw std::domain_error("LaurentPoly: divide_exact: divisor does not divide");
        const auto& rlead = *rem.terms_.rbegin();
        Exponents e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = rlead.first[i] - dlead.first[i];
        FieldScalar c = rlead.second / dlead.second;
        LaurentPoly t = monomial(vars_, e, c);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

LaurentPoly LaurentPoly::sigma_monomial(const LaurentPoly& m) {
    if (m.terms_.size() != 1)
        throw std::domain_error("sigma: argument must be a unit (single-term) Laurent polynomial");
    return m - m.monomial_inverse();
}

int LaurentPoly::min_degree(size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < d) d = e[var];
        first = false;
    }
    return d;
}

int LaurentPoly::max_degree(size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > d) d = e[var];
        first = false;
    }
    return d;
}

bool LaurentPoly::is_even_in(size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] % 2 != 0) return false;
    return true;
}

bool LaurentPoly::depends_on(size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

LaurentPoly LaurentPoly::invert_vars(const std::vector<size_t>& vars) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (size_t v : vars) f[v] = -f[v];
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::swap_vars(size_t a, size_t b) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f[a], f[b]);
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::rename(VarSet new_vars, const std::vector<size_t>& where) const {
    if (where.size() != nvars()) throw std::domain_error("LaurentPoly: rename arity mismatch");
    LaurentPoly r(std::move(new_vars));
    for (const auto& [e, c] : terms_) {
        Exponents f(r.nvars(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                if (where[i] >= r.nvars())
                    throw std::domain_error("LaurentPoly: rename target out of range");
                f[where[i]] += e[i];
            }
        }
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(size_t var) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        r.add_term(f, c * FieldScalar(Rational(e[var])));
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(VarSet target, const std::vector<MonomialImage>& images) const {
    if (images.size() != nvars()) throw std::domain_error("LaurentPoly: substitution arity mismatch");
    for (const auto& im : images)
        if (im.coeff.is_zero())
            throw std::domain_error("LaurentPoly: substitution image must be invertible");
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) {
        FieldScalar coeff = c;
        Exponents f(r.nvars(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const auto& im = images[i];
            if (im.exps.size() != r.nvars())
                throw std::domain_error("LaurentPoly: substitution image arity mismatch");
            if (!im.coeff.is_one()) coeff *= im.coeff.pow(e[i]);
            for (size_t k = 0; k < f.size(); ++k) f[k] += im.exps[k] * e[i];
        }
        r.add_term(f, coeff);
    }
    return r;
}

FieldScalar LaurentPoly::eval(const std::vector<FieldScalar>& values) const {
    if (values.size() != nvars()) throw std::domain_error("LaurentPoly: eval arity mismatch");
    std::vector<MonomialImage> images(values.size());
    for (size_t i = 0; i < values.size(); ++i) images[i] = MonomialImage{values[i], {}};
    return substitute(make_vars({}), images).constant_value();
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << (*vars_)[i];
            if (e[i] != 1) mono << "^" << e[i];
        }
        if (!any) {
            os << cs;
        } else if (cs == "1") {
            os << mono.str();
        } else {
            os << cs << "*" << mono.str();
        }
    }
    return os.str();
}

LaurentQuot::LaurentQuot(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("LaurentQuot: zero denominator");
    if (!same_vars(num.vars(), den.vars()))
        throw std::domain_error("LaurentQuot: variable list mismatch");
}

LaurentQuot LaurentQuot::from_poly(LaurentPoly p) {
    auto one = LaurentPoly::constant(p.vars(), FieldScalar(Rational(1)));
    return LaurentQuot(std::move(p), std::move(one));
}

LaurentQuot LaurentQuot::inverse() const {
    if (num.is_zero()) throw std::domain_error("LaurentQuot: inverse of zero");
    return LaurentQuot(den, num);
}

LaurentQuot LaurentQuot::operator-() const { return LaurentQuot(-num, den); }

LaurentQuot operator+(const LaurentQuot& a, const LaurentQuot& b) {
    return LaurentQuot(a.num * b.den + b.num * a.den, a.den * b.den);
}

LaurentQuot operator-(const LaurentQuot& a, const LaurentQuot& b) {
    return LaurentQuot(a.num * b.den - b.num * a.den, a.den * b.den);
}

LaurentQuot operator*(const LaurentQuot& a, const LaurentQuot& b) {
    return LaurentQuot(a.num * b.num, a.den * b.den);
}

LaurentQuot operator/(const LaurentQuot& a, const LaurentQuot& b) { return a * b.inverse(); }

bool operator==(const LaurentQuot& a, const LaurentQuot& b) {
    return a.num * b.den == b.num * a.den;
}

std::string LaurentQuot::str() const {
    if (den.is_constant() && den.constant_value().is_one()) return num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
}

}  // namespace trisix
