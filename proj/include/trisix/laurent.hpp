#pragma once

// Sparse multivariate Laurent polynomials with exact coefficients
// (rational or cyclotomic), plus formal quotients of such polynomials.
//
// Terms are keyed by integer exponent tuples (negative exponents allowed)
// in a std::map, so iteration and printing follow lexicographic exponent
// order and are reproducible.  Binary operations require identical
// variable lists.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trisix/cyclotomic.hpp"
#include "trisix/rational.hpp"

namespace trisix {

// Coefficient domain: a rational or a cyclotomic field element.  Mixed
// rational/cyclotomic arithmetic promotes the rational side; two
// cyclotomics must share a conductor.
class FieldScalar {
public:
    FieldScalar() : v_(Rational(0)) {}
    FieldScalar(Rational r) : v_(std::move(r)) {}
    FieldScalar(Cyclotomic c) : v_(std::move(c)) {}
    FieldScalar(long n) : v_(Rational(n)) {}

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_cyclotomic() const { return std::holds_alternative<Cyclotomic>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const Cyclotomic& cyclotomic() const { return std::get<Cyclotomic>(v_); }

    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);
    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
    friend bool operator==(const FieldScalar& a, const FieldScalar& b);
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    FieldScalar inverse() const;
    FieldScalar pow(long e) const;
    std::string str() const;

private:
    std::variant<Rational, Cyclotomic> v_;
};

using VarSet = std::shared_ptr<const std::vector<std::string>>;

VarSet make_vars(std::vector<std::string> names);
bool same_vars(const VarSet& a, const VarSet& b);

class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, FieldScalar>;

    LaurentPoly() : vars_(make_vars({})) {}
    explicit LaurentPoly(VarSet vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarSet vars, FieldScalar c);
    // coeff * prod vars[i]^exps[i]
    static LaurentPoly monomial(VarSet vars, Exponents exps, FieldScalar coeff);
    static LaurentPoly variable(VarSet vars, size_t index, int power = 1);

    const VarSet& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant value (zero for the empty polynomial); throws if the
    // polynomial has any non-constant term.
    FieldScalar constant_value() const;

    bool is_monomial() const { return terms_.size() == 1; }
    // Inverse of a single-term polynomial; throws otherwise.
    LaurentPoly monomial_inverse() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const FieldScalar& c) const;
    LaurentPoly pow(long e) const;  // e < 0 requires a monomial

    // Exact division; throws std::domain_error if the divisor does not
    // divide exactly.  Used by fraction-free elimination.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // sigma(m) = m - 1/m for a unit (single-term) polynomial.
    static LaurentPoly sigma_monomial(const LaurentPoly& m);

    // --- structural queries -------------------------------------------
    int min_degree(size_t var) const;  // 0 for the zero polynomial
    int max_degree(size_t var) const;
    bool is_even_in(size_t var) const;
    bool depends_on(size_t var) const;

    // --- exponent-level rewrites --------------------------------------
    // Negate every exponent of the given variables (x -> 1/x).
    LaurentPoly invert_vars(const std::vector<size_t>& vars) const;
    LaurentPoly swap_vars(size_t a, size_t b) const;
    // Same terms over a different variable list; `where[i]` is the index
    // of old variable i in the new list.
    LaurentPoly rename(VarSet new_vars, const std::vector<size_t>& where) const;
    LaurentPoly derivative(size_t var) const;

    // Substitute each variable by coeff * monomial over `target` vars.
    struct MonomialImage {
        FieldScalar coeff;   // must be nonzero
        Exponents exps;      // over the target variable list
    };
    LaurentPoly substitute(VarSet target, const std::vector<MonomialImage>& images) const;

    // Full evaluation at nonzero field values.
    FieldScalar eval(const std::vector<FieldScalar>& values) const;

    // Canonical text: terms in lexicographic exponent order.
    std::string str() const;

private:
    void add_term(const Exponents& e, const FieldScalar& c);
    VarSet vars_;
    TermMap terms_;
};

// Formal quotient num/den with den != 0; no cancellation is attempted.
// Equality is decided by cross-multiplication.
struct LaurentQuot {
    LaurentPoly num;
    LaurentPoly den;

    LaurentQuot() = default;
    LaurentQuot(LaurentPoly n, LaurentPoly d);
    static LaurentQuot from_poly(LaurentPoly p);

    bool is_zero() const { return num.is_zero(); }
    LaurentQuot inverse() const;
    LaurentQuot operator-() const;
    friend LaurentQuot operator+(const LaurentQuot& a, const LaurentQuot& b);
    friend LaurentQuot operator-(const LaurentQuot& a, const LaurentQuot& b);
    friend LaurentQuot operator*(const LaurentQuot& a, const LaurentQuot& b);
    friend LaurentQuot operator/(const LaurentQuot& a, const LaurentQuot& b);
    friend bool operator==(const LaurentQuot& a, const LaurentQuot& b);
    friend bool operator!=(const LaurentQuot& a, const LaurentQuot& b) { return !(a == b); }
    std::string str() const;
};

}  // namespace trisix
