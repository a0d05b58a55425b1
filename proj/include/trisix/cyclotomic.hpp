#pragma once

// Exact cyclotomic field arithmetic: elements of Q(zeta_N) represented as
// residues modulo the N-th cyclotomic polynomial Phi_N, in the power basis
// 1, zeta, ..., zeta^(phi(N)-1).
//
// Arithmetic between two elements requires equal conductors; embed() moves
// an element into a larger conductor (M | N) when values from different
// fields have to be compared.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisix/rational.hpp"

namespace trisix {

// Coefficients of Phi_N, lowest degree first, monic, exact integers.
std::vector<Integer> cyclotomic_polynomial(unsigned N);

unsigned euler_phi(unsigned N);

class Cyclotomic {
public:
    // Zero in Q(zeta_N).
    explicit Cyclotomic(unsigned conductor);
    // From power-basis coefficients (length <= phi(N); shorter is padded).
    Cyclotomic(unsigned conductor, std::vector<Rational> coeffs);

    static Cyclotomic from_rational(unsigned conductor, const Rational& r);
    // zeta_N^k, any integer k.
    static Cyclotomic zeta_power(unsigned conductor, long k);

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws if the element is not rational.
    Rational to_rational() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Multiplicative inverse via extended Euclid against Phi_N.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    // Image in Q(zeta_M) for conductor_ | M (zeta_N -> zeta_M^(M/N)).
    Cyclotomic embed(unsigned target_conductor) const;

    // Power-basis rendering, e.g. "1 - 2*z12^2".
    std::string str() const;

private:
    void check_same_field(const Cyclotomic& o) const;
    unsigned conductor_;
    std::vector<Rational> coeffs_;  // length phi(conductor_)
};

// Smallest common conductor (lcm) and pairwise embedding helper.
Cyclotomic embed_to_common(const Cyclotomic& x, unsigned other_conductor);

}  // namespace trisix
