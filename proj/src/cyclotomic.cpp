#include "trisix/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace trisix {

namespace {

// Exact division of integer polynomials, lowest degree first.  Used only
// for (x^N - 1) / prod Phi_d where the division is known to be exact.
std::vector<Integer> exact_divide(std::vector<Integer> num, const std::vector<Integer>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Integer> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
    const Integer& lead = den.back();
    for (long d = static_cast<long>(num.size()) - 1; d >= static_cast<long>(den.size()) - 1; --d) {
        if (num[d] == 0) continue;
        if (num[d] % lead != 0) throw std::logic_error("exact_divide: not divisible");
        Integer c = num[d] / lead;
        q[d - (den.size() - 1)] = c;
        for (size_t k = 0; k < den.size(); ++k) num[d - (den.size() - 1) + k] -= c * den[k];
    }
    for (const Integer& c : num)
        if (c != 0) throw std::logic_error("exact_divide: nonzero remainder");
    return q;
}

struct ConductorTable {
    unsigned phi;
    std::vector<Integer> modulus;               // Phi_N, monic
    std::vector<std::vector<Rational>> redrow;  // x^(phi+k) mod Phi_N, k = 0..phi-2
};

const ConductorTable& conductor_table(unsigned N) {
    static std::map<unsigned, ConductorTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    ConductorTable t;
    t.modulus = cyclotomic_polynomial(N);
    t.phi = static_cast<unsigned>(t.modulus.size()) - 1;
    // Reduction rows: x^phi = -(Phi - x^phi); each next row is x * previous,
    // reduced again.
    std::vector<Rational> row(t.phi);
    for (unsigned i = 0; i < t.phi; ++i) row[i] = Rational(Integer(-t.modulus[i]));
    for (unsigned k = 0; k + 1 < t.phi; ++k) {
        t.redrow.push_back(row);
        // multiply by x
        std::vector<Rational> next(t.phi);
        Rational overflow = row[t.phi - 1];
        for (unsigned i = t.phi - 1; i >= 1; --i) next[i] = row[i - 1];
        next[0] = Rational(0);
        if (!overflow.is_zero())
            for (unsigned i = 0; i < t.phi; ++i) next[i] += overflow * Rational(Integer(-t.modulus[i]));
        row = std::move(next);
    }
    if (t.phi == 1) t.redrow.clear();
    auto [pos, ignore] = cache.emplace(N, std::move(t));
    return pos->second;
}

// Dense rational polynomial helpers for the extended Euclid.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly sub_scaled(QPoly a, const QPoly& b, const Rational& c, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
    return a;
}

// Divide a by b, returning (quotient, remainder).
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q;
    if (b.empty()) throw std::domain_error("divmod: zero divisor");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        a = sub_scaled(std::move(a), b, c, shift);
    }
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

unsigned euler_phi(unsigned N) {
    unsigned result = N, n = N;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned N) {
    if (N == 0) throw std::domain_error("cyclotomic_polynomial: N must be positive");
    if (N == 1) return {Integer(-1), Integer(1)};
    // (x^N - 1) / prod_{d | N, d < N} Phi_d
    std::vector<Integer> num(N + 1, Integer(0));
    num[0] = -1;
    num[N] = 1;
    for (unsigned d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        num = exact_divide(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

Cyclotomic::Cyclotomic(unsigned conductor) : conductor_(conductor) {
    coeffs_.assign(conductor_table(conductor).phi, Rational(0));
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
    const auto& t = conductor_table(conductor);
    if (coeffs.size() > t.phi) throw std::domain_error("Cyclotomic: too many coefficients");
    coeffs.resize(t.phi, Rational(0));
    coeffs_ = std::move(coeffs);
}

Cyclotomic Cyclotomic::from_rational(unsigned conductor, const Rational& r) {
    Cyclotomic x(conductor);
    x.coeffs_[0] = r;
    return x;
}

Cyclotomic Cyclotomic::zeta_power(unsigned conductor, long k) {
    const auto& t = conductor_table(conductor);
    long m = k % static_cast<long>(conductor);
    if (m < 0) m += conductor;
    Cyclotomic z(conductor);
    if (t.phi == 1) {
        // Q(zeta_1) = Q(zeta_2) = Q; the generator is the root of the
        // monic linear modulus, i.e. +-1.
        z.coeffs_[0] = Rational(Integer(-t.modulus[0]));
    } else {
        z.coeffs_[1] = Rational(1);
    }
    return z.pow(m);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: element is not rational");
    return coeffs_[0];
}

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
    if (conductor_ != o.conductor_)
        throw std::domain_error("Cyclotomic: conductor mismatch (" + std::to_string(conductor_) +
                                " vs " + std::to_string(o.conductor_) + ")");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same_field(o);
    const auto& t = conductor_table(conductor_);
    const unsigned phi = t.phi;
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            conv[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + phi);
    for (unsigned k = phi; k < conv.size(); ++k) {
        if (conv[k].is_zero()) continue;
        const auto& row = t.redrow[k - phi];
        for (unsigned i = 0; i < phi; ++i) out[i] += conv[k] * row[i];
    }
    coeffs_ = std::move(out);
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    return a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    const auto& t = conductor_table(conductor_);
    // Extended Euclid on (f, Phi_N) over Q[x]: u*f + v*Phi = gcd = const.
    QPoly r0(coeffs_.begin(), coeffs_.end());
    trim(r0);
    QPoly r1(t.modulus.size());
    for (size_t i = 0; i < t.modulus.size(); ++i) r1[i] = Rational(t.modulus[i]);
    QPoly s0 = {Rational(1)}, s1 = {};
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (degree 0 since Phi_N is irreducible and f != 0 mod Phi_N).
    if (r0.size() != 1) throw std::logic_error("Cyclotomic: gcd with Phi_N not constant");
    Rational scale = r0[0].inverse();
    std::vector<Rational> inv(t.phi, Rational(0));
    if (s0.size() > t.phi) throw std::logic_error("Cyclotomic: inverse degree out of range");
    for (size_t i = 0; i < s0.size(); ++i) inv[i] = s0[i] * scale;
    return Cyclotomic(conductor_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Cyclotomic acc = Cyclotomic::from_rational(conductor_, Rational(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::embed(unsigned target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0)
        throw std::domain_error("Cyclotomic: embed requires conductor | target");
    unsigned step = target / conductor_;
    Cyclotomic out(target);
    Cyclotomic z = Cyclotomic::from_rational(target, Rational(1));
    Cyclotomic zstep = Cyclotomic::zeta_power(target, step);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            Cyclotomic term = z;
            for (auto& c : term.coeffs_) c *= coeffs_[i];
            out += term;
        }
        if (i + 1 < coeffs_.size()) z *= zstep;
    }
    return out;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Cyclotomic embed_to_common(const Cyclotomic& x, unsigned other_conductor) {
    unsigned l = std::lcm(x.conductor(), other_conductor);
    return x.embed(l);
}

}  // namespace trisix
