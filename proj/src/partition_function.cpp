#include "trisix/partition_function.hpp"

#include <numeric>
#include <unordered_map>

#include "trisix/errors.hpp"

namespace trisix {

namespace {

// ---------------------------------------------------------------------
// Column-sweep transfer dynamic program.
//
// Columns j = 1..2n+1 are processed left to right; the frontier between
// columns j and j+1 carries one orientation bit per horizontal edge
// (bit = directed rightward), rows 1..min(j, 2n+1-j).  Within a column the
// sweep runs top to bottom with a mixed profile state:
//   bit 0:        orientation of the pending vertical edge (1 = down)
//   bits 1..:     produced right-edge bits, row r at bit r
//   bits 32..:    remaining left-frontier bits, next row at bit 32
// Worst-case frontier width is n, so states stay far below the row-sweep
// alternative's 2^(2n+1).
// ---------------------------------------------------------------------

template <class K>
struct DpTables {
    int n;
    K zero;
    K one;
    // [j-1][i-1] -> { sigma(q^2 p), sigma(q^2 / p), sigma(q^4) }
    std::vector<std::vector<std::array<K, 3>>> bulk;
    // [j-1] for j = 1..n -> { sigma(q u_j), sigma(q) }
    std::vector<std::array<K, 2>> left;
    // [j-n-2] for j = n+2..2n+1 -> { sigma(q / u_i), sigma(q) }, i = 2n+2-j
    std::vector<std::array<K, 2>> right;
};

inline int bulk_weight_index(bool a_in, bool b_in, bool c_in, bool d_in) {
    if ((a_in && b_in) || (c_in && d_in)) return 0;  // B1 / B2
    if ((b_in && c_in) || (a_in && d_in)) return 1;  // B3 / B4
    return 2;                                        // B5 / B6
}

template <class K>
void map_add(std::unordered_map<std::uint64_t, K>& m, std::uint64_t key, const K& v) {
    auto [it, inserted] = m.try_emplace(key, v);
    if (!inserted) it->second += v;
}

template <class K>
K dp_run(const DpTables<K>& T, Sector sector) {
    const int n = T.n;
    std::unordered_map<std::uint64_t, K> frontier;
    frontier.emplace(0, T.one);
    for (int j = 1; j <= 2 * n + 1; ++j) {
        const int h = std::min(j, 2 * n + 2 - j);
        std::unordered_map<std::uint64_t, K> cur;
        for (const auto& [lmask, val] : frontier)
            map_add(cur, static_cast<std::uint64_t>(lmask) << 32, val);
        for (int i = 1; i <= h; ++i) {
            std::unordered_map<std::uint64_t, K> next;
            for (const auto& [key, val] : cur) {
                const bool d_in = key & 1;  // above edge directed down = in
                const std::uint64_t rbits = (key >> 1) & 0x7FFFFFFFu;
                const std::uint64_t lrem = key >> 32;
                if (i < h) {
                    // bulk vertex
                    const bool a_in = lrem & 1;
                    for (int b_in = 0; b_in <= 1; ++b_in) {
                        for (int c_in = 0; c_in <= 1; ++c_in) {
                            if (a_in + b_in + c_in + d_in != 2) continue;
                            const K& w =
                                T.bulk[j - 1][i - 1][bulk_weight_index(a_in, b_in, c_in, d_in)];
                            std::uint64_t nrb = rbits | (static_cast<std::uint64_t>(!c_in) << (i - 1));
                            std::uint64_t nkey = static_cast<std::uint64_t>(!b_in) | (nrb << 1) |
                                                 ((lrem >> 1) << 32);
                            map_add(next, nkey, K(val * w));
                        }
                    }
                } else if (j <= n) {
                    // left boundary vertex (j,j): free right edge
                    for (int c_in = 0; c_in <= 1; ++c_in) {
                        const K& w = T.left[j - 1][c_in == static_cast<int>(d_in) ? 0 : 1];
                        std::uint64_t nrb = rbits | (static_cast<std::uint64_t>(!c_in) << (i - 1));
                        map_add(next, nrb << 1, K(val * w));
                    }
                } else if (j == n + 1) {
                    // bottom vertex: sector filter on the edge above it
                    const bool down = d_in;
                    if ((sector == Sector::Plus && down) || (sector == Sector::Minus && !down))
                        continue;
                    map_add(next, rbits << 1, val);
                } else {
                    // right boundary vertex
                    const bool a_in = lrem & 1;
                    const K& w = T.right[j - n - 2][a_in == d_in ? 0 : 1];
                    map_add(next, rbits << 1, K(val * w));
                }
            }
            cur = std::move(next);
        }
        frontier.clear();
        for (const auto& [key, val] : cur) map_add(frontier, (key >> 1) & 0x7FFFFFFFu, val);
    }
    auto it = frontier.find(0);
    return it == frontier.end() ? T.zero : it->second;
}

template <class K, class Sigma, class Pow>
DpTables<K> build_tables(int n, const K& q, const std::vector<K>& u, const K& zero, const K& one,
                         Sigma sig, Pow pw) {
    DpTables<K> T{n, zero, one, {}, {}, {}};
    K q2 = pw(q, 2), q4 = pw(q, 4);
    K sq = sig(q), sq4 = sig(q4);
    for (int j = 1; j <= 2 * n + 1; ++j) {
        const int h = std::min(j, 2 * n + 2 - j);
        std::vector<std::array<K, 3>> col;
        const int jp = std::min(j, 2 * n + 2 - j);
        for (int i = 1; i < h; ++i) {
            K p = K(u[i - 1] * u[jp - 1]);
            col.push_back({sig(K(q2 * p)), sig(K(q2 * p.inverse())), sq4});
        }
        T.bulk.push_back(std::move(col));
        if (j <= n) T.left.push_back({sig(K(q * u[j - 1])), sq});
        if (j >= n + 2) {
            K ui = u[2 * n + 2 - j - 1];
            T.right.push_back({sig(K(q * ui.inverse())), sq});
        }
    }
    return T;
}

Rational sig_rat(const Rational& x) { return x - x.inverse(); }
Cyclotomic sig_cyc(const Cyclotomic& x) { return x - x.inverse(); }
Rational pow_rat(const Rational& x, long e) { return x.pow(e); }
Cyclotomic pow_cyc(const Cyclotomic& x, long e) { return x.pow(e); }

}  // namespace

ExactScalar partition_function_eval(int n, const std::vector<ExactScalar>& u,
                                    const ExactScalar& q, Sector sector) {
    if (n < 0) throw std::invalid_argument("partition_function_eval: n must be nonnegative");
    if (n > max_dp_order())
        throw ResourceError("partition_function_eval: n exceeds configured bound " +
                            std::to_string(max_dp_order()));
    if (static_cast<int>(u.size()) != n + 1)
        throw std::invalid_argument("partition_function_eval: expected n+1 spectral parameters");
    if (q.is_quotient())
        throw std::domain_error("partition_function_eval: use partition_function_symbolic for symbolic q");
    for (const auto& x : u) {
        if (x.is_quotient())
            throw std::domain_error("partition_function_eval: symbolic u not supported here");
        if (x.is_zero()) throw std::domain_error("partition_function_eval: u must be invertible");
    }
    unsigned conductor = 1;
    bool any_cyc = q.is_cyclotomic();
    if (q.is_cyclotomic()) conductor = q.cyclotomic().conductor();
    for (const auto& x : u)
        if (x.is_cyclotomic()) {
            conductor = std::lcm(conductor, x.cyclotomic().conductor());
            any_cyc = true;
        }
    if (any_cyc) {
        Cyclotomic qc = q.as_cyclotomic(conductor);
        std::vector<Cyclotomic> uc;
        for (const auto& x : u) uc.push_back(x.as_cyclotomic(conductor));
        auto T = build_tables<Cyclotomic>(n, qc, uc, Cyclotomic(conductor),
                                          Cyclotomic::from_rational(conductor, Rational(1)),
                                          sig_cyc, pow_cyc);
        return ExactScalar(dp_run(T, sector));
    }
    std::vector<Rational> ur;
    for (const auto& x : u) ur.push_back(x.rational());
    auto T = build_tables<Rational>(n, q.rational(), ur, Rational(0), Rational(1), sig_rat,
                                    pow_rat);
    return ExactScalar(dp_run(T, sector));
}

TriangleCounts count_dasasm_dp(int n) {
    if (n < 0) throw std::invalid_argument("count_dasasm_dp: n must be nonnegative");
    if (n > max_dp_order()) throw ResourceError("count_dasasm_dp: n exceeds configured bound");
    DpTables<Integer> T{n, Integer(0), Integer(1), {}, {}, {}};
    for (int j = 1; j <= 2 * n + 1; ++j) {
        const int h = std::min(j, 2 * n + 2 - j);
        T.bulk.emplace_back(static_cast<size_t>(h - 1),
                            std::array<Integer, 3>{Integer(1), Integer(1), Integer(1)});
        if (j <= n) T.left.push_back({Integer(1), Integer(1)});
        if (j >= n + 2) T.right.push_back({Integer(1), Integer(1)});
    }
    TriangleCounts c;
    c.center_plus = dp_run(T, Sector::Plus);
    c.center_minus = dp_run(T, Sector::Minus);
    c.total = c.center_plus + c.center_minus;
    return c;
}

ExactScalar clearing_factor(int n, const ExactScalar& q) {
    return sigma(q).pow(2 * n) * sigma(q.pow(4)).pow(static_cast<long>(n) * n);
}

ExactScalar partition_function_value(int n, const std::vector<ExactScalar>& u,
                                     const ExactScalar& q, Sector sector) {
    ExactScalar cf = clearing_factor(n, q);
    if (cf.is_zero())
        throw std::domain_error(
            "partition_function_value: clearing factor vanishes (sigma(q) or sigma(q^4) = 0)");
    return partition_function_eval(n, u, q, sector) / cf;
}

std::pair<ExactScalar, ExactScalar> partition_function_pm(int n,
                                                          const std::vector<ExactScalar>& u,
                                                          const ExactScalar& q) {
    std::vector<ExactScalar> uneg = u;
    uneg[n] = -uneg[n];
    ExactScalar zp = partition_function_value(n, u, q);
    ExactScalar zm = partition_function_value(n, uneg, q);
    if (n % 2 == 1) zm = -zm;
    ExactScalar half(Rational(1, 2));
    return {ExactScalar(half * (zp + zm)), ExactScalar(half * (zp - zm))};
}

// ---------------------------------------------------------------------
// Symbolic summation over configurations.
// ---------------------------------------------------------------------

namespace {

std::vector<int> param_exps(int n, int i, int j) {
    std::vector<int> e(static_cast<size_t>(n) + 2, 0);
    if (i <= n && (j == i || j == 2 * n + 2 - i)) {
        e[i] = 1;  // boundary vertex: single parameter u_i
    } else if (i <= n) {
        e[i] += 1;
        e[std::min(j, 2 * n + 2 - j)] += 1;
    }
    return e;
}

}  // namespace

ClearedPartitionFunction partition_function_symbolic(int n, Sector sector) {
    if (n < 0) throw std::invalid_argument("partition_function_symbolic: n must be nonnegative");
    if (n > max_symbolic_order())
        throw ResourceError("partition_function_symbolic: n exceeds configured bound " +
                            std::to_string(max_symbolic_order()));
    VarSet vars = z_vars(n);
    LaurentPoly total(vars);
    enumerate_triangles(n, [&](const OddDasasmTriangle& t) {
        int center = t.at(n + 1, n + 1);
        if (sector == Sector::Plus && center != 1) return true;
        if (sector == Sector::Minus && center != -1) return true;
        SixVertexConfig c = config_from_triangle(t);
        LaurentPoly term = LaurentPoly::constant(vars, FieldScalar(Rational(1)));
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= 2 * n + 2 - i; ++j)
                term *= weight_cleared_symbolic(c.local_config(i, j), vars, param_exps(n, i, j));
        total += term;
        return true;
    });
    return ClearedPartitionFunction{n, std::move(total)};
}

// ---------------------------------------------------------------------
// Specializations (spec1..spec4) and global properties.
// ---------------------------------------------------------------------

namespace {

using Image = LaurentPoly::MonomialImage;

// Identity images over z_vars(n).
std::vector<Image> identity_images(int n) {
    std::vector<Image> im;
    for (int k = 0; k <= n + 1; ++k) {
        std::vector<int> e(static_cast<size_t>(n) + 2, 0);
        e[k] = 1;
        im.push_back(Image{FieldScalar(Rational(1)), e});
    }
    return im;
}

std::vector<int> exps(int n, std::initializer_list<std::pair<int, int>> assign) {
    std::vector<int> e(static_cast<size_t>(n) + 2, 0);
    for (auto [var, p] : assign) e[var] += p;
    return e;
}

LaurentPoly sig(const VarSet& vars, const std::vector<int>& e) {
    return sigma_of_monomial(vars, e);
}

// Cleared polynomial of order m renamed into z_vars(n) with u_k of the
// smaller function mapped to variable index where[k] (q stays q).
LaurentPoly smaller_cleared(int m, int n, const std::vector<size_t>& where_u) {
    LaurentPoly p = partition_function_symbolic(m).poly;
    std::vector<size_t> where(static_cast<size_t>(m) + 2);
    where[0] = 0;
    for (int k = 1; k <= m + 1; ++k) where[k] = where_u[k - 1];
    return p.rename(z_vars(n), where);
}

struct QuotSide {
    LaurentPoly num;
    LaurentPoly den;
};

bool cross_equal(const QuotSide& a, const QuotSide& b) {
    return a.num * b.den == b.num * a.den;
}

// Sampled evaluation of an uncleared Z at rational points.
ExactScalar z_value(int n, const std::vector<Rational>& u, const Rational& q,
                    Sector sector = Sector::All) {
    std::vector<ExactScalar> ue;
    for (const auto& x : u) ue.push_back(ExactScalar(x));
    return partition_function_value(n, ue, ExactScalar(q), sector);
}

ExactScalar sig_val(const Rational& x) { return sigma(ExactScalar(x)); }

}  // namespace

Report verify_specialization(const std::string& prop, int n, int trials, std::uint64_t seed) {
    Report rep;
    rep.suite = "specializations";
    SeededRng rng(seed);

    auto pointwise = [&](const std::string& name, auto&& check) {
        for (int t = 0; t < trials; ++t) {
            Rational q = rng.next_point();
            std::vector<Rational> u;
            for (int k = 0; k <= n; ++k) u.push_back(rng.next_point());
            bool ok = check(q, u);
            rep.add(name, "n=" + std::to_string(n) + ",trial=" + std::to_string(t), ok,
                    ok ? "" : "q=" + q.str());
        }
    };

    if (prop == "spec1") {
        if (n < 1) throw std::invalid_argument("spec1 requires n >= 1");
        if (n <= max_symbolic_order() && n <= 2) {
            VarSet vars = z_vars(n);
            LaurentPoly Pn = partition_function_symbolic(n).poly;
            // u1 -> q
            auto im = identity_images(n);
            im[1] = Image{FieldScalar(Rational(1)), exps(n, {{0, 1}})};
            LaurentPoly lhs = Pn.substitute(vars, im);
            // prefactor (q + 1/q) prod_{i=2}^n sigma(q^3 u_i)^2 sigma(q^3 u_{n+1})
            LaurentPoly pref = LaurentPoly::monomial(vars, exps(n, {{0, 1}}), FieldScalar(Rational(1))) +
                               LaurentPoly::monomial(vars, exps(n, {{0, -1}}), FieldScalar(Rational(1)));
            for (int i = 2; i <= n; ++i) pref *= sig(vars, exps(n, {{0, 3}, {i, 1}})).pow(2);
            pref *= sig(vars, exps(n, {{0, 3}, {n + 1, 1}}));
            std::vector<size_t> where;
            for (int k = 1; k <= n; ++k) where.push_back(static_cast<size_t>(k) + 1);
            LaurentPoly Pm = smaller_cleared(n - 1, n, where);
            // lhs / (sq^2n sq4^n^2)  ==  pref * Pm / (sq4^(2n-1) sq^(2n-2) sq4^((n-1)^2))
            LaurentPoly sq = sig(vars, exps(n, {{0, 1}}));
            LaurentPoly sq4 = sig(vars, exps(n, {{0, 4}}));
            QuotSide L{lhs, sq.pow(2 * n) * sq4.pow(static_cast<long>(n) * n)};
            QuotSide R{pref * Pm,
                       sq4.pow(2 * n - 1) * sq.pow(2 * n - 2) *
                           sq4.pow(static_cast<long>(n - 1) * (n - 1))};
            rep.add("spec1", "n=" + std::to_string(n) + ",symbolic", cross_equal(L, R));
        } else {
            pointwise("spec1", [&](Rational q, std::vector<Rational> u) {
                u[0] = q;
                ExactScalar lhs = z_value(n, u, q);
                ExactScalar pref = ExactScalar(q) + ExactScalar(q).inverse();
                for (int i = 2; i <= n; ++i) pref *= sig_val(q.pow(3) * u[i - 1]).pow(2);
                pref *= sig_val(q.pow(3) * u[n]);
                pref /= sig_val(q.pow(4)).pow(2 * n - 1);
                std::vector<Rational> usub(u.begin() + 1, u.end());
                return lhs == pref * z_value(n - 1, usub, q);
            });
        }
    } else if (prop == "spec2") {
        if (n < 2) throw std::invalid_argument("spec2 requires n >= 2");
        if (n <= 2) {
            VarSet vars = z_vars(n);
            LaurentPoly Pn = partition_function_symbolic(n).poly;
            // u2 -> q^2 / u1
            auto im = identity_images(n);
            im[2] = Image{FieldScalar(Rational(1)), exps(n, {{0, 2}, {1, -1}})};
            LaurentPoly lhs = Pn.substitute(vars, im);
            LaurentPoly pref = sig(vars, exps(n, {{1, 1}})) * sig(vars, exps(n, {{0, 1}, {1, 1}})) *
                               sig(vars, exps(n, {{0, 2}, {1, -1}})) *
                               sig(vars, exps(n, {{0, 3}, {1, -1}}));
            for (int i = 3; i <= n; ++i)
                pref *= (sig(vars, exps(n, {{0, 2}, {1, 1}, {i, 1}})) *
                         sig(vars, exps(n, {{0, 4}, {1, -1}, {i, 1}})))
                            .pow(2);
            pref *= sig(vars, exps(n, {{0, 2}, {1, 1}, {n + 1, 1}})) *
                    sig(vars, exps(n, {{0, 4}, {1, -1}, {n + 1, 1}}));
            std::vector<size_t> where;
            for (int k = 3; k <= n + 1; ++k) where.push_back(static_cast<size_t>(k));
            LaurentPoly Pm = smaller_cleared(n - 2, n, where);
            LaurentPoly sq = sig(vars, exps(n, {{0, 1}}));
            LaurentPoly sq4 = sig(vars, exps(n, {{0, 4}}));
            QuotSide L{lhs, sq.pow(2 * n) * sq4.pow(static_cast<long>(n) * n)};
            QuotSide R{pref * Pm,
                       sq.pow(4) * sq4.pow(2 * (2 * n - 3)) * sq.pow(2 * (n - 2)) *
                           sq4.pow(static_cast<long>(n - 2) * (n - 2))};
            rep.add("spec2", "n=" + std::to_string(n) + ",symbolic", cross_equal(L, R));
        } else {
            pointwise("spec2", [&](Rational q, std::vector<Rational> u) {
                u[1] = q.pow(2) * u[0].inverse();
                ExactScalar lhs = z_value(n, u, q);
                ExactScalar pref = sig_val(u[0]) * sig_val(q * u[0]) * sig_val(u[1]) *
                                   sig_val(q * u[1]);
                for (int i = 3; i <= n; ++i)
                    pref *= (sig_val(q.pow(2) * u[0] * u[i - 1]) *
                             sig_val(q.pow(2) * u[1] * u[i - 1]))
                                .pow(2);
                pref *= sig_val(q.pow(2) * u[0] * u[n]) * sig_val(q.pow(2) * u[1] * u[n]);
                pref /= sig_val(q).pow(4) * sig_val(q.pow(4)).pow(2 * (2 * n - 3));
                std::vector<Rational> usub(u.begin() + 2, u.end());
                return lhs == pref * z_value(n - 2, usub, q);
            });
        }
    } else if (prop == "spec3") {
        if (n < 1) throw std::invalid_argument("spec3 requires n >= 1");
        if (n <= 2) {
            VarSet vars = z_vars(n);
            LaurentPoly Pn = partition_function_symbolic(n).poly;
            // u_{n+1} -> q^2 / u1
            auto im = identity_images(n);
            im[n + 1] = Image{FieldScalar(Rational(1)), exps(n, {{0, 2}, {1, -1}})};
            LaurentPoly lhs = Pn.substitute(vars, im);
            LaurentPoly pref = sig(vars, exps(n, {{0, 1}, {1, 1}})) *
                               (sig(vars, exps(n, {{0, 1}, {1, -1}})) + sig(vars, exps(n, {{0, 1}})));
            for (int i = 2; i <= n; ++i)
                pref *= sig(vars, exps(n, {{0, 2}, {1, 1}, {i, 1}})) *
                        sig(vars, exps(n, {{0, 4}, {1, -1}, {i, 1}}));
            std::vector<size_t> where;
            for (int k = 2; k <= n; ++k) where.push_back(static_cast<size_t>(k));
            where.push_back(1);  // last parameter of the smaller Z is u_1
            LaurentPoly Pm = smaller_cleared(n - 1, n, where);
            LaurentPoly sq = sig(vars, exps(n, {{0, 1}}));
            LaurentPoly sq4 = sig(vars, exps(n, {{0, 4}}));
            QuotSide L{lhs, sq.pow(2 * n) * sq4.pow(static_cast<long>(n) * n)};
            QuotSide R{pref * Pm,
                       sq.pow(2) * sq4.pow(2 * n - 2) * sq.pow(2 * (n - 1)) *
                           sq4.pow(static_cast<long>(n - 1) * (n - 1))};
            rep.add("spec3", "n=" + std::to_string(n) + ",symbolic", cross_equal(L, R));
        } else {
            pointwise("spec3", [&](Rational q, std::vector<Rational> u) {
                u[n] = q.pow(2) * u[0].inverse();
                ExactScalar lhs = z_value(n, u, q);
                ExactScalar pref = sig_val(q * u[0]) *
                                   (sig_val(q * u[0].inverse()) + sig_val(q));
                for (int i = 2; i <= n; ++i)
                    pref *= sig_val(q.pow(2) * u[0] * u[i - 1]) * sig_val(q.pow(2) * u[i - 1] * u[n]);
                pref /= sig_val(q).pow(2) * sig_val(q.pow(4)).pow(2 * n - 2);
                std::vector<Rational> usub(u.begin() + 1, u.begin() + n);
                usub.push_back(u[0]);
                return lhs == pref * z_value(n - 1, usub, q);
            });
        }
    } else if (prop == "spec4") {
        if (n < 1) throw std::invalid_argument("spec4 requires n >= 1");
        if (n <= 2) {
            VarSet vars = z_vars(n);
            LaurentPoly Pn = partition_function_symbolic(n).poly;
            auto im = identity_images(n);
            im[n] = Image{FieldScalar(Rational(1)), exps(n, {{0, 2}})};       // u_n -> q^2
            im[n + 1] = Image{FieldScalar(Rational(1)), exps(n, {})};         // u_{n+1} -> 1
            LaurentPoly lhs = Pn.substitute(vars, im);
            rep.add("spec4", "n=" + std::to_string(n) + ",symbolic", lhs.is_zero());
        } else {
            pointwise("spec4", [&](Rational q, std::vector<Rational> u) {
                u[n - 1] = q.pow(2);
                u[n] = Rational(1);
                return z_value(n, u, q).is_zero();
            });
        }
    } else {
        throw std::invalid_argument("verify_specialization: unknown proposition " + prop);
    }
    rep.stabilize();
    return rep;
}

Report verify_global_properties(int n) {
    Report rep;
    rep.suite = "global-properties";
    LaurentPoly P = partition_function_symbolic(n).poly;
    std::string nn = "n=" + std::to_string(n);
    for (int i = 1; i <= n; ++i) {
        rep.add("even-in-u" + std::to_string(i), nn, P.is_even_in(i));
        rep.add("degree-u" + std::to_string(i), nn,
                P.min_degree(i) >= -2 * n && P.max_degree(i) <= 2 * n);
    }
    rep.add("degree-u" + std::to_string(n + 1), nn,
            P.min_degree(n + 1) >= -n && P.max_degree(n + 1) <= n);
    std::vector<size_t> all_u;
    for (int k = 1; k <= n + 1; ++k) all_u.push_back(static_cast<size_t>(k));
    rep.add("reciprocal-invariance", nn, P.invert_vars(all_u) == P);
    for (int i = 1; i < n; ++i)
        rep.add("symmetry-u" + std::to_string(i) + "-u" + std::to_string(i + 1), nn,
                P.swap_vars(i, i + 1) == P);
    rep.stabilize();
    return rep;
}

}  // namespace trisix
