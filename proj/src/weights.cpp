#include "trisix/weights.hpp"

#include <array>

namespace trisix {

namespace {

enum class WKind { BulkU, BulkUbar, BulkOne, BoundU, BoundUbar, BoundOne, One };

WKind wkind(LocalConfigKind c) {
    switch (c) {
        case LocalConfigKind::B1:
        case LocalConfigKind::B2: return WKind::BulkU;
        case LocalConfigKind::B3:
        case LocalConfigKind::B4: return WKind::BulkUbar;
        case LocalConfigKind::B5:
        case LocalConfigKind::B6: return WKind::BulkOne;
        case LocalConfigKind::L1:
        case LocalConfigKind::L2: return WKind::BoundU;
        case LocalConfigKind::R1:
        case LocalConfigKind::R2: return WKind::BoundUbar;
        case LocalConfigKind::L3:
        case LocalConfigKind::L4:
        case LocalConfigKind::R3:
        case LocalConfigKind::R4: return WKind::BoundOne;
        default: return WKind::One;
    }
}

}  // namespace

ExactScalar weight(LocalConfigKind c, const ExactScalar& u, const WeightContext& ctx) {
    const ExactScalar& q = ctx.q;
    switch (wkind(c)) {
        case WKind::One: return ExactScalar(Rational(1));
        case WKind::BulkOne: return ExactScalar(Rational(1));
        case WKind::BoundOne: return ExactScalar(Rational(1));
        case WKind::BulkU:
        case WKind::BulkUbar: {
            ExactScalar den = sigma(q.pow(4));
            if (den.is_zero())
                throw std::domain_error("weight: sigma(q^4) = 0 (use weight_cleared)");
            ExactScalar p = (wkind(c) == WKind::BulkU) ? q.pow(2) * u : q.pow(2) * u.inverse();
            return sigma(p) / den;
        }
        case WKind::BoundU:
        case WKind::BoundUbar: {
            ExactScalar den = sigma(q);
            if (den.is_zero()) throw std::domain_error("weight: sigma(q) = 0 (use weight_cleared)");
            ExactScalar p = (wkind(c) == WKind::BoundU) ? q * u : q * u.inverse();
            return sigma(p) / den;
        }
    }
    return ExactScalar(Rational(1));
}

ExactScalar weight_cleared(LocalConfigKind c, const ExactScalar& u, const WeightContext& ctx) {
    const ExactScalar& q = ctx.q;
    switch (wkind(c)) {
        case WKind::One: return ExactScalar(Rational(1));
        case WKind::BulkOne: return sigma(q.pow(4));
        case WKind::BoundOne: return sigma(q);
        case WKind::BulkU: return sigma(q.pow(2) * u);
        case WKind::BulkUbar: return sigma(q.pow(2) * u.inverse());
        case WKind::BoundU: return sigma(q * u);
        case WKind::BoundUbar: return sigma(q * u.inverse());
    }
    return ExactScalar(Rational(1));
}

VarSet z_vars(int n) {
    std::vector<std::string> names{"q"};
    for (int i = 1; i <= n + 1; ++i) names.push_back("u" + std::to_string(i));
    return make_vars(std::move(names));
}

LaurentPoly sigma_of_monomial(const VarSet& vars, const std::vector<int>& exps) {
    return LaurentPoly::sigma_monomial(
        LaurentPoly::monomial(vars, exps, FieldScalar(Rational(1))));
}

LaurentPoly weight_cleared_symbolic(LocalConfigKind c, const VarSet& vars,
                                    const std::vector<int>& param_exps) {
    auto with_q = [&](int qshift, int sign) {
        std::vector<int> e(vars->size(), 0);
        for (size_t i = 0; i < param_exps.size(); ++i) e[i] = sign * param_exps[i];
        e[0] += qshift;
        return e;
    };
    switch (wkind(c)) {
        case WKind::One: return LaurentPoly::constant(vars, FieldScalar(Rational(1)));
        case WKind::BulkOne: return sigma_of_monomial(vars, with_q(4, 0));
        case WKind::BoundOne: return sigma_of_monomial(vars, with_q(1, 0));
        case WKind::BulkU: return sigma_of_monomial(vars, with_q(2, 1));
        case WKind::BulkUbar: return sigma_of_monomial(vars, with_q(2, -1));
        case WKind::BoundU: return sigma_of_monomial(vars, with_q(1, 1));
        case WKind::BoundUbar: return sigma_of_monomial(vars, with_q(1, -1));
    }
    return LaurentPoly::constant(vars, FieldScalar(Rational(1)));
}

namespace {

std::string orient_key(std::initializer_list<bool> ins) {
    static const char* names[] = {"a", "b", "c", "d"};
    std::string s;
    int i = 0;
    for (bool in : ins) {
        if (i) s += ",";
        s += names[i];
        s += in ? "=in" : "=out";
        ++i;
    }
    return s;
}

}  // namespace

Report verify_weight_symmetries() {
    Report rep;
    rep.suite = "weights";
    auto vars = make_vars({"q", "u"});
    auto bulk_w = [&](bool a, bool b, bool c, bool d, std::vector<int> param) {
        return weight_cleared_symbolic(classify_bulk(a, b, c, d), vars, param);
    };
    const std::vector<int> u_param = {0, 1};
    const std::vector<int> ubar_param = {0, -1};
    const std::vector<int> q2_param = {2, 0};
    const std::vector<int> qbar2_param = {-2, 0};

    for (int mask = 0; mask < 16; ++mask) {
        bool a = mask & 1, b = mask & 2, c = mask & 4, d = mask & 8;
        if (a + b + c + d != 2) continue;
        std::string key = orient_key({a, b, c, d});
        LaurentPoly w = bulk_w(a, b, c, d, u_param);
        // diagonal reflections and arrow reversal
        bool ok = w == bulk_w(d, c, b, a, u_param) && w == bulk_w(b, a, d, c, u_param) &&
                  w == bulk_w(!a, !b, !c, !d, u_param);
        rep.add("Wref-bulk", key, ok);
        // vertical reflection with u -> 1/u
        ok = w == bulk_w(c, b, a, d, ubar_param);
        rep.add("Wrep-bulk", key, ok);
        // reduction at q^2 and dual reduction at 1/q^2: delta * sigma(q^4)
        LaurentPoly delta =
            (a != d && b != c) ? sigma_of_monomial(vars, {4, 0}) : LaurentPoly(vars);
        ok = bulk_w(a, b, c, d, q2_param) == delta && bulk_w(c, b, a, d, qbar2_param) == delta;
        rep.add("Wred-bulk", key, ok);
    }

    // Boundary weights: slots are (side edge, above edge).
    auto left_w = [&](bool x, bool y, std::vector<int> param) {
        return weight_cleared_symbolic(classify_left(x, y), vars, param);
    };
    auto right_w = [&](bool x, bool y, std::vector<int> param) {
        return weight_cleared_symbolic(classify_right(x, y), vars, param);
    };
    for (int mask = 0; mask < 4; ++mask) {
        bool x = mask & 1, y = mask & 2;
        std::string key = orient_key({x, y});
        // slot swap and arrow reversal
        bool ok = left_w(x, y, u_param) == left_w(y, x, u_param) &&
                  left_w(x, y, u_param) == left_w(!x, !y, u_param);
        rep.add("Wref-left", key, ok);
        ok = right_w(x, y, u_param) == right_w(y, x, u_param) &&
             right_w(x, y, u_param) == right_w(!x, !y, u_param);
        rep.add("Wref-right", key, ok);
        // vertical reflection maps left to right with u -> 1/u
        ok = left_w(x, y, u_param) == right_w(x, y, ubar_param);
        rep.add("Wrep-boundary", key, ok);
        // reduction at q^{-1} (left) and q (right): delta_{x, reversed y}
        LaurentPoly delta = (x != y) ? sigma_of_monomial(vars, {1, 0}) : LaurentPoly(vars);
        ok = left_w(x, y, {-1, 0}) == delta && right_w(x, y, {1, 0}) == delta;
        rep.add("Wred-boundary", key, ok);
    }
    rep.stabilize();
    return rep;
}

}  // namespace trisix
