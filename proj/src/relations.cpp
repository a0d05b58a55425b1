#include "trisix/relations.hpp"

#include <array>

#include "trisix/weights.hpp"

namespace trisix {

namespace {

// Edge reference from a vertex slot.  External edge bits mean "directed
// into the attachment vertex"; internal edge bits mean "directed into the
// first endpoint", so the second endpoint reads the negation.
struct SlotRef {
    bool external;
    int index;
    bool second_end = false;  // internal edges only

    bool in(unsigned ext_mask, unsigned int_mask) const {
        bool bit = external ? (ext_mask >> index) & 1 : (int_mask >> index) & 1;
        return external ? bit : (second_end ? !bit : bit);
    }
};

SlotRef ext(int i) { return SlotRef{true, i, false}; }
SlotRef fst(int i) { return SlotRef{false, i, false}; }
SlotRef snd(int i) { return SlotRef{false, i, true}; }

struct RelVertex {
    char kind;                 // 'B' bulk, 'L' left boundary, 'R' right boundary
    std::array<int, 4> param;  // exponents of (q,u,v,w)
    // 'B': {left, below, right, above}; 'L': {right, above}; 'R': {left, above}
    std::vector<SlotRef> slots;
};

struct RelSide {
    int internal_count = 0;
    std::vector<RelVertex> vertices;
};

LaurentPoly side_sum(const RelSide& side, const VarSet& vars, unsigned ext_mask) {
    LaurentPoly total(vars);
    for (unsigned im = 0; im < (1u << side.internal_count); ++im) {
        LaurentPoly term = LaurentPoly::constant(vars, FieldScalar(Rational(1)));
        bool legal = true;
        for (const auto& v : side.vertices) {
            LocalConfigKind kind;
            if (v.kind == 'B') {
                bool a = v.slots[0].in(ext_mask, im), b = v.slots[1].in(ext_mask, im);
                bool c = v.slots[2].in(ext_mask, im), d = v.slots[3].in(ext_mask, im);
                if (a + b + c + d != 2) {
                    legal = false;
                    break;
                }
                kind = classify_bulk(a, b, c, d);
            } else if (v.kind == 'L') {
                kind = classify_left(v.slots[0].in(ext_mask, im), v.slots[1].in(ext_mask, im));
            } else {
                kind = classify_right(v.slots[0].in(ext_mask, im), v.slots[1].in(ext_mask, im));
            }
            term *= weight_cleared_symbolic(kind, vars,
                                            {v.param[0], v.param[1], v.param[2], v.param[3]});
        }
        if (legal) total += term;
    }
    return total;
}

struct Relation {
    std::vector<std::string> ext_names;
    RelSide lhs, rhs;
    bool rhs_is_bue_delta = false;  // RHS = sigma(qu) sigma(q/u) delta_{a, reversed b}
};

Relation make_relation(const std::string& rel) {
    Relation r;
    const std::array<int, 4> Quvb = {2, 1, -1, 0};  // q^2 u / v
    const std::array<int, 4> Puw = {0, 1, 0, 1};
    const std::array<int, 4> Pvw = {0, 0, 1, 1};
    const std::array<int, 4> Puv = {0, 1, 1, 0};
    if (rel == "YBE-vertical") {
        r.ext_names = {"a1", "a2", "a3", "b1", "b2", "b3"};
        // crossing above the transversal line
        r.lhs.internal_count = 3;
        r.lhs.vertices = {
            {'B', Quvb, {fst(0), fst(1), ext(1), ext(0)}},
            {'B', Pvw, {ext(2), ext(4), fst(2), snd(0)}},
            {'B', Puw, {snd(2), ext(3), ext(5), snd(1)}},
        };
        // crossing below the transversal line
        r.rhs.internal_count = 3;
        r.rhs.vertices = {
            {'B', Puw, {ext(2), fst(0), fst(1), ext(0)}},
            {'B', Pvw, {snd(1), fst(2), ext(5), ext(1)}},
            {'B', Quvb, {ext(4), ext(3), snd(2), snd(0)}},
        };
    } else if (rel == "YBE-horizontal") {
        r.ext_names = {"a1", "a2", "a3", "b1", "b2", "b3"};
        r.lhs.internal_count = 3;
        r.lhs.vertices = {
            {'B', Quvb, {ext(0), ext(1), fst(0), fst(1)}},
            {'B', Puw, {snd(0), ext(2), ext(3), fst(2)}},
            {'B', Pvw, {snd(1), snd(2), ext(4), ext(5)}},
        };
        r.rhs.internal_count = 3;
        r.rhs.vertices = {
            {'B', Pvw, {ext(1), ext(2), fst(0), fst(1)}},
            {'B', Puw, {ext(0), snd(1), fst(2), ext(5)}},
            {'B', Quvb, {snd(2), snd(0), ext(3), ext(4)}},
        };
    } else if (rel == "RE-left") {
        r.ext_names = {"a1", "a2", "b1", "b2"};
        r.lhs.internal_count = 4;
        r.lhs.vertices = {
            {'B', Quvb, {fst(0), fst(1), ext(1), ext(0)}},
            {'B', Puv, {snd(2), fst(3), ext(3), snd(1)}},
            {'L', {0, 1, 0, 0}, {ext(2), snd(3)}},
            {'L', {0, 0, 1, 0}, {fst(2), snd(0)}},
        };
        r.rhs.internal_count = 4;
        r.rhs.vertices = {
            {'L', {0, 1, 0, 0}, {fst(0), ext(0)}},
            {'B', Puv, {snd(0), fst(1), fst(2), ext(1)}},
            {'L', {0, 0, 1, 0}, {fst(3), snd(1)}},
            {'B', Quvb, {snd(2), snd(3), ext(2), ext(3)}},
        };
    } else if (rel == "RE-right") {
        r.ext_names = {"a1", "a2", "b1", "b2"};
        r.lhs.internal_count = 4;
        r.lhs.vertices = {
            {'B', Quvb, {ext(0), ext(1), fst(0), fst(1)}},
            {'R', {0, 1, 0, 0}, {snd(0), fst(2)}},
            {'B', Puv, {snd(1), snd(2), fst(3), ext(2)}},
            {'R', {0, 0, 1, 0}, {snd(3), ext(3)}},
        };
        r.rhs.internal_count = 4;
        r.rhs.vertices = {
            {'R', {0, 0, 1, 0}, {ext(1), fst(0)}},
            {'B', Puv, {ext(0), snd(0), fst(1), fst(2)}},
            {'R', {0, 1, 0, 0}, {snd(1), fst(3)}},
            {'B', Quvb, {snd(2), snd(3), ext(3), ext(2)}},
        };
    } else if (rel == "BUE-left") {
        r.ext_names = {"a", "b"};
        r.lhs.internal_count = 1;
        r.lhs.vertices = {
            {'L', {-1, 1, 0, 0}, {fst(0), ext(0)}},
            {'L', {-1, -1, 0, 0}, {ext(1), snd(0)}},
        };
        r.rhs_is_bue_delta = true;
    } else if (rel == "BUE-right") {
        r.ext_names = {"a", "b"};
        r.lhs.internal_count = 1;
        r.lhs.vertices = {
            {'R', {1, 1, 0, 0}, {ext(0), fst(0)}},
            {'R', {1, -1, 0, 0}, {snd(0), ext(1)}},
        };
        r.rhs_is_bue_delta = true;
    } else {
        throw std::invalid_argument("verify_local_relation: unknown relation " + rel);
    }
    return r;
}

}  // namespace

Report verify_local_relation(const std::string& rel) {
    Report rep;
    rep.suite = "relations";
    Relation r = make_relation(rel);
    VarSet vars = make_vars({"q", "u", "v", "w"});
    const unsigned next = static_cast<unsigned>(r.ext_names.size());
    for (unsigned em = 0; em < (1u << next); ++em) {
        std::string key;
        for (unsigned i = 0; i < next; ++i) {
            if (i) key += ",";
            key += r.ext_names[i] + ((em >> i) & 1 ? "=in" : "=out");
        }
        LaurentPoly lhs = side_sum(r.lhs, vars, em);
        LaurentPoly rhs(vars);
        if (r.rhs_is_bue_delta) {
            bool a_in = em & 1, b_in = (em >> 1) & 1;
            if (a_in != b_in)
                rhs = sigma_of_monomial(vars, {1, 1, 0, 0}) *
                      sigma_of_monomial(vars, {1, -1, 0, 0});
        } else {
            rhs = side_sum(r.rhs, vars, em);
        }
        rep.add(rel, key, lhs == rhs);
    }
    rep.stabilize();
    return rep;
}

Report verify_all_local_relations() {
    Report rep;
    rep.suite = "relations";
    for (const char* rel : {"YBE-vertical", "YBE-horizontal", "RE-left", "RE-right", "BUE-left",
                            "BUE-right"})
        rep.merge(verify_local_relation(rel));
    rep.stabilize();
    return rep;
}

}  // namespace trisix
