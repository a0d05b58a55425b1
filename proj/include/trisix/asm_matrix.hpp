#pragma once

// Alternating sign matrices, the dihedral symmetry action, the eight
// symmetry-class predicates, and exhaustive enumeration.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trisix/rational.hpp"

namespace trisix {

class AsmMatrix {
public:
    AsmMatrix() : n_(0) {}
    explicit AsmMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {}
    AsmMatrix(int n, std::vector<std::int8_t> entries);

    int order() const { return n_; }
    std::int8_t at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    std::int8_t& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

    friend bool operator==(const AsmMatrix& a, const AsmMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const AsmMatrix& a, const AsmMatrix& b) { return !(a == b); }
    friend bool operator<(const AsmMatrix& a, const AsmMatrix& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.e_ < b.e_;
    }

    // One row per line, entries space-separated from {-1,0,1}.
    std::string str() const;
    static AsmMatrix parse(const std::string& text);

private:
    int n_;
    std::vector<std::int8_t> e_;
};

// True iff every row and column has nonzero entries alternating in sign
// with sum 1.  Entries outside {-1,0,1} are an input error.
bool is_asm(const AsmMatrix& m);

enum class D4Element : int { I = 0, V, H, D, A, R90, R180, R270 };

constexpr std::array<D4Element, 8> kD4All = {
    D4Element::I,  D4Element::V,    D4Element::H,    D4Element::D,
    D4Element::A,  D4Element::R90,  D4Element::R180, D4Element::R270};

const char* d4_name(D4Element g);
// g * h: apply h first, then g.
D4Element d4_compose(D4Element g, D4Element h);
AsmMatrix d4_apply(D4Element g, const AsmMatrix& m);

enum class SymmetryClass { ASM, VSASM, VHSASM, HTSASM, QTSASM, DSASM, DASASM, TSASM };

const char* class_name(SymmetryClass c);
// Parses the lower-case class name; throws on unknown names.
SymmetryClass parse_class(const std::string& name);
const std::vector<D4Element>& class_subgroup(SymmetryClass c);

bool in_class(const AsmMatrix& m, SymmetryClass c);

// Yields each n x n ASM exactly once, in lexicographic row-major order.
// Return false from the visitor to stop early.
void enumerate_asm(int n, const std::function<bool(const AsmMatrix&)>& visit);

// Members of a class via the generic filter over enumerate_asm.  (The fast
// native generator for odd-order DASASMs lives in triangle.hpp.)
void enumerate_class(int n, SymmetryClass c, const std::function<bool(const AsmMatrix&)>& visit);

Integer count_asm(int n);
Integer count_class(int n, SymmetryClass c);

// prod_{i=0}^{n-1} (3i+1)!/(n+i)!
Integer asm_count_formula(int n);

// (count with center +1, count with center -1) among HTSASMs of odd order.
std::pair<Integer, Integer> htsasm_central_split(int n);

}  // namespace trisix
