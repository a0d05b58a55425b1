#include "trisix/asm_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace trisix {

AsmMatrix::AsmMatrix(int n, std::vector<std::int8_t> entries) : n_(n), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("AsmMatrix: entry count does not match order");
}

std::string AsmMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << static_cast<int>(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

AsmMatrix AsmMatrix::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::int8_t> entries;
    std::string line;
    int rows = 0, cols = -1;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        int v, c = 0;
        while (ls >> v) {
            if (v < -1 || v > 1) throw std::invalid_argument("AsmMatrix: entry outside {-1,0,1}");
            entries.push_back(static_cast<std::int8_t>(v));
            ++c;
        }
        if (c == 0) continue;
        if (cols == -1) cols = c;
        else if (c != cols) throw std::invalid_argument("AsmMatrix: ragged rows");
        ++rows;
    }
    if (rows != cols) throw std::invalid_argument("AsmMatrix: not square");
    return AsmMatrix(rows, std::move(entries));
}

namespace {

// The alternating condition along one line: nonzeros read +1,-1,...,+1.
bool alternating_sum_one(const std::vector<std::int8_t>& seq) {
    int expect = 1;
    int last = 0;
    for (std::int8_t v : seq) {
        if (v == 0) continue;
        if (v != expect) return false;
        last = v;
        expect = -expect;
    }
    return last == 1;
}

}  // namespace

bool is_asm(const AsmMatrix& m) {
    const int n = m.order();
    if (n <= 0) return false;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int8_t> row(n), col(n);
        for (int j = 0; j < n; ++j) {
            std::int8_t r = m.at(i, j);
            if (r < -1 || r > 1) throw std::invalid_argument("is_asm: entry outside {-1,0,1}");
            row[j] = r;
            col[j] = m.at(j, i);
        }
        if (!alternating_sum_one(row) || !alternating_sum_one(col)) return false;
    }
    return true;
}

const char* d4_name(D4Element g) {
    switch (g) {
        case D4Element::I: return "I";
        case D4Element::V: return "V";
        case D4Element::H: return "H";
        case D4Element::D: return "D";
        case D4Element::A: return "A";
        case D4Element::R90: return "R90";
        case D4Element::R180: return "R180";
        case D4Element::R270: return "R270";
    }
    return "?";
}

namespace {

// Index action (i,j) -> source index pair, for order n.
std::pair<int, int> d4_index(D4Element g, int n, int i, int j) {
    switch (g) {
        case D4Element::I: return {i, j};
        case D4Element::V: return {i, n - 1 - j};
        case D4Element::H: return {n - 1 - i, j};
        case D4Element::D: return {j, i};
        case D4Element::A: return {n - 1 - j, n - 1 - i};
        case D4Element::R90: return {j, n - 1 - i};
        case D4Element::R180: return {n - 1 - i, n - 1 - j};
        case D4Element::R270: return {n - 1 - j, i};
    }
    return {i, j};
}

}  // namespace

AsmMatrix d4_apply(D4Element g, const AsmMatrix& m) {
    const int n = m.order();
    AsmMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [si, sj] = d4_index(g, n, i, j);
            r.at(i, j) = m.at(si, sj);
        }
    return r;
}

D4Element d4_compose(D4Element g, D4Element h) {
    // Determined by the index maps on a 3x3 probe grid.
    static const auto table = [] {
        std::array<std::array<D4Element, 8>, 8> t{};
        const int n = 3;
        for (D4Element g : kD4All)
            for (D4Element h : kD4All) {
                bool found = false;
                for (D4Element k : kD4All) {
                    bool same = true;
                    for (int i = 0; i < n && same; ++i)
                        for (int j = 0; j < n && same; ++j) {
                            auto [hi, hj] = d4_index(h, n, i, j);
                            auto [gi, gj] = d4_index(g, n, hi, hj);
                            same = d4_index(k, n, i, j) == std::make_pair(gi, gj);
                        }
                    if (same) {
                        t[static_cast<int>(g)][static_cast<int>(h)] = k;
                        found = true;
                        break;
                    }
                }
                if (!found) throw std::logic_error("d4_compose: not closed");
            }
        return t;
    }();
    return table[static_cast<int>(g)][static_cast<int>(h)];
}

const char* class_name(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::ASM: return "asm";
        case SymmetryClass::VSASM: return "vsasm";
        case SymmetryClass::VHSASM: return "vhsasm";
        case SymmetryClass::HTSASM: return "htsasm";
        case SymmetryClass::QTSASM: return "qtsasm";
        case SymmetryClass::DSASM: return "dsasm";
        case SymmetryClass::DASASM: return "dasasm";
        case SymmetryClass::TSASM: return "tsasm";
    }
    return "?";
}

SymmetryClass parse_class(const std::string& name) {
    for (SymmetryClass c : {SymmetryClass::ASM, SymmetryClass::VSASM, SymmetryClass::VHSASM,
                            SymmetryClass::HTSASM, SymmetryClass::QTSASM, SymmetryClass::DSASM,
                            SymmetryClass::DASASM, SymmetryClass::TSASM})
        if (name == class_name(c)) return c;
    throw std::invalid_argument("unknown symmetry class: " + name);
}

const std::vector<D4Element>& class_subgroup(SymmetryClass c) {
    using E = D4Element;
    static const std::vector<D4Element> sub_i = {E::I};
    static const std::vector<D4Element> sub_v = {E::I, E::V};
    static const std::vector<D4Element> sub_vh = {E::I, E::V, E::H, E::R180};
    static const std::vector<D4Element> sub_ht = {E::I, E::R180};
    static const std::vector<D4Element> sub_qt = {E::I, E::R90, E::R180, E::R270};
    static const std::vector<D4Element> sub_d = {E::I, E::D};
    static const std::vector<D4Element> sub_da = {E::I, E::D, E::A, E::R180};
    static const std::vector<D4Element> sub_all = {E::I,  E::V,   E::H,    E::D,
                                                   E::A,  E::R90, E::R180, E::R270};
    switch (c) {
        case SymmetryClass::ASM: return sub_i;
        case SymmetryClass::VSASM: return sub_v;
        case SymmetryClass::VHSASM: return sub_vh;
        case SymmetryClass::HTSASM: return sub_ht;
        case SymmetryClass::QTSASM: return sub_qt;
        case SymmetryClass::DSASM: return sub_d;
        case SymmetryClass::DASASM: return sub_da;
        case SymmetryClass::TSASM: return sub_all;
    }
    return sub_i;
}

bool in_class(const AsmMatrix& m, SymmetryClass c) {
    for (D4Element g : class_subgroup(c)) {
        if (g == D4Element::I) continue;
        if (d4_apply(g, m) != m) return false;
    }
    return true;
}

namespace {

// Row-by-row backtracking over partial column-sum vectors.  Column partial
// sums stay in {0,1}; a +1 is allowed when the running sum is 0 and a -1
// when it is 1, which is exactly the column alternation condition.  Within
// a row the same state machine runs on the row prefix.
struct AsmEnumerator {
    int n;
    AsmMatrix m;
    std::vector<std::int8_t> colsum;
    const std::function<bool(const AsmMatrix&)>& visit;
    bool stopped = false;

    AsmEnumerator(int n, const std::function<bool(const AsmMatrix&)>& v)
        : n(n), m(n), colsum(n, 0), visit(v) {}

    void run() { row(0); }

    void row(int i) {
        if (stopped) return;
        if (i == n) {
            // Column sums are forced to 1 by fill(); emit.
            if (!visit(m)) stopped = true;
            return;
        }
        fill(i, 0, 0);
    }

    void fill(int i, int j, int rowsum) {
        if (stopped) return;
        if (j == n) {
            if (rowsum == 1) row(i + 1);
            return;
        }
        int rows_left = n - i - 1;  // rows below i
        for (std::int8_t v : {std::int8_t(-1), std::int8_t(0), std::int8_t(1)}) {
            if (v == 1 && (rowsum != 0 || colsum[j] != 0)) continue;
            if (v == -1 && (rowsum != 1 || colsum[j] != 1)) continue;
            m.at(i, j) = v;
            colsum[j] = static_cast<std::int8_t>(colsum[j] + v);
            // A column whose sum is still 0 needs at least one row below.
            if (colsum[j] == 1 || rows_left > 0) fill(i, j + 1, rowsum + v);
            colsum[j] = static_cast<std::int8_t>(colsum[j] - v);
        }
        m.at(i, j) = 0;
    }
};

}  // namespace

void enumerate_asm(int n, const std::function<bool(const AsmMatrix&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_asm: n must be positive");
    AsmEnumerator e(n, visit);
    e.run();
}

void enumerate_class(int n, SymmetryClass c, const std::function<bool(const AsmMatrix&)>& visit) {
    enumerate_asm(n, [&](const AsmMatrix& m) {
        if (in_class(m, c)) return visit(m);
        return true;
    });
}

Integer count_asm(int n) {
    Integer count = 0;
    enumerate_asm(n, [&](const AsmMatrix&) {
        ++count;
        return true;
    });
    return count;
}

Integer count_class(int n, SymmetryClass c) {
    Integer count = 0;
    enumerate_class(n, c, [&](const AsmMatrix&) {
        ++count;
        return true;
    });
    return count;
}

Integer asm_count_formula(int n) {
    Rational acc(1);
    for (int i = 0; i < n; ++i)
        acc *= Rational(factorial(3 * i + 1), factorial(n + i));
    if (!acc.is_integer()) throw std::logic_error("asm_count_formula: non-integer product");
    return acc.num();
}

std::pair<Integer, Integer> htsasm_central_split(int n) {
    if (n % 2 == 0) throw std::invalid_argument("htsasm_central_split: order must be odd");
    Integer plus = 0, minus = 0;
    int c = (n - 1) / 2;
    enumerate_class(n, SymmetryClass::HTSASM, [&](const AsmMatrix& m) {
        if (m.at(c, c) == 1) ++plus;
        else ++minus;
        return true;
    });
    return {plus, minus};
}

}  // namespace trisix
