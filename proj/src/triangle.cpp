#include "trisix/triangle.hpp"

#include <sstream>

#include "trisix/errors.hpp"

namespace trisix {

namespace {

// Alternation automaton along a path: state is the sign of the last
// nonzero seen (0 = none yet).  Nonzeros must read +1,-1,+1,...
bool step(int& state, int entry) {
    if (entry == 0) return true;
    if (entry == 1 && state != 1) {
        state = 1;
        return true;
    }
    if (entry == -1 && state == 1) {
        state = -1;
        return true;
    }
    return false;
}

// Joining the forward prefix (last-sign f) with the backward-read suffix
// (last-sign b): the suffix's first forward nonzero is b.
bool join(int f, int b) {
    if (f == 0 && b == 0) return false;  // all zeros, sum 0
    if (f == 0) return b == 1;
    if (b == 0) return f == 1;
    return b == -f;
}

}  // namespace

OddDasasmTriangle::OddDasasmTriangle(std::vector<std::vector<std::int8_t>> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("triangle: no rows");
    n_ = static_cast<int>(rows_.size()) - 1;
    for (int i = 1; i <= n_ + 1; ++i) {
        size_t want = static_cast<size_t>(2 * (n_ + 1 - i) + 1);
        if (rows_[i - 1].size() != want)
            throw std::invalid_argument("triangle: row " + std::to_string(i) + " has wrong length");
        for (std::int8_t v : rows_[i - 1])
            if (v < -1 || v > 1) throw std::invalid_argument("triangle: entry outside {-1,0,1}");
    }
    if (!triangle_paths_valid(*this))
        throw std::invalid_argument("triangle: path alternation condition fails");
}

bool triangle_paths_valid(const OddDasasmTriangle& t) {
    const int n = t.order();
    for (int i = 1; i <= n; ++i) {
        int state = 0;
        bool ok = true;
        for (int k = 1; k <= i && ok; ++k) ok = step(state, t.at(k, i));            // down column i
        for (int j = i + 1; j <= 2 * n + 2 - i && ok; ++j) ok = step(state, t.at(i, j));  // row, corner
        for (int k = i - 1; k >= 1 && ok; --k) ok = step(state, t.at(k, 2 * n + 2 - i));  // up column
        if (!ok || state != 1) return false;
    }
    // Central path: prefix, center, mirrored prefix.
    int state = 0;
    for (int k = 1; k <= n; ++k)
        if (!step(state, t.at(k, n + 1))) return false;
    int center = t.at(n + 1, n + 1);
    if (center == 0) return false;
    if (state == 0 ? center != 1 : center != -state) return false;
    return true;
}

std::string OddDasasmTriangle::str() const {
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << static_cast<int>(row[j]);
        }
        os << '\n';
    }
    return os.str();
}

OddDasasmTriangle OddDasasmTriangle::parse(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::vector<std::int8_t>> rows;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::int8_t> row;
        int v;
        while (ls >> v) row.push_back(static_cast<std::int8_t>(v));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return OddDasasmTriangle(std::move(rows));
}

OddDasasmTriangle triangle_from_dasasm(const AsmMatrix& a) {
    const int order = a.order();
    if (order % 2 == 0 || !is_asm(a) || !in_class(a, SymmetryClass::DASASM))
        throw std::invalid_argument("triangle_from_dasasm: input is not an odd-order DASASM");
    const int n = (order - 1) / 2;
    std::vector<std::vector<std::int8_t>> rows;
    for (int i = 1; i <= n + 1; ++i) {
        std::vector<std::int8_t> row;
        for (int j = i; j <= 2 * n + 2 - i; ++j) row.push_back(a.at(i - 1, j - 1));
        rows.push_back(std::move(row));
    }
    return OddDasasmTriangle(std::move(rows));
}

AsmMatrix dasasm_from_triangle(const OddDasasmTriangle& t) {
    const int n = t.order();
    const int order = 2 * n + 1;
    AsmMatrix a(order);
    for (int i = 1; i <= order; ++i) {
        for (int j = 1; j <= order; ++j) {
            // Orbit of (i,j) under {identity, diagonal, antidiagonal,
            // half-turn}; exactly one representative lies in the triangle.
            const std::pair<int, int> orbit[4] = {{i, j},
                                                  {j, i},
                                                  {order + 1 - j, order + 1 - i},
                                                  {order + 1 - i, order + 1 - j}};
            bool set = false;
            for (auto [r, c] : orbit) {
                if (r <= n + 1 && r <= c && c <= 2 * n + 2 - r) {
                    a.at(i - 1, j - 1) = t.at(r, c);
                    set = true;
                    break;
                }
            }
            if (!set) throw std::logic_error("dasasm_from_triangle: no orbit representative");
        }
    }
    return a;
}

namespace {

struct TriangleEnumerator {
    int n;
    std::vector<std::vector<std::int8_t>> rows;
    std::vector<int> front;  // per path 1..n+1, sign automaton state
    std::vector<int> back;   // per path 1..n, backward automaton state
    const std::function<bool(const OddDasasmTriangle&)>& visit;
    bool stopped = false;

    TriangleEnumerator(int n, const std::function<bool(const OddDasasmTriangle&)>& v)
        : n(n), front(n + 2, 0), back(n + 1, 0), visit(v) {
        for (int i = 1; i <= n + 1; ++i)
            rows.emplace_back(static_cast<size_t>(2 * (n + 1 - i) + 1), 0);
    }

    void run() { cell(1, 1); }

    void emit() {
        // Central entry is forced by the column above it.
        int f = front[n + 1];
        rows[n][0] = static_cast<std::int8_t>(f == 0 ? 1 : -f);
        OddDasasmTriangle t;
        t = OddDasasmTriangle(rows);
        if (!visit(t)) stopped = true;
    }

    void cell(int i, int j) {
        if (stopped) return;
        if (i == n + 1) {
            emit();
            return;
        }
        const bool corner = (j == 2 * n + 2 - i);
        const int next_i = corner ? i + 1 : i;
        const int next_j = corner ? i + 1 : j + 1;
        for (std::int8_t v : {std::int8_t(-1), std::int8_t(0), std::int8_t(1)}) {
            // Every cell of row i advances path i; cells in other columns
            // also advance the crossing path's state (front for down
            // columns, back for up columns).
            int fi = front[i];
            if (!step(fi, v)) continue;
            int* cross = nullptr;
            int cross_new = 0;
            if (i < j && j <= n + 1) {
                cross = &front[j];
                cross_new = *cross;
                if (!step(cross_new, v)) continue;
            } else if (j > n + 1 && !corner) {
                cross = &back[2 * n + 2 - j];
                cross_new = *cross;
                if (!step(cross_new, v)) continue;
            } else if (corner) {
                if (!join(fi, back[i])) continue;
            }
            const int save_fi = front[i];
            const int save_cross = cross ? *cross : 0;
            front[i] = fi;
            if (cross) *cross = cross_new;
            rows[i - 1][j - i] = v;
            cell(next_i, next_j);
            rows[i - 1][j - i] = 0;
            front[i] = save_fi;
            if (cross) *cross = save_cross;
        }
    }
};

}  // namespace

void enumerate_triangles(int n, const std::function<bool(const OddDasasmTriangle&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_triangles: n must be nonnegative");
    if (n > max_triangle_order())
        throw ResourceError("enumerate_triangles: n exceeds configured bound " +
                            std::to_string(max_triangle_order()));
    if (n == 0) {
        visit(OddDasasmTriangle());
        return;
    }
    TriangleEnumerator e(n, visit);
    e.run();
}

TriangleCounts count_triangles(int n) {
    TriangleCounts c;
    enumerate_triangles(n, [&](const OddDasasmTriangle& t) {
        ++c.total;
        if (t.at(n + 1, n + 1) == 1) ++c.center_plus;
        else ++c.center_minus;
        return true;
    });
    return c;
}

int statistic_N(const AsmMatrix& a) {
    const int order = a.order();
    if (order % 2 == 0) throw std::invalid_argument("statistic_N: order must be odd");
    const int n = (order - 1) / 2;
    int zeros = 0;
    for (int i = 1; i <= n; ++i)
        if (a.at(i - 1, n) == 0) ++zeros;
    return zeros;
}

int statistic_M(const AsmMatrix& a) {
    const int order = a.order();
    if (order % 2 == 0) throw std::invalid_argument("statistic_M: order must be odd");
    const int n = (order - 1) / 2;
    int zeros = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= 2 * n + 1 - i; ++j)
            if (a.at(i - 1, j - 1) == 0) ++zeros;
    return zeros;
}

}  // namespace trisix
