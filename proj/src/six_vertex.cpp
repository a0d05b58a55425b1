#include "trisix/six_vertex.hpp"

#include <sstream>

#include "trisix/errors.hpp"

namespace trisix {

const char* local_config_name(LocalConfigKind k) {
    switch (k) {
        case LocalConfigKind::B1: return "B1";
        case LocalConfigKind::B2: return "B2";
        case LocalConfigKind::B3: return "B3";
        case LocalConfigKind::B4: return "B4";
        case LocalConfigKind::B5: return "B5";
        case LocalConfigKind::B6: return "B6";
        case LocalConfigKind::L1: return "L1";
        case LocalConfigKind::L2: return "L2";
        case LocalConfigKind::L3: return "L3";
        case LocalConfigKind::L4: return "L4";
        case LocalConfigKind::R1: return "R1";
        case LocalConfigKind::R2: return "R2";
        case LocalConfigKind::R3: return "R3";
        case LocalConfigKind::R4: return "R4";
        case LocalConfigKind::Top: return "Top";
        case LocalConfigKind::BottomUp: return "BottomUp";
        case LocalConfigKind::BottomDown: return "BottomDown";
    }
    return "?";
}

LocalConfigKind classify_bulk(bool a_in, bool b_in, bool c_in, bool d_in) {
    int in = a_in + b_in + c_in + d_in;
    if (in != 2) throw std::domain_error("classify_bulk: six-vertex rule violated");
    if (a_in && b_in) return LocalConfigKind::B1;   // (in,in,out,out)
    if (c_in && d_in) return LocalConfigKind::B2;   // (out,out,in,in)
    if (b_in && c_in) return LocalConfigKind::B3;   // (out,in,in,out)
    if (a_in && d_in) return LocalConfigKind::B4;   // (in,out,out,in)
    if (a_in && c_in) return LocalConfigKind::B5;   // (in,out,in,out)
    return LocalConfigKind::B6;                     // (out,in,out,in)
}

LocalConfigKind classify_left(bool c_in, bool d_in) {
    if (!c_in && !d_in) return LocalConfigKind::L1;
    if (c_in && d_in) return LocalConfigKind::L2;
    if (c_in) return LocalConfigKind::L3;
    return LocalConfigKind::L4;
}

LocalConfigKind classify_right(bool a_in, bool d_in) {
    if (!a_in && !d_in) return LocalConfigKind::R1;
    if (a_in && d_in) return LocalConfigKind::R2;
    if (a_in) return LocalConfigKind::R3;
    return LocalConfigKind::R4;
}

int bij_entry(LocalConfigKind k) {
    switch (k) {
        case LocalConfigKind::B5:
        case LocalConfigKind::L3:
        case LocalConfigKind::R3:
        case LocalConfigKind::BottomUp:
            return 1;
        case LocalConfigKind::B6:
        case LocalConfigKind::L4:
        case LocalConfigKind::R4:
        case LocalConfigKind::BottomDown:
            return -1;
        default:
            return 0;
    }
}

int TriangularGrid::vertex_degree(int i, int j) const {
    if (i == 0 || (i == n_ + 1 && j == n_ + 1)) return 1;
    if (j == i || j == 2 * n_ + 2 - i) return 2;
    return 4;
}

SixVertexConfig::SixVertexConfig(int n) : n_(n) {
    TriangularGrid g(n);
    for (int j = 1; j <= 2 * n + 1; ++j)
        vert_.emplace_back(static_cast<size_t>(g.col_height(j)), false);
    for (int i = 1; i <= n; ++i)
        horiz_.emplace_back(static_cast<size_t>(2 * n + 1 - 2 * i + 1), false);
}

bool operator<(const SixVertexConfig& a, const SixVertexConfig& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.vert_ != b.vert_) return a.vert_ < b.vert_;
    return a.horiz_ < b.horiz_;
}

LocalConfigKind SixVertexConfig::local_config(int i, int j) const {
    const int n = n_;
    if (i == n + 1) {
        // bottom vertex; its only edge is the one above it
        return vertical_down(n + 1, n + 1) ? LocalConfigKind::BottomDown
                                           : LocalConfigKind::BottomUp;
    }
    // Orientations in/out with respect to vertex (i,j):
    //   left  (i,j-1)-(i,j):   rightward = in
    //   below (i,j)-(i+1,j):   downward  = out
    //   right (i,j)-(i,j+1):   rightward = out
    //   above (i-1,j)-(i,j):   downward  = in
    bool d_in = vertical_down(i, j);
    if (j == i) return classify_left(!horizontal_right(i, j), d_in);
    if (j == 2 * n + 2 - i) return classify_right(horizontal_right(i, j - 1), d_in);
    bool a_in = horizontal_right(i, j - 1);
    bool b_in = !vertical_down(i + 1, j);
    bool c_in = !horizontal_right(i, j);
    return classify_bulk(a_in, b_in, c_in, d_in);
}

bool SixVertexConfig::valid() const {
    for (int j = 1; j <= 2 * n_ + 1; ++j)
        if (vertical_down(1, j)) return false;  // top edges point up
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= 2 * n_ + 1 - i; ++j) {
            bool a_in = horizontal_right(i, j - 1);
            bool b_in = !vertical_down(i + 1, j);
            bool c_in = !horizontal_right(i, j);
            bool d_in = vertical_down(i, j);
            if (a_in + b_in + c_in + d_in != 2) return false;
        }
    return true;
}

std::string SixVertexConfig::str() const {
    std::ostringstream os;
    TriangularGrid g(n_);
    for (int j = 1; j <= 2 * n_ + 1; ++j)
        for (int i = 1; i <= g.col_height(j); ++i)
            os << "(" << i - 1 << "," << j << ")-(" << i << "," << j << ") "
               << (vertical_down(i, j) ? 1 : 0) << "\n";
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= 2 * n_ + 1 - i; ++j)
            os << "(" << i << "," << j << ")-(" << i << "," << j + 1 << ") "
               << (horizontal_right(i, j) ? 1 : 0) << "\n";
    return os.str();
}

SixVertexConfig config_from_triangle(const OddDasasmTriangle& t) {
    const int n = t.order();
    AsmMatrix a = dasasm_from_triangle(t);
    SixVertexConfig c(n);
    TriangularGrid g(n);
    // Partial sums of the full matrix determine every orientation: the
    // vertical edge below row i-1 in column j points down iff the first
    // i-1 entries of column j sum to 1; the horizontal edge right of
    // column j in row i points left iff the first j entries of row i sum
    // to 1.
    for (int j = 1; j <= 2 * n + 1; ++j) {
        int sum = 0;
        for (int i = 1; i <= g.col_height(j); ++i) {
            c.set_vertical_down(i, j, sum == 1);
            sum += a.at(i - 1, j - 1);
        }
    }
    for (int i = 1; i <= n; ++i) {
        int sum = 0;
        for (int k = 1; k < i; ++k) sum += a.at(i - 1, k - 1);
        for (int j = i; j <= 2 * n + 1 - i; ++j) {
            sum += a.at(i - 1, j - 1);
            c.set_horizontal_right(i, j, sum == 0);
        }
    }
    return c;
}

OddDasasmTriangle triangle_from_config(const SixVertexConfig& c) {
    const int n = c.order();
    std::vector<std::vector<std::int8_t>> rows;
    for (int i = 1; i <= n + 1; ++i) {
        std::vector<std::int8_t> row;
        for (int j = i; j <= 2 * n + 2 - i; ++j)
            row.push_back(static_cast<std::int8_t>(bij_entry(c.local_config(i, j))));
        rows.push_back(std::move(row));
    }
    return OddDasasmTriangle(std::move(rows));
}

namespace {

// Column-by-column constraint search over edge orientations; independent
// of the triangle bijection.
struct ConfigEnumerator {
    int n;
    SixVertexConfig cfg;
    const std::function<bool(const SixVertexConfig&)>& visit;
    TriangularGrid grid;
    bool stopped = false;

    ConfigEnumerator(int n, const std::function<bool(const SixVertexConfig&)>& v)
        : n(n), cfg(n), visit(v), grid(n) {}

    void run() { column(1, 1); }

    // Assign the below and right edges of vertex (i,j) subject to the
    // six-vertex rule; left and above edges are already assigned.
    void column(int j, int i) {
        if (stopped) return;
        if (j == 2 * n + 2) {
            if (!visit(cfg)) stopped = true;
            return;
        }
        const int h = grid.col_height(j);
        if (i > h) {
            column(j + 1, 1);
            return;
        }
        const int nj = (i == h) ? j + 1 : j;
        const int ni = (i == h) ? 1 : i + 1;
        if (j == n + 1 && i == h) {
            // bottom vertex: no new edges
            column(nj, ni);
            return;
        }
        if (j <= n && i == h) {
            // left boundary vertex (j,j): free choice of its right edge
            for (bool right : {false, true}) {
                cfg.set_horizontal_right(i, j, right);
                column(nj, ni);
            }
            return;
        }
        if (j >= n + 2 && i == h) {
            // right boundary vertex: no new edges
            column(nj, ni);
            return;
        }
        // bulk vertex (i,j)
        bool a_in = cfg.horizontal_right(i, j - 1);
        bool d_in = cfg.vertical_down(i, j);
        for (bool b_in : {false, true})
            for (bool c_in : {false, true}) {
                if (a_in + b_in + c_in + d_in != 2) continue;
                cfg.set_vertical_down(i + 1, j, !b_in);
                cfg.set_horizontal_right(i, j, !c_in);
                column(nj, ni);
            }
    }
};

}  // namespace

void enumerate_configs(int n, const std::function<bool(const SixVertexConfig&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_configs: n must be nonnegative");
    if (n > max_triangle_order())
        throw ResourceError("enumerate_configs: n exceeds configured bound");
    ConfigEnumerator e(n, visit);
    e.run();
}

}  // namespace trisix
