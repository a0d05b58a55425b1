#pragma once

// The six-vertex model on the triangular grid T_n.
//
// Vertices (grid coordinates, 1-based): top (0,j) for j = 1..2n+1, bulk
// (i,j) for i = 1..n and i < j < 2n+2-i, left boundary (i,i), right
// boundary (i,2n+2-i), bottom (n+1,n+1).  Edges: vertical (i-1,j)-(i,j)
// for i = 1..min(j,2n+2-j); horizontal (i,j)-(i,j+1) for j = i..2n+1-i.
//
// Edge keys order the endpoints upper-first (vertical) or left-first
// (horizontal); the orientation bit means "toward the second endpoint",
// i.e. downward resp. rightward.  A configuration directs every top edge
// upward and satisfies the two-in two-out rule at every bulk vertex.

#include <functional>
#include <string>
#include <vector>

#include "trisix/triangle.hpp"

namespace trisix {

enum class LocalConfigKind {
    B1, B2, B3, B4, B5, B6,   // bulk
    L1, L2, L3, L4,           // left boundary
    R1, R2, R3, R4,           // right boundary
    Top, BottomUp, BottomDown
};

const char* local_config_name(LocalConfigKind k);

// Bulk kind from in/out orientations of the (left, below, right, above)
// edges; throws unless exactly two point in.
LocalConfigKind classify_bulk(bool a_in, bool b_in, bool c_in, bool d_in);
// Left boundary kind from (right, above); right boundary from (left, above).
LocalConfigKind classify_left(bool c_in, bool d_in);
LocalConfigKind classify_right(bool a_in, bool d_in);

// The triangle entry the bijection assigns to a local configuration.
int bij_entry(LocalConfigKind k);

class TriangularGrid {
public:
    explicit TriangularGrid(int n) : n_(n) {}
    int order() const { return n_; }
    // Height of column j: vertical edges (i-1,j)-(i,j) exist for i = 1..col_height(j).
    int col_height(int j) const { return std::min(j, 2 * n_ + 2 - j); }
    int vertex_degree(int i, int j) const;

private:
    int n_;
};

class SixVertexConfig {
public:
    explicit SixVertexConfig(int n);

    int order() const { return n_; }

    // Vertical edge (i-1,j)-(i,j): true = directed downward.
    bool vertical_down(int i, int j) const { return vert_[j - 1][i - 1]; }
    void set_vertical_down(int i, int j, bool down) { vert_[j - 1][i - 1] = down; }
    // Horizontal edge (i,j)-(i,j+1): true = directed rightward.
    bool horizontal_right(int i, int j) const { return horiz_[i - 1][j - i]; }
    void set_horizontal_right(int i, int j, bool right) { horiz_[i - 1][j - i] = right; }

    // Local configuration at a triangle position (i,j), i <= n+1,
    // i <= j <= 2n+2-i.
    LocalConfigKind local_config(int i, int j) const;

    // Every top edge up and the six-vertex rule at every bulk vertex.
    bool valid() const;

    friend bool operator==(const SixVertexConfig& a, const SixVertexConfig& b) {
        return a.n_ == b.n_ && a.vert_ == b.vert_ && a.horiz_ == b.horiz_;
    }
    friend bool operator<(const SixVertexConfig& a, const SixVertexConfig& b);

    // One line per edge: "(i1,j1)-(i2,j2) <bit>".
    std::string str() const;

private:
    int n_;
    std::vector<std::vector<bool>> vert_;   // [j-1][i-1]
    std::vector<std::vector<bool>> horiz_;  // [i-1][j-i]
};

// The unique configuration mapping to the triangle (inverse of the
// entrywise bijection).
SixVertexConfig config_from_triangle(const OddDasasmTriangle& t);
// Entrywise image of a configuration.
OddDasasmTriangle triangle_from_config(const SixVertexConfig& c);

// All configurations on T_n, generated independently of the triangle
// bijection by constraint search over edge orientations.
void enumerate_configs(int n, const std::function<bool(const SixVertexConfig&)>& visit);

}  // namespace trisix
