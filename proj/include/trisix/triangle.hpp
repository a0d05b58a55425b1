#pragma once

// Odd DASASM triangles of order n: the fundamental domain of a
// (2n+1) x (2n+1) DASASM, rows i = 1..n+1 restricted to columns
// i..2n+2-i.  Entry validity is the alternating +1,-1,...,+1 pattern along
// each U-shaped path: down column i, right along row i, up column 2n+2-i
// (the doubled central column for i = n+1).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trisix/asm_matrix.hpp"

namespace trisix {

class OddDasasmTriangle {
public:
    OddDasasmTriangle() : n_(0), rows_(1, std::vector<std::int8_t>{1}) {}
    // rows[i-1] holds A_{i,i}..A_{i,2n+2-i}; throws if shapes are wrong or
    // a path condition fails.
    explicit OddDasasmTriangle(std::vector<std::vector<std::int8_t>> rows);

    int order() const { return n_; }
    // 1-based matrix indices, i <= n+1, i <= j <= 2n+2-i.
    std::int8_t at(int i, int j) const { return rows_[i - 1][j - i]; }
    const std::vector<std::vector<std::int8_t>>& rows() const { return rows_; }

    friend bool operator==(const OddDasasmTriangle& a, const OddDasasmTriangle& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const OddDasasmTriangle& a, const OddDasasmTriangle& b) {
        return !(a == b);
    }
    friend bool operator<(const OddDasasmTriangle& a, const OddDasasmTriangle& b) {
        return a.rows_ < b.rows_;
    }

    // n+1 lines, row i holding A_{i,i}..A_{i,2n+2-i}.
    std::string str() const;
    static OddDasasmTriangle parse(const std::string& text);

private:
    friend bool triangle_paths_valid(const OddDasasmTriangle& t);
    int n_;
    std::vector<std::vector<std::int8_t>> rows_;
};

bool triangle_paths_valid(const OddDasasmTriangle& t);

// Restriction of a DASASM of order 2n+1 to the fundamental triangle.
OddDasasmTriangle triangle_from_dasasm(const AsmMatrix& a);
// Unique DASASM extension; inverse of triangle_from_dasasm.
AsmMatrix dasasm_from_triangle(const OddDasasmTriangle& t);

// Each order-n triangle exactly once, lexicographic in row-major reading.
void enumerate_triangles(int n, const std::function<bool(const OddDasasmTriangle&)>& visit);

struct TriangleCounts {
    Integer total = 0;
    Integer center_plus = 0;
    Integer center_minus = 0;
};
TriangleCounts count_triangles(int n);

// Number of 0's among the first n entries of the central column; the
// central entry equals (-1)^(n + N).
int statistic_N(const AsmMatrix& a);
// Number of 0's among A_{ij}, i = 1..n, j = i+1..2n+1-i (triangle interior
// strictly between row ends).
int statistic_M(const AsmMatrix& a);

}  // namespace trisix
