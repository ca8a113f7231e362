#pragma once

#include <cstdint>
#include <vector>

#include "flatsys/origami.hpp"

namespace flatsys {

// Row-major [[a, b], [c, d]] with determinant 1.
struct Mat2 {
    int64_t a = 1, b = 0, c = 0, d = 1;

    bool operator==(const Mat2&) const = default;
    Mat2 operator*(const Mat2& rhs) const;
    int64_t det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    static Mat2 shear_t() { return {1, 1, 0, 1}; }     // T
    static Mat2 shear_t_inv() { return {1, -1, 0, 1}; }
    static Mat2 rot_s() { return {0, -1, 1, 0}; }      // S, order 4
};

// Primitive integer vector in the closed upper half plane:
// y > 0, or y == 0 and x > 0.
struct Direction {
    int64_t x = 1, y = 0;

    Direction() = default;
    Direction(int64_t xx, int64_t yy);  // validates primitivity and half-plane

    bool operator==(const Direction&) const = default;
    int64_t norm2() const { return x * x + y * y; }
};

enum class Sl2Gen { T, TInv, S };

// Word over {T, T^-1, S} whose left-to-right product equals A.
std::vector<Sl2Gen> decompose(const Mat2& A);

// Deterministic A with A*(x,y)^T = (1,0)^T and det A = 1. The second row is
// forced to (-y, x); among first rows (a,b) with a*x + b*y = 1 the one with
// minimal |b|, then minimal |a|, ties to the positive entry, is chosen.
Mat2 matrix_for_direction(const Direction& v);

// The re-tessellated origami A.S together with the square correspondence that
// identifies vertices: the lower-left corner of square j in the result is the
// lower-left corner of square vertex_map[j] in the input surface.
struct ActResult {
    Origami origami;
    std::vector<int> vertex_map;
};

ActResult act_with_map(const Mat2& A, const Origami& O);
Origami act(const Mat2& A, const Origami& O);

}  // namespace flatsys
