#include "flatsys/sl2.hpp"

#include <cstdlib>
#include <numeric>

namespace flatsys {

Mat2 Mat2::operator*(const Mat2& rhs) const {
    return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
            c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

Direction::Direction(int64_t xx, int64_t yy) : x(xx), y(yy) {
    if (!(y > 0 || (y == 0 && x > 0)))
        throw NotPrimitive("direction must satisfy y > 0 or (y == 0 and x > 0)");
    if (std::gcd(std::abs(x), std::abs(y)) != 1)
        throw NotPrimitive("direction coordinates must be coprime");
}

std::vector<Sl2Gen> decompose(const Mat2& A) {
    if (A.det() != 1) throw NotPrimitive("matrix is not in SL(2,Z)");
    // Reduce E_m ... E_1 * A to +-T^b by row operations, then invert the E's.
    Mat2 m = A;
    std::vector<Sl2Gen> prefix;  // inverses of the applied row operations, reversed at the end
    auto apply_t_power = [&](Mat2& x, int64_t k) {
        // T^k * x adds k times row 2 to row 1.
        x.a += k * x.c;
        x.b += k * x.d;
    };
    while (m.c != 0) {
        if (m.a != 0) {
            int64_t q = m.a / m.c;
            // Make |a - q c| < |c| (floor-style remainder).
            if ((m.a % m.c != 0) && ((m.a < 0) != (m.c < 0))) q -= 1;
            apply_t_power(m, -q);
            for (int64_t i = 0; i < std::abs(q); ++i)
                prefix.push_back(q > 0 ? Sl2Gen::T : Sl2Gen::TInv);
        }
        // S * m swaps rows with a sign; S^-1 = S^3.
        m = Mat2::rot_s() * m;
        for (int i = 0; i < 3; ++i) prefix.push_back(Sl2Gen::S);
    }
    // m = E_k ... E_1 A = [[a, b], [0, d]] with a*d = 1, so
    // A = E_1^-1 ... E_k^-1 m and `prefix` already lists the inverses in
    // left-to-right product order.
    std::vector<Sl2Gen> word = std::move(prefix);
    if (m.a == 1) {
        for (int64_t i = 0; i < std::abs(m.b); ++i)
            word.push_back(m.b > 0 ? Sl2Gen::T : Sl2Gen::TInv);
    } else {
        // -T^{-b} = S^2 T^{-b}
        word.push_back(Sl2Gen::S);
        word.push_back(Sl2Gen::S);
        for (int64_t i = 0; i < std::abs(m.b); ++i)
            word.push_back(m.b > 0 ? Sl2Gen::TInv : Sl2Gen::T);
    }
    return word;
}

Mat2 matrix_for_direction(const Direction& v) {
    const int64_t x = v.x, y = v.y;
    // Extended gcd: a*x + b*y = 1.
    int64_t old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        std::swap(old_r = old_r - q * r, r);
        std::swap(old_s = old_s - q * s, s);
        std::swap(old_t = old_t - q * t, t);
    }
    int64_t a = old_s, b = old_t;
    if (old_r < 0) {
        a = -a;
        b = -b;
    }
    // General solution (a + k*y, b - k*x); pick minimal |b|, then |a|, then sign.
    auto better = [&](int64_t a1, int64_t b1, int64_t a2, int64_t b2) {
        if (std::abs(b1) != std::abs(b2)) return std::abs(b1) < std::abs(b2);
        if (std::abs(a1) != std::abs(a2)) return std::abs(a1) < std::abs(a2);
        if (b1 != b2) return b1 > b2;
        return a1 > a2;
    };
    if (x != 0) {
        // |b - k*x| is minimized within +-2 of truncated b/x; scan that window.
        int64_t base = b / x;
        int64_t best_a = a, best_b = b;
        bool first = true;
        for (int64_t dk = base - 2; dk <= base + 2; ++dk) {
            int64_t na = a + dk * y, nb = b - dk * x;
            if (first || better(na, nb, best_a, best_b)) {
                best_a = na;
                best_b = nb;
                first = false;
            }
        }
        a = best_a;
        b = best_b;
    } else {
        // v = (0, 1): b = 1 forced, a free; minimal |a| = 0.
        a = 0;
    }
    Mat2 A{a, b, -y, x};
    return A;
}

namespace {

// One generator step; vertex_map composes the square correspondence.
Origami act_generator(Sl2Gen g, const Origami& O, std::vector<int>& vertex_map) {
    const auto& a = O.sigma_a();
    const auto& b = O.sigma_b();
    switch (g) {
        case Sl2Gen::T:
            // (sigma_a, sigma_b) -> (sigma_a, sigma_b . sigma_a^-1); lattice
            // corners are fixed, so the square correspondence is the identity.
            return Origami(a, b * a.inverse());
        case Sl2Gen::TInv:
            return Origami(a, b * a);
        case Sl2Gen::S: {
            // (sigma_a, sigma_b) -> (sigma_b^-1, sigma_a). The new square j sits
            // where the old square j was rotated; its lower-left corner is the
            // old upper-left corner of j, i.e. the lower-left corner of
            // sigma_a sigma_b sigma_a^-1 (j).
            Permutation corner = a * b * a.inverse();
            std::vector<int> composed(vertex_map.size());
            for (size_t j = 0; j < composed.size(); ++j) composed[j] = vertex_map[corner(static_cast<int>(j))];
            vertex_map = std::move(composed);
            return Origami(b.inverse(), a);
        }
    }
    throw Error("Internal", "unreachable");
}

}  // namespace

ActResult act_with_map(const Mat2& A, const Origami& O) {
    if (A.det() != 1) throw NotPrimitive("matrix is not in SL(2,Z)");
    auto word = decompose(A);
    std::vector<int> vertex_map(O.degree());
    for (int i = 0; i < O.degree(); ++i) vertex_map[i] = i;
    Origami cur = O;
    // The word multiplies left-to-right to A; the rightmost factor acts first.
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = act_generator(*it, cur, vertex_map);
    return {std::move(cur), std::move(vertex_map)};
}

Origami act(const Mat2& A, const Origami& O) { return act_with_map(A, O).origami; }

}  // namespace flatsys
