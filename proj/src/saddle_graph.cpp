#include "flatsys/saddle_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace flatsys {

const char* corner_name(Corner c) {
    switch (c) {
        case Corner::LL: return "LL";
        case Corner::LR: return "LR";
        case Corner::UR: return "UR";
        case Corner::UL: return "UL";
    }
    return "?";
}

namespace {

void require_singularities(const Origami& O) {
    if (O.singularities().empty())
        throw NoSingularities("the surface has no cone points; the saddle graph is empty");
}

// Per-period edge-crossing schedule for a ray of primitive direction (x, y)
// with x != 0 and y > 0: 'a' marks vertical-line crossings, 'b' horizontal.
std::vector<char> crossing_schedule(int64_t ax, int64_t y) {
    std::vector<char> ops;
    int64_t i = 1, j = 1;
    while (i < ax || j < y) {
        // compare i/ax vs j/y exactly
        if (j >= y || (i < ax && i * y < j * ax)) {
            ops.push_back('a');
            ++i;
        } else {
            ops.push_back('b');
            ++j;
        }
    }
    return ops;
}

}  // namespace

SaddleGraph horizontal_graph(const Origami& O) {
    require_singularities(O);
    const auto& a = O.sigma_a().images();
    const auto binv = O.sigma_b().inverse();
    SaddleGraph g;
    g.num_vertices = static_cast<int>(O.singularities().size());
    g.directions = {Direction(1, 0)};
    g.has_anchors = true;
    for (int i : O.singular_squares()) {
        int prev = i;
        int j = a[i];
        int64_t k = 1;
        while (O.singularity_of_square(j) < 0) {
            prev = j;
            j = a[j];
            ++k;
        }
        SaddleEdge e;
        e.from = O.singularity_of_square(i);
        e.to = O.singularity_of_square(j);
        e.dir = Direction(1, 0);
        e.steps = k;
        e.start = {i, Corner::LL};
        // The ray arrives heading east; the reversed ray points west, into the
        // square below the last bottom edge walked.
        e.end = {binv(prev), Corner::UR};
        g.edges.push_back(e);
    }
    return g;
}

SaddleGraph trace_graph_in_direction(const Origami& O, const Direction& v) {
    require_singularities(O);
    if (v.x == 1 && v.y == 0) return horizontal_graph(O);

    const auto& a = O.sigma_a().images();
    const auto& b = O.sigma_b().images();
    const auto ainv_p = O.sigma_a().inverse();
    const auto& ainv = ainv_p.images();

    SaddleGraph g;
    g.num_vertices = static_cast<int>(O.singularities().size());
    g.directions = {v};
    g.has_anchors = true;

    if (v.x == 0) {
        // (0,1): walk up along left edges; the current square sits right of
        // the ray.
        for (int i : O.singular_squares()) {
            int prev = i;
            int j = b[i];
            int64_t k = 1;
            while (O.singularity_of_square(j) < 0) {
                prev = j;
                j = b[j];
                ++k;
            }
            SaddleEdge e;
            e.from = O.singularity_of_square(i);
            e.to = O.singularity_of_square(j);
            e.dir = v;
            e.steps = k;
            e.start = {ainv[i], Corner::LR};
            e.end = {prev, Corner::UL};
            g.edges.push_back(e);
        }
        return g;
    }

    const bool rightward = v.x > 0;
    const auto ops = crossing_schedule(std::abs(v.x), v.y);
    for (int i : O.singular_squares()) {
        // Current square containing the ray; for up-left rays the start square
        // is the one whose lower-right corner is the cone point.
        int s = rightward ? i : ainv[i];
        int64_t steps = 0;
        int arrival;  // square whose lower-left corner is the hit lattice point
        for (;;) {
            for (char op : ops) {
                if (op == 'a')
                    s = rightward ? a[s] : ainv[s];
                else
                    s = b[s];
            }
            arrival = rightward ? a[b[s]] : a[b[ainv[s]]];
            ++steps;
            if (O.singularity_of_square(arrival) >= 0) break;
            s = rightward ? arrival : ainv[arrival];
        }
        SaddleEdge e;
        e.from = O.singularity_of_square(i);
        e.to = O.singularity_of_square(arrival);
        e.dir = v;
        e.steps = steps;
        e.start = rightward ? Anchor{i, Corner::LL} : Anchor{ainv[i], Corner::LR};
        e.end = rightward ? Anchor{s, Corner::UR} : Anchor{s, Corner::UL};
        g.edges.push_back(e);
    }
    return g;
}

SaddleGraph graph_in_direction(const Origami& O, const Direction& v) {
    require_singularities(O);
    if (v.x == 1 && v.y == 0) return horizontal_graph(O);
    Mat2 A = matrix_for_direction(v);
    ActResult acted = act_with_map(A, O);
    SaddleGraph h = horizontal_graph(acted.origami);
    SaddleGraph g;
    g.num_vertices = static_cast<int>(O.singularities().size());
    g.directions = {v};
    g.has_anchors = false;
    for (const auto& e : h.edges) {
        // Endpoints of the horizontal edge on A.O, pulled back to O through
        // the square correspondence.
        int from_sq = acted.vertex_map[acted.origami.singularities()[e.from].cycle[0]];
        int to_sq = acted.vertex_map[acted.origami.singularities()[e.to].cycle[0]];
        SaddleEdge out;
        out.from = O.singularity_of_square(from_sq);
        out.to = O.singularity_of_square(to_sq);
        out.dir = v;
        out.steps = e.steps;
        g.edges.push_back(out);
    }
    return g;
}

std::vector<Direction> direction_set_squared(int64_t l0_squared) {
    std::vector<Direction> out;
    if (l0_squared < 1) return out;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(l0_squared))) + 2;
    while (r * r > l0_squared) --r;
    for (int64_t y = 0; y <= r; ++y) {
        for (int64_t x = -r; x <= r; ++x) {
            if (x * x + y * y > l0_squared) continue;
            if (!(y > 0 || (y == 0 && x > 0))) continue;
            if (std::gcd(std::abs(x), std::abs(y)) != 1) continue;
            out.emplace_back(x, y);
        }
    }
    // Angle order over [0, pi): u before w iff cross(u, w) > 0.
    std::sort(out.begin(), out.end(), [](const Direction& u, const Direction& w) {
        return u.x * w.y - u.y * w.x > 0;
    });
    return out;
}

std::vector<Direction> direction_set(const Length& l0) {
    // Exact cutoff norm2 <= l0^2: largest integer m with m <= l0^2.
    Length l0sq = l0.squared();
    if (l0sq.is_integer()) return direction_set_squared(l0sq.integer_value());
    auto m = static_cast<int64_t>(std::floor(l0sq.to_double() + 1e-9));
    while (Length::integer(m) > l0sq) --m;
    while (Length::integer(m + 1) <= l0sq) ++m;
    return direction_set_squared(m);
}

SaddleGraph union_graph(const Origami& O, const std::vector<Direction>& S) {
    require_singularities(O);
    if (S.empty()) throw EmptyGraph("direction set is empty");
    SaddleGraph g;
    g.num_vertices = static_cast<int>(O.singularities().size());
    g.directions = S;
    g.has_anchors = true;
    for (size_t di = 0; di < S.size(); ++di) {
        SaddleGraph part = trace_graph_in_direction(O, S[di]);
        for (auto& e : part.edges) {
            e.dir_index = static_cast<int>(di);
            g.edges.push_back(e);
        }
    }
    return g;
}

bool same_weighted_multigraph(const SaddleGraph& g1, const SaddleGraph& g2) {
    if (g1.num_vertices != g2.num_vertices || g1.edges.size() != g2.edges.size()) return false;
    auto key = [](const SaddleGraph& g) {
        std::vector<std::tuple<int, int, int64_t, int64_t, int64_t>> k;
        k.reserve(g.edges.size());
        for (const auto& e : g.edges) k.emplace_back(e.from, e.to, e.steps, e.dir.x, e.dir.y);
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(g1) == key(g2);
}

}  // namespace flatsys
