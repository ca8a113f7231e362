#include "flatsys/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace flatsys {

int VertexLink::index_of(int square, Corner corner) const {
    for (int i = 0; i < size(); ++i)
        if (sectors[i].first == square && sectors[i].second == corner) return i;
    return -1;
}

VertexLink vertex_link(const Origami& O, const Singularity& s) {
    const auto& a = O.sigma_a().images();
    const auto& b = O.sigma_b().images();
    const auto ainv = O.sigma_a().inverse();
    const auto binv = O.sigma_b().inverse();

    VertexLink link;
    link.singularity = s.id;
    const int start = s.cycle[0];
    int i = start;
    int guard = 0;
    do {
        // One counterclockwise full turn seen from the lower-left corner of i.
        int lr = ainv(i);
        int ur = binv(lr);
        int ul = a[ur];
        link.sectors.emplace_back(i, Corner::LL);
        link.sectors.emplace_back(lr, Corner::LR);
        link.sectors.emplace_back(ur, Corner::UR);
        link.sectors.emplace_back(ul, Corner::UL);
        i = b[ul];
        if (++guard > s.order + 1)
            throw Error("Internal", "vertex link walk escaped the commutator cycle");
    } while (i != start);
    if (link.size() != 4 * (s.order + 1))
        throw Error("Internal", "vertex link did not close after 4(k+1) sectors");
    return link;
}

double Angle::value() const {
    constexpr long double kPi = 3.141592653589793238462643383279502884L;
    long double v = static_cast<long double>(quarter_turns) * (kPi / 2.0L);
    v += atan2l(static_cast<long double>(plus[1]), static_cast<long double>(plus[0]));
    v -= atan2l(static_cast<long double>(minus[1]), static_cast<long double>(minus[0]));
    return static_cast<double>(v);
}

int Angle::compare_quarters(int64_t m) const {
    // value - m*(pi/2) = (q - m)*(pi/2) + (ang(plus) - ang(minus)) with the
    // parenthesized difference in (-pi/2, pi/2).
    int64_t t = quarter_turns - m;
    if (t >= 1) return 1;
    if (t <= -1) return -1;
    __int128 cross = static_cast<__int128>(plus[1]) * minus[0] -
                     static_cast<__int128>(minus[1]) * plus[0];
    return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

namespace {

// Quadrant of a nonzero direction with boundary rays assigned to the sector
// they bound counterclockwise: E->LL, N->LR, W->UR, S->UL.
int quadrant_of(int64_t dx, int64_t dy) {
    if (dx > 0 && dy >= 0) return 0;
    if (dx <= 0 && dy > 0) return 1;
    if (dx < 0 && dy <= 0) return 2;
    return 3;
}

Corner corner_for_quadrant(int q) {
    switch (q) {
        case 0: return Corner::LL;
        case 1: return Corner::LR;
        case 2: return Corner::UR;
        default: return Corner::UL;
    }
}

// Rotate clockwise by q quarter turns into the sector [E, N): x >= 1, y >= 0.
std::array<int64_t, 2> rotate_into_first(int64_t dx, int64_t dy, int q) {
    for (int i = 0; i < q; ++i) {
        int64_t nx = dy, ny = -dx;
        dx = nx;
        dy = ny;
    }
    return {dx, dy};
}

struct SectorPosition {
    int index;
    std::array<int64_t, 2> rotated;
};

SectorPosition locate(const VertexLink& link, const Ray& ray) {
    if (!ray.anchor.valid()) throw MissingAnchors("ray has no anchor data");
    int q = quadrant_of(ray.dx, ray.dy);
    if (ray.anchor.corner != corner_for_quadrant(q))
        throw MissingAnchors("anchor corner does not match the ray quadrant");
    int idx = link.index_of(ray.anchor.square, ray.anchor.corner);
    if (idx < 0) throw MissingAnchors("anchor does not occur in the vertex link");
    return {idx, rotate_into_first(ray.dx, ray.dy, q)};
}

}  // namespace

Angle ccw_angle(const VertexLink& link, const Ray& from, const Ray& to) {
    SectorPosition p1 = locate(link, from);
    SectorPosition p2 = locate(link, to);
    int64_t q = (p2.index - p1.index) % link.size();
    if (q < 0) q += link.size();
    Angle ang{q, p2.rotated, p1.rotated};
    if (q == 0) {
        int c = ang.compare_quarters(0);
        if (c == 0) throw Error("Internal", "coincident rays have no angle between them");
        if (c < 0) ang.quarter_turns += link.size();
    }
    return ang;
}

int path_vertex_at(const SaddleGraph& g, const EdgePath& p, int t) {
    const auto& e = g.edges[p.steps[t].edge];
    return p.steps[t].forward ? e.from : e.to;
}

namespace {
int step_target(const SaddleGraph& g, const PathStep& s) {
    const auto& e = g.edges[s.edge];
    return s.forward ? e.to : e.from;
}
}  // namespace

bool path_is_closed(const SaddleGraph& g, const EdgePath& p) {
    if (p.steps.empty()) return false;
    for (size_t t = 0; t < p.steps.size(); ++t) {
        size_t n = (t + 1) % p.steps.size();
        if (step_target(g, p.steps[t]) != path_vertex_at(g, p, static_cast<int>(n)))
            return false;
    }
    return true;
}

bool path_is_reduced(const SaddleGraph& g, const EdgePath& p) {
    (void)g;
    const auto& s = p.steps;
    if (s.empty()) return false;
    for (size_t t = 0; t < s.size(); ++t) {
        const auto& cur = s[t];
        const auto& nxt = s[(t + 1) % s.size()];
        if (s.size() == 1) break;  // a single step has no consecutive pair
        if (cur.edge == nxt.edge && cur.forward != nxt.forward) return false;
    }
    return true;
}

Length path_weight(const SaddleGraph& g, const EdgePath& p) {
    Length w;
    for (const auto& s : p.steps) w = w + g.edges[s.edge].length();
    return w;
}

bool PathAngles::all_left_less_than_pi() const {
    for (const auto& v : at)
        if (!v.left.less_than_pi()) return false;
    return true;
}

bool PathAngles::all_right_less_than_pi() const {
    for (const auto& v : at)
        if (!v.right.less_than_pi()) return false;
    return true;
}

PathAngles path_angles(const Origami& O, const SaddleGraph& g, const EdgePath& p) {
    if (!g.has_anchors) throw MissingAnchors("graph carries no anchor data");
    if (!path_is_closed(g, p)) throw std::invalid_argument("path is not closed");
    if (!path_is_reduced(g, p)) throw std::invalid_argument("path has backtracking");

    std::vector<VertexLink> links;
    links.reserve(O.singularities().size());
    for (const auto& s : O.singularities()) links.push_back(vertex_link(O, s));

    auto outgoing_ray = [&](const PathStep& s) {
        const auto& e = g.edges[s.edge];
        return s.forward ? Ray{e.start, e.dir.x, e.dir.y} : Ray{e.end, -e.dir.x, -e.dir.y};
    };
    auto reversed_incoming_ray = [&](const PathStep& s) {
        const auto& e = g.edges[s.edge];
        // The step arrives at its target; the ray pointing back along it is
        // the outgoing ray of the opposite traversal.
        return s.forward ? Ray{e.end, -e.dir.x, -e.dir.y} : Ray{e.start, e.dir.x, e.dir.y};
    };

    PathAngles out;
    const int n = p.combinatorial_length();
    for (int t = 0; t < n; ++t) {
        const PathStep& incoming = p.steps[(t + n - 1) % n];
        const PathStep& outgoing = p.steps[t];
        int v = path_vertex_at(g, p, t);
        const VertexLink& link = links[v];
        Ray out_ray = outgoing_ray(outgoing);
        Ray back_ray = reversed_incoming_ray(incoming);
        VertexAngles va;
        va.singularity = v;
        va.left = ccw_angle(link, out_ray, back_ray);
        va.right = ccw_angle(link, back_ray, out_ray);
        out.at.push_back(va);
    }
    return out;
}

bool is_null_homotopic_minimal(const Origami& O, const EdgePath& p, const PathAngles& angles) {
    (void)O;
    if (p.combinatorial_length() != 3) return false;
    return angles.all_left_less_than_pi() || angles.all_right_less_than_pi();
}

std::array<int64_t, 2> developing_sum(const SaddleGraph& g, const EdgePath& p) {
    std::array<int64_t, 2> sum{0, 0};
    for (const auto& s : p.steps) {
        const auto& e = g.edges[s.edge];
        int64_t sign = s.forward ? 1 : -1;
        sum[0] += sign * e.steps * e.dir.x;
        sum[1] += sign * e.steps * e.dir.y;
    }
    return sum;
}

bool satisfies_geodesic_criterion(const PathAngles& angles) {
    for (const auto& v : angles.at)
        if (!v.left.at_least_pi() || !v.right.at_least_pi()) return false;
    return true;
}

}  // namespace flatsys
