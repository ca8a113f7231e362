#pragma once

#include <array>
#include <vector>

#include "flatsys/saddle_graph.hpp"

namespace flatsys {

// Cyclic sequence of quarter-turn sectors around a cone point, counter-
// clockwise. A singularity of order k has 4*(k+1) sectors; the LL-sectors
// run through the singularity's commutator cycle (in reverse orbit order,
// since the walk turns counterclockwise).
struct VertexLink {
    int singularity = 0;
    std::vector<std::pair<int, Corner>> sectors;

    int size() const { return static_cast<int>(sectors.size()); }
    // Index of the sector (square, corner), or -1.
    int index_of(int square, Corner corner) const;
};

VertexLink vertex_link(const Origami& O, const Singularity& s);

// Angle at a cone point, exactly q quarter turns plus the angle difference of
// two first-quadrant integer vectors: q*(pi/2) + ang(plus) - ang(minus).
struct Angle {
    int64_t quarter_turns = 0;
    std::array<int64_t, 2> plus{1, 0};   // x >= 1, y >= 0
    std::array<int64_t, 2> minus{1, 0};

    double value() const;
    // Exact comparison against m quarter turns (pi == 2 quarter turns).
    int compare_quarters(int64_t m) const;
    bool less_than_pi() const { return compare_quarters(2) < 0; }
    bool at_least_pi() const { return compare_quarters(2) >= 0; }
};

// A ray leaving a cone point: anchor plus direction (need not be primitive
// nor upper-half-plane; reversed edge directions land in the lower half).
struct Ray {
    Anchor anchor;
    int64_t dx = 1, dy = 0;
};

// Counterclockwise angle from `from` to `to` within the link; in (0, cone).
Angle ccw_angle(const VertexLink& link, const Ray& from, const Ray& to);

// Directed traversal of graph edges; `forward` runs start anchor -> end.
struct PathStep {
    int edge = 0;
    bool forward = true;

    bool operator==(const PathStep&) const = default;
    auto operator<=>(const PathStep&) const = default;
};

struct EdgePath {
    std::vector<PathStep> steps;

    int combinatorial_length() const { return static_cast<int>(steps.size()); }
};

int path_vertex_at(const SaddleGraph& g, const EdgePath& p, int t);  // start vertex of step t
bool path_is_closed(const SaddleGraph& g, const EdgePath& p);
bool path_is_reduced(const SaddleGraph& g, const EdgePath& p);  // cyclically
Length path_weight(const SaddleGraph& g, const EdgePath& p);

// Angles of a closed reduced path at each of its vertices. left is the CCW
// angle from the outgoing ray to the reversed incoming ray; right the
// clockwise one; left + right equals the cone angle.
struct VertexAngles {
    int singularity = 0;
    Angle left, right;
};

struct PathAngles {
    std::vector<VertexAngles> at;  // at[t]: vertex where step t begins

    bool all_left_less_than_pi() const;
    bool all_right_less_than_pi() const;
};

PathAngles path_angles(const Origami& O, const SaddleGraph& g, const EdgePath& p);

// The length-3 criterion for a minimal closed reduced path: its realization
// is null homotopic iff the combinatorial length is 3 and all angles on one
// consistent side are smaller than pi.
bool is_null_homotopic_minimal(const Origami& O, const EdgePath& p, const PathAngles& angles);

// Sum of signed developing vectors; zero is necessary for null homotopy.
std::array<int64_t, 2> developing_sum(const SaddleGraph& g, const EdgePath& p);

// Closed-geodesic test from the angle data: every vertex has both side
// angles at least pi.
bool satisfies_geodesic_criterion(const PathAngles& angles);

}  // namespace flatsys
