#pragma once

#include <vector>

#include "flatsys/length.hpp"
#include "flatsys/origami.hpp"
#include "flatsys/sl2.hpp"

namespace flatsys {

// Corner of a unit square, named from the square's own frame.
enum class Corner : uint8_t { LL, LR, UR, UL };

const char* corner_name(Corner c);

// Sheet-precise description of a ray leaving a cone point: the ray runs into
// `square` at the corner named by `corner`. Together with the ray's direction
// this pins an angular position in the vertex link.
struct Anchor {
    int square = -1;
    Corner corner = Corner::LL;

    bool valid() const { return square >= 0; }
    bool operator==(const Anchor&) const = default;
};

// Saddle connection of direction `dir` consisting of `steps` primitive jumps;
// Euclidean length steps * sqrt(dir.norm2()). Anchors are present on traced
// graphs and describe the outgoing ray at `from` (direction +dir) and the
// reversed ray at `to` (direction -dir).
struct SaddleEdge {
    int from = 0, to = 0;  // singularity ids
    Direction dir;
    int64_t steps = 1;
    Anchor start, end;
    int dir_index = 0;  // position of dir in the graph's direction list

    Length length() const { return Length::radical(steps, dir.norm2()); }
};

// Weighted multigraph of saddle connections. Undirected semantics: every edge
// may be traversed both ways; parallel edges and loops are meaningful.
struct SaddleGraph {
    int num_vertices = 0;
    std::vector<SaddleEdge> edges;
    std::vector<Direction> directions;
    bool has_anchors = false;
};

// Gamma in direction (1,0) straight from the permutations (the sigma_a-orbit
// walk over the singular-corner list L).
SaddleGraph horizontal_graph(const Origami& O);

// Gamma_v by direct ray tracing across the square tiling; produces exact
// anchors. The independent counterpart of graph_in_direction.
SaddleGraph trace_graph_in_direction(const Origami& O, const Direction& v);

// Gamma_v through the SL(2,Z) action: horizontal graph of A.O for A with
// A.v = (1,0), endpoints mapped back through the square correspondence.
// Weights are step counts of direction v; anchors are not carried over.
SaddleGraph graph_in_direction(const Origami& O, const Direction& v);

// All primitive directions v with v.norm2() <= l0_squared, sorted by angle
// over the closed upper half plane.
std::vector<Direction> direction_set_squared(int64_t l0_squared);
std::vector<Direction> direction_set(const Length& l0);

// Gamma_S: disjoint union of traced Gamma_v over v in S.
SaddleGraph union_graph(const Origami& O, const std::vector<Direction>& S);

// Multiset equality of (from, to, steps) triples; the cross-validation
// predicate between the SL2 route and the tracer.
bool same_weighted_multigraph(const SaddleGraph& g1, const SaddleGraph& g2);

}  // namespace flatsys
