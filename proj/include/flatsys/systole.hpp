#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flatsys/geometry.hpp"

namespace flatsys {

// Upper bound for the systole from regular closed geodesics: the minimal
// cycle length over both permutations.
int64_t l0_bound(const Origami& O);

// min(l0_bound, weight of a shortest closed reduced path in the union of the
// horizontal and vertical graphs); always an integer for origamis.
int64_t improved_l0(const Origami& O);

// Minimum weight of a nontrivial closed reduced edge-path: single loops,
// pairs of distinct parallel edges, and per-edge deletion plus a shortest
// path between the endpoints (Dijkstra; weights are positive).
// Returns nullopt when the graph has no closed reduced path.
std::optional<Length> min_closed_reduced_value(const SaddleGraph& g);

struct ShortestPathsResult {
    Length weight;
    std::vector<EdgePath> paths;  // every attaining path up to rotation/reversal
};

// The graph systole together with all attaining paths, canonicalized and
// sorted deterministically.
ShortestPathsResult shortest_closed_reduced(const SaddleGraph& g);

// The `count` smallest closed reduced paths in nondecreasing weight, without
// duplicates up to rotation and reversal and without proper powers.
// Ties are ordered by (weight, combinatorial length, step sequence).
std::vector<EdgePath> k_shortest_closed_reduced(const SaddleGraph& g, int count);

// Exact rational when available (the usual case: the systole is a multiple of
// a single direction, so its square is an integer).
struct Ratio {
    bool exact = false;
    int64_t num = 0, den = 1;
    double value = 0.0;
    std::string text;  // "17/30" or a radical expression over the degree
};

struct Candidate {
    EdgePath path;
    Length weight;
    std::array<int64_t, 2> developing{0, 0};
    bool null_homotopic = false;
    PathAngles angles;
};

struct SystoleReport {
    int degree = 0;
    Stratum stratum;
    int64_t l0_bound = 0;
    int64_t improved_l0 = 0;
    int64_t l0_used = 0;  // after any escalation-driven enlargement
    std::vector<Direction> directions;
    SaddleGraph graph;  // Gamma_S used for the final search
    Length sy_graph;
    std::vector<Candidate> minimal_candidates;
    Length sy_surface;
    Candidate accepted;            // the path realizing sy_surface
    bool escalated = false;        // minimal class was entirely null homotopic
    int escalation_examined = 0;   // candidates screened beyond the minimal class
    bool unresolved = false;       // a zero-developing candidate could not be settled
    bool geodesic_criterion_ok = false;
    bool comparisons_exact = true;
    Ratio systolic_ratio;          // sy_surface^2 / degree
};

struct SystoleOptions {
    std::optional<int64_t> l0_override;
    std::optional<std::vector<Direction>> directions_override;
};

// Algorithm I end to end: bound, direction set, Gamma_S, minimal candidates,
// null-homotopy screening, escalation when required.
SystoleReport systole(const Origami& O, const SystoleOptions& opts = {});

Ratio ratio_from(const Length& sy, int degree);

}  // namespace flatsys
