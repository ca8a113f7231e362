#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatsys/systole.hpp"

namespace flatsys {

// sr(H(K)) <= 4 / (pi * (k_n + 1)) with k_n the largest order.
double area_bound(const Stratum& K);

// Boissy-Geninska: (shortest saddle connection)^2 / area <= 2 / (sqrt(3) * (2g - 2 + n)).
double bg_bound(const Stratum& K);

// Bounds for the l-th shortest of the guaranteed floor(n/2) saddle
// connections; entry 0 is bg_bound, entry l-1 (l >= 2) is
// 4 / (pi * (2g + n - 2l - sum of the 2l-2 largest orders)).
// A non-positive denominator marks the entry skipped (not expected: the
// denominator is at least n - 2l + 2 >= 2 for l <= n/2).
struct SaddleBound {
    int l = 1;
    double value = 0.0;
    bool skipped = false;
};
std::vector<SaddleBound> short_saddle_bounds(const Stratum& K);

// Refined variant in H(1,...,1) for l >= 2, using the measured shortest
// saddle connection: (1 - delta1_sq_over_area * l) / (pi * (g - l)).
double refined_all_ones_bound(const Stratum& K, int l, double delta1_sq_over_area);

struct BoundCheck {
    std::string name;
    double bound = 0.0;
    double measured = 0.0;  // measured_sq / area, compared against bound
    bool skipped = false;
    bool passed = true;
};

struct BoundsReport {
    Stratum stratum;
    int degree = 0;
    std::vector<BoundCheck> checks;
    bool all_passed = true;
    // l-th shortest saddle connection lengths actually measured (exact).
    std::vector<Length> shortest_saddles;
};

// Audits one origami against every applicable closed-form bound, using the
// l-th shortest saddle connection overall as a stand-in for delta_l. The
// graph must contain every saddle connection up to each bound's implied
// length cap sqrt(bound * n); InsufficientDirectionSet otherwise.
BoundsReport audit(const Origami& O, const SystoleReport& report, const SaddleGraph& big_graph);

// Convenience wrapper: builds a sufficient graph and the systole report.
BoundsReport audit_origami(const Origami& O);

// The saddle-length checks alone (Boissy-Geninska, short-saddle, refined),
// given the sorted lengths of every saddle connection up to the audit cap of
// audit_l0(K, degree). Used by the enumeration sweep.
std::vector<BoundCheck> audit_saddle_lengths(const Stratum& K, int degree,
                                             const std::vector<Length>& sorted_lengths);

// Smallest integer l0 whose direction set is guaranteed to expose every
// bound-relevant saddle connection for this stratum and degree.
int64_t audit_l0(const Stratum& K, int degree);

}  // namespace flatsys
