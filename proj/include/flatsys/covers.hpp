#pragma once

#include <optional>

#include "flatsys/systole.hpp"

namespace flatsys {

// A regular grid-line cut: the bottom-edge line of a sigma_a cycle (horizontal)
// or the left-edge line of a sigma_b cycle (vertical) all of whose squares
// have regular lower-left corners. `frame` records the shear applied to reach
// `base` from the input surface (identity when none was needed).
struct CutSpec {
    Origami base;
    Mat2 frame;
    bool horizontal = true;
    std::vector<int> cycle;  // squares of the cut cycle, 0-based
};

// Scans sigma_a cycles, then sigma_b cycles, then sheared frames T^m for
// |m| <= degree and the quarter rotation S. Throws NoRegularCutFound when the
// budget is exhausted (every lattice point may be a cone point).
CutSpec find_regular_cut(const Origami& O);

// Degree k*n cyclic cover: k sheets glued along the cut, crossing the cut
// upward (resp. rightward) moves one sheet up, cyclically. Square (i, sheet j)
// gets index i + j*n.
Origami cyclic_cover(const Origami& O, const CutSpec& cut, int k);

struct CoverReport {
    int k = 1;
    int degree_base = 0, degree_cover = 0;
    int genus_base = 0, genus_cover = 0;
    Stratum stratum_base, stratum_cover;
    bool genus_ok = false;    // genus_cover == k*(genus_base - 1) + 1
    bool stratum_ok = false;  // stratum_cover == base orders repeated k times
    bool systole_checked = false;
    bool systole_ok = true;   // sy(cover) >= sy(base)
    Length sy_base, sy_cover;
};

// Verifies the cover relations; the systole comparison runs only for
// genus >= 2 bases (and can be disabled for speed).
CoverReport verify_cover(const Origami& base, const Origami& cover, int k,
                         bool with_systole = true);

}  // namespace flatsys
