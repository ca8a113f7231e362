#pragma once

#include <string>

#include "flatsys/covers.hpp"
#include "flatsys/enumerate.hpp"

namespace flatsys {

// Accepts disjoint-cycle notation with optional ".." ranges, e.g.
//   sigma_a = (1,2,3)(4,5)
//   sigma_b = (1..6)
//   degree = 6            # optional; defaults to the largest point mentioned
// "id" names the identity, image arrays may be given as [2,3,1] (1-based),
// and the names a/b and the sigma glyph are accepted. A JSON object with
// sigma_a / sigma_b (cycle strings or 1-based image arrays) works as well.
Origami parse_origami(const std::string& text);

std::string origami_to_text(const Origami& O);
std::string origami_to_json(const Origami& O);
std::string cycles_to_string(const Permutation& p);  // 1-based "(1,2,3)(4,5)"

std::string graph_to_dot(const SaddleGraph& g);
std::string graph_to_json(const Origami& O, const SaddleGraph& g);

std::string systole_report_to_json(const Origami& O, const SystoleReport& r,
                                   bool emit_candidates);
std::string systole_report_to_text(const SystoleReport& r);

std::string bounds_report_to_json(const BoundsReport& r);
std::string bounds_report_to_text(const BoundsReport& r);
std::string bounds_formulas_to_json(const Stratum& K);
std::string bounds_formulas_to_text(const Stratum& K);

std::string cover_report_to_json(const CoverReport& r, const CutSpec& cut);

std::string enumeration_csv_header();
std::string enumeration_record_to_csv(const EnumerationRecord& r);
std::string enumeration_record_to_json(const EnumerationRecord& r);

// Fixed 12-significant-digit rendering used by every emitter.
std::string format_decimal(double v);

}  // namespace flatsys
