#pragma once

#include <functional>
#include <optional>

#include "flatsys/bounds.hpp"

namespace flatsys {

// Integer partitions of n, parts descending, in descending lexicographic order.
std::vector<std::vector<int>> partitions_desc(int n);

// One permutation per cycle type: cycles of the partition's lengths filled
// with consecutive points.
std::vector<Permutation> conjugacy_representatives(int n);

// Streams every connected degree-n origami with the given stratum, at least
// once per relabeling class (sigma_a fixed per cycle type, sigma_b free).
// With dedup, exactly one representative per class is delivered.
// The callback returns false to stop early.
void enumerate_stratum(int degree, const Stratum& K, bool dedup,
                       const std::function<bool(const Origami&)>& fn);

struct EnumerationRecord {
    int degree = 0;
    Stratum stratum;
    uint64_t pairs_scanned = 0;   // (representative, sigma_b) pairs considered
    uint64_t stream_count = 0;    // origamis matching stratum + connectivity
    uint64_t systoles_computed = 0;
    Length max_sy_graph;          // published-table semantics: no homotopy filter
    Ratio max_sr_graph;
    std::optional<Permutation> witness_a, witness_b;
    Length max_sy_filtered;       // with the null-homotopy screening applied
    Ratio max_sr_filtered;
    bool filtered_differs = false;
    uint64_t audit_violations = 0;
    uint64_t unresolved_reports = 0;
    double wall_seconds = 0.0;    // measured; not part of deterministic output
};

struct EnumerateOptions {
    int threads = 1;
    bool audit = true;      // check every streamed origami against the bounds
    bool dedup = false;     // exact class dedup (slower, same maximum)
};

// Maximal graph systole (and systolic ratio sy^2/n) over all degree-n
// origamis in stratum K, plus the filtered value when it differs.
EnumerationRecord max_sr(int degree, const Stratum& K, const EnumerateOptions& opts = {});

}  // namespace flatsys
