#pragma once

#include <algorithm>
#include <optional>
#include <random>

#include "flatsys/io.hpp"

namespace flatsys::testing {

// The 15-square staircase surface: three rows of lengths 6, 6, 3 with the
// shifted top gluings; two cone points of order 1.
inline Origami fifteen_square() {
    return parse_origami(
        "sigma_a = (1,2,3,4,5,6)(7,8,9,10,11,12)(13,14,15)\n"
        "sigma_b = (1,7,13)(2,8,14)(3,9,15)(4,10,6,12,5,11)\n");
}

// The 30-square H(1,1) surface with systole sqrt(17).
inline Origami thirty_square() {
    return parse_origami(
        "sigma_a = (1..8)(9..30)\n"
        "sigma_b = (1,9,27,23,8,30,26,22,7,29,25,21,6,28,24,20,5,13,17,2,10,14,18,3,"
        "11,15,19,4,12,16)\n");
}

inline Origami l_origami() { return parse_origami("a=(1,2) b=(1,3)"); }

inline Origami torus() { return parse_origami("a=id b=id on 1 squares"); }

inline Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

// Random connected origami; with require_singular, resamples until the
// surface has at least one cone point.
inline Origami random_origami(int n, std::mt19937& rng, bool require_singular = true) {
    for (;;) {
        Permutation a = random_permutation(n, rng);
        Permutation b = random_permutation(n, rng);
        if (!perm_detail::is_transitive_pair(a.images().data(), b.images().data(), n)) continue;
        Origami O(a, b);
        if (require_singular && O.singularities().empty()) continue;
        return O;
    }
}

// Independent oracle: exhaustive DFS over closed reduced walks, bounded by
// combinatorial depth = edge count (a minimal closed reduced walk is a loop,
// a parallel pair, or a simple cycle). Shares nothing with the production
// search beyond the graph type.
inline std::optional<Length> brute_force_min_closed_reduced(const SaddleGraph& g) {
    struct Dart {
        int edge, from, to;
        bool forward;
    };
    std::vector<Dart> darts;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        darts.push_back({e, g.edges[e].from, g.edges[e].to, true});
        darts.push_back({e, g.edges[e].to, g.edges[e].from, false});
    }
    std::optional<Length> best;
    const int max_depth = static_cast<int>(g.edges.size());
    std::vector<std::pair<int, bool>> seq;
    auto rec = [&](auto&& self, int start, int cur, const Length& w) -> void {
        for (const auto& d : darts) {
            if (d.from != cur) continue;
            if (!seq.empty() && seq.back().first == d.edge && seq.back().second != d.forward)
                continue;
            Length nw = w + g.edges[d.edge].length();
            if (best.has_value() && nw >= *best) continue;
            seq.emplace_back(d.edge, d.forward);
            if (d.to == start &&
                !(seq.front().first == d.edge && seq.front().second != d.forward))
                best = nw;
            if (static_cast<int>(seq.size()) < max_depth) self(self, start, d.to, nw);
            seq.pop_back();
        }
    };
    for (int v = 0; v < g.num_vertices; ++v) rec(rec, v, v, Length());
    return best;
}

}  // namespace flatsys::testing
