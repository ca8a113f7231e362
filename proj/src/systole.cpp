#include "flatsys/systole.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace flatsys {

int64_t l0_bound(const Origami& O) {
    return std::min(O.sigma_a().min_cycle_length(), O.sigma_b().min_cycle_length());
}

namespace {

struct Dart {
    int edge;
    bool forward;
    int target;
};

std::vector<std::vector<Dart>> build_darts(const SaddleGraph& g) {
    std::vector<std::vector<Dart>> out(g.num_vertices);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        out[ed.from].push_back({e, true, ed.to});
        out[ed.to].push_back({e, false, ed.from});
    }
    return out;
}

// Dijkstra from src to dst skipping loops and one banned edge.
std::optional<Length> shortest_path_value(const SaddleGraph& g,
                                          const std::vector<std::vector<Dart>>& darts, int src,
                                          int dst, int banned_edge) {
    if (src == dst) return Length();
    std::vector<std::optional<Length>> dist(g.num_vertices);
    using Entry = std::pair<Length, int>;
    auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> pq(cmp);
    dist[src] = Length();
    pq.push({Length(), src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (dist[v].has_value() && d > *dist[v]) continue;
        if (v == dst) return d;
        for (const auto& dart : darts[v]) {
            if (dart.edge == banned_edge) continue;
            const auto& e = g.edges[dart.edge];
            if (e.from == e.to) continue;  // loops never help a shortest path
            Length nd = d + e.length();
            if (!dist[dart.target].has_value() || nd < *dist[dart.target]) {
                dist[dart.target] = nd;
                pq.push({nd, dart.target});
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Length> min_closed_reduced_value(const SaddleGraph& g) {
    std::optional<Length> best;
    auto consider = [&](const Length& w) {
        if (!best.has_value() || w < *best) best = w;
    };
    // (a) single loops
    for (const auto& e : g.edges)
        if (e.from == e.to) consider(e.length());
    // (b) two distinct parallel edges (loops pair up at their base vertex)
    std::map<std::pair<int, int>, std::vector<Length>> groups;
    for (const auto& e : g.edges)
        groups[{std::min(e.from, e.to), std::max(e.from, e.to)}].push_back(e.length());
    for (auto& [k, ws] : groups) {
        if (ws.size() < 2) continue;
        std::sort(ws.begin(), ws.end());
        consider(ws[0] + ws[1]);
    }
    // (c) per-edge deletion + shortest path between the endpoints
    auto darts = build_darts(g);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        if (ed.from == ed.to) continue;
        auto d = shortest_path_value(g, darts, ed.from, ed.to, e);
        if (d.has_value()) consider(ed.length() + *d);
    }
    return best;
}

int64_t improved_l0(const Origami& O) {
    if (O.singularities().empty())
        throw NoSingularities("improved_l0 requires at least one cone point");
    int64_t bound = l0_bound(O);
    SaddleGraph axis = union_graph(O, {Direction(1, 0), Direction(0, 1)});
    auto mu = min_closed_reduced_value(axis);
    if (mu.has_value()) {
        // Axis graphs have unit-norm directions, so the value is an integer.
        int64_t v = mu->integer_value();
        if (v < bound) return v;
    }
    return bound;
}

namespace {

using Seq = std::vector<PathStep>;

Seq canonical_cycle(const Seq& seq) {
    Seq best = seq;
    auto consider_rotations = [&best](const Seq& s) {
        for (size_t r = 0; r < s.size(); ++r) {
            Seq rot(s.begin() + r, s.end());
            rot.insert(rot.end(), s.begin(), s.begin() + r);
            if (rot < best) best = rot;
        }
    };
    consider_rotations(seq);
    Seq rev;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) rev.push_back({it->edge, !it->forward});
    consider_rotations(rev);
    return best;
}

bool is_proper_power(const Seq& seq) {
    const size_t n = seq.size();
    for (size_t p = 1; p <= n / 2; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (size_t i = p; i < n && ok; ++i) ok = seq[i] == seq[i % p];
        if (ok) return true;
    }
    return false;
}

// Best-first enumeration of closed reduced paths in nondecreasing
// (weight, length, sequence) order, deduplicated up to rotation/reversal and
// with proper powers skipped. `stop` is called on each emitted path; a true
// return ends the search. `weight_cap`: paths heavier are never reported.
struct WalkState {
    Length weight;
    int start;
    int cur;
    Seq seq;
};

struct WalkOrder {
    bool operator()(const WalkState& a, const WalkState& b) const {
        if (auto c = a.weight <=> b.weight; c != 0) return c == std::strong_ordering::greater;
        if (a.seq.size() != b.seq.size()) return a.seq.size() > b.seq.size();
        if (a.seq != b.seq) return a.seq > b.seq;
        return a.start > b.start;
    }
};

void enumerate_closed_reduced(const SaddleGraph& g, const std::optional<Length>& weight_cap,
                              const std::function<bool(const EdgePath&, const Length&)>& stop) {
    if (g.edges.empty()) throw EmptyGraph("saddle graph has no edges");
    auto darts = build_darts(g);
    for (auto& d : darts)
        std::sort(d.begin(), d.end(), [](const Dart& a, const Dart& b) {
            return std::pair(a.edge, !a.forward) < std::pair(b.edge, !b.forward);
        });
    std::priority_queue<WalkState, std::vector<WalkState>, WalkOrder> pq;
    for (int v = 0; v < g.num_vertices; ++v) pq.push({Length(), v, v, {}});
    std::set<Seq> seen;
    size_t guard = 0;
    while (!pq.empty()) {
        WalkState st = pq.top();
        pq.pop();
        if (weight_cap.has_value() && st.weight > *weight_cap) return;
        if (++guard > 5'000'000)
            throw Error("Internal", "closed-path enumeration exceeded the state budget");
        if (!st.seq.empty() && st.cur == st.start) {
            const PathStep& first = st.seq.front();
            const PathStep& last = st.seq.back();
            bool cyclically_reduced =
                st.seq.size() == 1 || !(first.edge == last.edge && first.forward != last.forward);
            if (cyclically_reduced) {
                Seq canon = canonical_cycle(st.seq);
                if (!is_proper_power(canon) && seen.insert(canon).second) {
                    if (stop(EdgePath{canon}, st.weight)) return;
                }
            }
        }
        for (const auto& dart : darts[st.cur]) {
            if (!st.seq.empty() && dart.edge == st.seq.back().edge &&
                dart.forward != st.seq.back().forward)
                continue;  // backtracking
            Length nw = st.weight + g.edges[dart.edge].length();
            if (weight_cap.has_value() && nw > *weight_cap) continue;
            WalkState next{nw, st.start, dart.target, st.seq};
            next.seq.push_back({dart.edge, dart.forward});
            pq.push(std::move(next));
        }
    }
}

}  // namespace

ShortestPathsResult shortest_closed_reduced(const SaddleGraph& g) {
    if (g.edges.empty()) throw EmptyGraph("saddle graph has no edges");
    auto mu = min_closed_reduced_value(g);
    if (!mu.has_value()) throw EmptyGraph("graph has no closed reduced path");
    ShortestPathsResult out;
    out.weight = *mu;
    enumerate_closed_reduced(g, mu, [&](const EdgePath& p, const Length& w) {
        if (w == *mu) out.paths.push_back(p);
        return false;
    });
    if (out.paths.empty())
        throw Error("Internal", "enumeration found no path at the candidate minimum");
    std::sort(out.paths.begin(), out.paths.end(), [](const EdgePath& a, const EdgePath& b) {
        if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
        return a.steps < b.steps;
    });
    return out;
}

std::vector<EdgePath> k_shortest_closed_reduced(const SaddleGraph& g, int count) {
    std::vector<EdgePath> out;
    if (count <= 0) return out;
    enumerate_closed_reduced(g, std::nullopt, [&](const EdgePath& p, const Length&) {
        out.push_back(p);
        return static_cast<int>(out.size()) >= count;
    });
    return out;
}

Ratio ratio_from(const Length& sy, int degree) {
    Ratio r;
    Length sq = sy.squared();
    r.value = sq.to_double() / degree;
    if (sq.is_integer()) {
        int64_t num = sq.integer_value(), den = degree;
        int64_t g = std::gcd(num, den);
        r.exact = true;
        r.num = num / g;
        r.den = den / g;
        r.text = std::to_string(r.num) + "/" + std::to_string(r.den);
    } else {
        r.text = "(" + sq.to_string() + ")/" + std::to_string(degree);
    }
    return r;
}

namespace {

Candidate make_candidate(const Origami& O, const SaddleGraph& g, const EdgePath& p) {
    Candidate c;
    c.path = p;
    c.weight = path_weight(g, p);
    c.developing = developing_sum(g, p);
    c.angles = path_angles(O, g, p);
    c.null_homotopic = is_null_homotopic_minimal(O, p, c.angles);
    return c;
}

}  // namespace

SystoleReport systole(const Origami& O, const SystoleOptions& opts) {
    if (O.singularities().empty())
        throw GenusOne("the graph method requires cone points; genus-1 surfaces have none");

    SystoleReport rep;
    rep.degree = O.degree();
    rep.stratum = O.stratum();
    rep.l0_bound = l0_bound(O);
    rep.improved_l0 = improved_l0(O);

    int64_t l0 = opts.l0_override.value_or(rep.improved_l0);
    const int max_rounds = 8;
    for (int round = 0; round < max_rounds; ++round) {
        rep.l0_used = l0;
        rep.directions = opts.directions_override.value_or(direction_set_squared(l0 * l0));
        rep.graph = union_graph(O, rep.directions);

        auto minimal = shortest_closed_reduced(rep.graph);
        rep.sy_graph = minimal.weight;
        rep.minimal_candidates.clear();
        bool have_accepted = false;
        for (const auto& p : minimal.paths) {
            Candidate c = make_candidate(O, rep.graph, p);
            if (!c.null_homotopic && !have_accepted) {
                rep.accepted = c;
                have_accepted = true;
            }
            rep.minimal_candidates.push_back(std::move(c));
        }
        rep.escalated = !have_accepted;
        rep.escalation_examined = 0;
        rep.unresolved = false;

        if (have_accepted) {
            rep.sy_surface = rep.sy_graph;
        } else {
            // Every minimal candidate is null homotopic: screen heavier
            // candidates in weight order. Nonzero developing sum accepts;
            // zero-sum length-3 all-angles-below-pi rejects; any other
            // zero-sum candidate cannot be settled here and is flagged.
            Length cap = Length::integer(4 * l0);
            bool done = false;
            enumerate_closed_reduced(rep.graph, cap, [&](const EdgePath& p, const Length& w) {
                if (w == rep.sy_graph) return false;  // the minimal class, already screened
                ++rep.escalation_examined;
                Candidate c = make_candidate(O, rep.graph, p);
                if (c.developing[0] != 0 || c.developing[1] != 0) {
                    rep.accepted = std::move(c);
                    rep.sy_surface = w;
                    done = true;
                    return true;
                }
                if (c.null_homotopic) return false;  // length 3, angles below pi on a side
                rep.accepted = std::move(c);
                rep.sy_surface = w;
                rep.unresolved = true;
                done = true;
                return true;
            });
            if (!done) {
                // Exhausted the cap without a verdict; report the graph value
                // as a non-definitive lower bound.
                rep.sy_surface = rep.sy_graph;
                rep.unresolved = true;
            }
        }

        // If the accepted value exceeds the direction bound, shorter saddle
        // connections in unseen directions could still matter: enlarge l0.
        if (!opts.directions_override.has_value() && rep.sy_surface > Length::integer(l0)) {
            int64_t enlarged = l0 + 1;
            while (Length::integer(enlarged) < rep.sy_surface) ++enlarged;
            l0 = enlarged;
            continue;
        }
        break;
    }

    rep.geodesic_criterion_ok = !rep.unresolved && satisfies_geodesic_criterion(rep.accepted.angles);
    rep.systolic_ratio = ratio_from(rep.sy_surface, rep.degree);
    return rep;
}

}  // namespace flatsys
