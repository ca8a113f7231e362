#include "flatsys/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <set>
#include <thread>

namespace flatsys {

std::vector<std::vector<int>> partitions_desc(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // parts descending, first part bounded by the previous one
    auto rec = [&](auto&& self, int rest, int maxp) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Permutation> conjugacy_representatives(int n) {
    std::vector<Permutation> out;
    for (const auto& parts : partitions_desc(n)) {
        std::vector<int> img(n);
        int start = 0;
        for (int p : parts) {
            for (int i = 0; i < p; ++i) img[start + i] = start + (i + 1) % p;
            start += p;
        }
        out.emplace_back(std::move(img));
    }
    return out;
}

namespace {

constexpr int kMaxDegree = 20;

// Does the commutator array have singular cycle lengths exactly matching the
// stratum (orders + 1 each), with everything else fixed?
bool commutator_matches(const int* c, int n, const int* budget, int budget_max_len,
                        int total_singular) {
    uint32_t seen = 0;
    int found = 0;
    int remaining[kMaxDegree + 2];
    std::memcpy(remaining, budget, sizeof(int) * (budget_max_len + 1));
    for (int i = 0; i < n; ++i) {
        if (seen & (1u << i)) continue;
        int len = 0, j = i;
        do {
            seen |= 1u << j;
            j = c[j];
            ++len;
        } while (j != i);
        if (len == 1) continue;
        if (len > budget_max_len || remaining[len] == 0) return false;
        --remaining[len];
        if (++found > total_singular) return false;
    }
    return found == total_singular;
}

struct TaskResult {
    uint64_t scanned = 0;
    uint64_t streamed = 0;
    uint64_t systoles = 0;
    uint64_t audit_violations = 0;
    uint64_t unresolved = 0;
    bool have_graph = false;
    Length best_graph;
    uint64_t best_graph_rank = 0;
    std::vector<int> best_graph_a, best_graph_b;
    bool have_filtered = false;
    Length best_filtered;
    uint64_t best_filtered_rank = 0;
    std::vector<int> best_filtered_a, best_filtered_b;
};

void atomic_max_double(std::atomic<uint64_t>& slot, double v) {
    uint64_t cur = slot.load(std::memory_order_relaxed);
    uint64_t want = std::bit_cast<uint64_t>(v);
    while (std::bit_cast<double>(cur) < v &&
           !slot.compare_exchange_weak(cur, want, std::memory_order_relaxed)) {
    }
}

}  // namespace

void enumerate_stratum(int degree, const Stratum& K, bool dedup,
                       const std::function<bool(const Origami&)>& fn) {
    if (degree < 1 || degree > kMaxDegree)
        throw ParseError("enumeration degree out of supported range");
    int budget[kMaxDegree + 2] = {0};
    int budget_max_len = 1;
    for (int k : K.orders) {
        budget[k + 1] += 1;
        budget_max_len = std::max(budget_max_len, k + 1);
    }
    const int total_singular = static_cast<int>(K.orders.size());
    std::vector<int> ainv(degree), binv(degree), c(degree);
    std::set<std::pair<std::vector<int>, std::vector<int>>> classes;
    for (const auto& rep : conjugacy_representatives(degree)) {
        const int* a = rep.images().data();
        perm_detail::invert_into(a, degree, ainv.data());
        std::vector<int> b(degree);
        for (int i = 0; i < degree; ++i) b[i] = i;
        do {
            perm_detail::invert_into(b.data(), degree, binv.data());
            perm_detail::commutator_into(a, ainv.data(), b.data(), binv.data(), degree, c.data());
            if (!commutator_matches(c.data(), degree, budget, budget_max_len, total_singular))
                continue;
            if (!perm_detail::is_transitive_pair(a, b.data(), degree)) continue;
            Origami O(rep, Permutation(b));
            if (dedup && !classes.insert(O.canonical_form()).second) continue;
            if (!fn(O)) return;
        } while (std::next_permutation(b.begin(), b.end()));
    }
}

EnumerationRecord max_sr(int degree, const Stratum& K, const EnumerateOptions& opts) {
    if (degree < 1 || degree > kMaxDegree)
        throw ParseError("enumeration degree out of supported range");
    auto t0 = std::chrono::steady_clock::now();

    int budget[kMaxDegree + 2] = {0};
    int budget_max_len = 1;
    for (int k : K.orders) {
        budget[k + 1] += 1;
        budget_max_len = std::max(budget_max_len, k + 1);
    }
    const int total_singular = static_cast<int>(K.orders.size());
    const double area = degree;
    const double bound_area = area_bound(K);
    const int64_t l0_audit = opts.audit ? audit_l0(K, degree) : 0;
    const auto audit_dirs =
        opts.audit ? direction_set_squared(l0_audit * l0_audit) : std::vector<Direction>{};

    auto reps = conjugacy_representatives(degree);
    std::vector<TaskResult> results(reps.size());
    std::atomic<size_t> next_task{0};
    // Racy monotone lower bounds used only to prune strictly-worse origamis;
    // exact maxima come from the deterministic per-task merge below.
    std::atomic<uint64_t> hint_graph{std::bit_cast<uint64_t>(0.0)};
    std::atomic<uint64_t> hint_filtered{std::bit_cast<uint64_t>(0.0)};

    auto worker = [&]() {
        std::vector<int> ainv(degree), binv(degree), c(degree);
        for (;;) {
            size_t task = next_task.fetch_add(1);
            if (task >= reps.size()) return;
            TaskResult& res = results[task];
            const Permutation& rep = reps[task];
            const int* a = rep.images().data();
            perm_detail::invert_into(a, degree, ainv.data());
            const int min_cycle_a = rep.min_cycle_length();
            std::set<std::pair<std::vector<int>, std::vector<int>>> classes;

            std::vector<int> b(degree);
            for (int i = 0; i < degree; ++i) b[i] = i;
            uint64_t rank = 0;
            do {
                ++rank;
                ++res.scanned;
                perm_detail::invert_into(b.data(), degree, binv.data());
                perm_detail::commutator_into(a, ainv.data(), b.data(), binv.data(), degree,
                                             c.data());
                if (!commutator_matches(c.data(), degree, budget, budget_max_len, total_singular))
                    continue;
                if (!perm_detail::is_transitive_pair(a, b.data(), degree)) continue;

                Origami O(rep, Permutation(b));
                if (opts.dedup && !classes.insert(O.canonical_form()).second) continue;
                ++res.streamed;

                // l0 bound prunes anything strictly below both running maxima.
                int min_cycle_b = degree;
                {
                    uint32_t seen = 0;
                    for (int i = 0; i < degree; ++i) {
                        if (seen & (1u << i)) continue;
                        int len = 0, j = i;
                        do {
                            seen |= 1u << j;
                            j = b[j];
                            ++len;
                        } while (j != i);
                        min_cycle_b = std::min(min_cycle_b, len);
                    }
                }
                const double l0b = std::min(min_cycle_a, min_cycle_b);
                double hg = std::bit_cast<double>(hint_graph.load(std::memory_order_relaxed));
                double hf = std::bit_cast<double>(hint_filtered.load(std::memory_order_relaxed));
                const bool gate_graph = l0b >= hg - 1e-9;
                const bool gate_filtered = l0b >= hf - 1e-9;

                const int64_t il0 = improved_l0(O);
                std::optional<Length> mu;
                auto need_mu = [&]() -> const Length& {
                    if (!mu.has_value()) {
                        SaddleGraph g = union_graph(O, direction_set_squared(il0 * il0));
                        auto m = min_closed_reduced_value(g);
                        if (!m.has_value())
                            throw Error("Internal", "saddle graph without closed paths");
                        mu = *m;
                    }
                    return *mu;
                };

                if (opts.audit) {
                    bool ok = true;
                    // Area estimate: sy <= improved_l0 settles almost every case.
                    if (static_cast<double>(il0) * il0 > bound_area * area + 1e-12) {
                        Length m = need_mu();
                        if (m.squared().to_double() / area > bound_area + 1e-12) ok = false;
                    }
                    SaddleGraph cap_graph = union_graph(O, audit_dirs);
                    std::vector<Length> lens;
                    lens.reserve(cap_graph.edges.size());
                    for (const auto& e : cap_graph.edges) lens.push_back(e.length());
                    std::sort(lens.begin(), lens.end());
                    for (const auto& chk : audit_saddle_lengths(K, degree, lens))
                        if (!chk.skipped && !chk.passed) ok = false;
                    if (!ok) ++res.audit_violations;
                }

                if (gate_graph) {
                    const Length& m = need_mu();
                    if (!res.have_graph || m > res.best_graph) {
                        res.have_graph = true;
                        res.best_graph = m;
                        res.best_graph_rank = rank;
                        res.best_graph_a = rep.images();
                        res.best_graph_b = b;
                        atomic_max_double(hint_graph, m.to_double());
                    }
                }
                if (gate_filtered) {
                    SystoleReport r = systole(O);
                    ++res.systoles;
                    if (r.unresolved) {
                        ++res.unresolved;
                    } else if (!res.have_filtered || r.sy_surface > res.best_filtered) {
                        res.have_filtered = true;
                        res.best_filtered = r.sy_surface;
                        res.best_filtered_rank = rank;
                        res.best_filtered_a = rep.images();
                        res.best_filtered_b = b;
                        atomic_max_double(hint_filtered, r.sy_surface.to_double());
                    }
                }
            } while (std::next_permutation(b.begin(), b.end()));
        }
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    EnumerationRecord rec;
    rec.degree = degree;
    rec.stratum = K;
    for (size_t t = 0; t < results.size(); ++t) {
        const TaskResult& r = results[t];
        rec.pairs_scanned += r.scanned;
        rec.stream_count += r.streamed;
        rec.systoles_computed += r.systoles;
        rec.audit_violations += r.audit_violations;
        rec.unresolved_reports += r.unresolved;
        if (r.have_graph && (!rec.witness_a.has_value() || r.best_graph > rec.max_sy_graph)) {
            rec.max_sy_graph = r.best_graph;
            rec.witness_a = Permutation(r.best_graph_a);
            rec.witness_b = Permutation(r.best_graph_b);
        }
        if (r.have_filtered &&
            (rec.max_sy_filtered.is_zero() || r.best_filtered > rec.max_sy_filtered)) {
            rec.max_sy_filtered = r.best_filtered;
        }
    }
    rec.max_sr_graph = ratio_from(rec.max_sy_graph, degree);
    rec.max_sr_filtered = ratio_from(rec.max_sy_filtered, degree);
    rec.filtered_differs = !(rec.max_sy_filtered == rec.max_sy_graph);
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace flatsys
