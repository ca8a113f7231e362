#include "flatsys/origami.hpp"

#include <algorithm>
#include <numeric>

namespace flatsys {

int Stratum::genus() const {
    int sum = std::accumulate(orders.begin(), orders.end(), 0);
    return 1 + sum / 2;
}

std::string Stratum::to_string() const {
    std::string s = "H(";
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(orders[i]);
    }
    s += ")";
    return s;
}

Origami::Origami(Permutation sigma_a, Permutation sigma_b)
    : sigma_a_(std::move(sigma_a)),
      sigma_b_(std::move(sigma_b)),
      commutator_(flatsys::commutator(sigma_a_, sigma_b_)) {
    if (sigma_a_.degree() != sigma_b_.degree())
        throw NotABijection("sigma_a and sigma_b act on different square sets");
    if (!perm_detail::is_transitive_pair(sigma_a_.images().data(), sigma_b_.images().data(),
                                         degree()))
        throw Disconnected("the permutation pair does not act transitively: surface disconnected");

    square_to_singularity_.assign(degree(), -1);
    auto cycles = commutator_.cycles();  // sorted by minimum element
    vertex_count_ = static_cast<int>(cycles.size());
    for (auto& cyc : cycles) {
        if (cyc.size() < 2) continue;
        Singularity s;
        s.id = static_cast<int>(singularities_.size());
        s.order = static_cast<int>(cyc.size()) - 1;
        s.cycle = std::move(cyc);
        for (int sq : s.cycle) {
            square_to_singularity_[sq] = s.id;
            singular_squares_.push_back(sq);
        }
        singularities_.push_back(std::move(s));
    }
    std::sort(singular_squares_.begin(), singular_squares_.end());
}

Stratum Origami::stratum() const {
    Stratum k;
    for (const auto& s : singularities_) k.orders.push_back(s.order);
    std::sort(k.orders.begin(), k.orders.end());
    return k;
}

int Origami::genus() const { return stratum().genus(); }

int Origami::genus_from_euler() const {
    // F = n squares, E = 2n glued edges, V = number of commutator cycles.
    int chi = vertex_count_ - 2 * degree() + degree();
    return 1 - chi / 2;
}

std::pair<std::vector<int>, std::vector<int>> Origami::canonical_form() const {
    const int n = degree();
    const auto& a = sigma_a_.images();
    const auto& b = sigma_b_.images();
    std::pair<std::vector<int>, std::vector<int>> best;
    std::vector<int> label(n), order(n);
    for (int start = 0; start < n; ++start) {
        // BFS relabeling from `start`, exploring sigma_a then sigma_b.
        std::fill(label.begin(), label.end(), -1);
        label[start] = 0;
        order[0] = start;
        int filled = 1;
        for (int q = 0; q < filled; ++q) {
            int i = order[q];
            for (int j : {a[i], b[i]}) {
                if (label[j] < 0) {
                    label[j] = filled;
                    order[filled++] = j;
                }
            }
        }
        std::vector<int> ca(n), cb(n);
        for (int i = 0; i < n; ++i) {
            ca[label[i]] = label[a[i]];
            cb[label[i]] = label[b[i]];
        }
        auto cand = std::make_pair(std::move(ca), std::move(cb));
        if (start == 0 || cand < best) best = std::move(cand);
    }
    return best;
}

bool Origami::is_isomorphic_to(const Origami& other) const {
    if (degree() != other.degree()) return false;
    return canonical_form() == other.canonical_form();
}

Origami Origami::relabeled_by(const Permutation& g) const {
    return Origami(sigma_a_.conjugate_by(g), sigma_b_.conjugate_by(g));
}

}  // namespace flatsys
