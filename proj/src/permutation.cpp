#include "flatsys/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace flatsys {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n == 0) throw NotABijection("permutation on an empty set");
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v]) throw NotABijection("image array is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int x = cyc[i];
            if (x < 0 || x >= n) throw ParseError("cycle entry out of range");
            img[x] = cyc[(i + 1) % cyc.size()];
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    perm_detail::invert_into(images_.data(), degree(), inv.data());
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    std::vector<int> out(images_.size());
    for (int i = 0; i < degree(); ++i) out[i] = images_[rhs.images_[i]];
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<char> seen(degree(), 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back(j);
            j = images_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.rbegin(), type.rend());
    return type;
}

int Permutation::min_cycle_length() const {
    int best = degree();
    for (const auto& c : cycles()) best = std::min(best, static_cast<int>(c.size()));
    return best;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
    // (g p g^-1)(x) = g(p(g^-1(x)))
    return g * (*this) * g.inverse();
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a * b * a.inverse() * b.inverse();
}

namespace perm_detail {

void invert_into(const int* p, int n, int* out) {
    for (int i = 0; i < n; ++i) out[p[i]] = i;
}

bool is_transitive_pair(const int* a, const int* b, int n) {
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    stack.reserve(n);
    stack.push_back(0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : {a[i], b[i]}) {
            if (!seen[j]) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == n;
}

void commutator_into(const int* a, const int* ainv, const int* b, const int* binv,
                     int n, int* out) {
    for (int i = 0; i < n; ++i) out[i] = a[b[ainv[binv[i]]]];
}

}  // namespace perm_detail

}  // namespace flatsys
