#include "flatsys/covers.hpp"

#include <algorithm>

namespace flatsys {

namespace {

// A cycle is a regular cut line iff the commutator fixes every square in it
// (all lower-left corners on the cut line are flat).
std::optional<std::vector<int>> regular_cycle(const Origami& O, const Permutation& p) {
    for (const auto& cyc : p.cycles()) {
        bool ok = true;
        for (int i : cyc)
            if (O.commutator()(i) != i) {
                ok = false;
                break;
            }
        if (ok) return cyc;
    }
    return std::nullopt;
}

std::optional<CutSpec> cut_in_frame(const Origami& O, const Mat2& frame) {
    if (auto c = regular_cycle(O, O.sigma_a()))
        return CutSpec{O, frame, true, std::move(*c)};
    if (auto c = regular_cycle(O, O.sigma_b()))
        return CutSpec{O, frame, false, std::move(*c)};
    return std::nullopt;
}

}  // namespace

CutSpec find_regular_cut(const Origami& O) {
    if (auto c = cut_in_frame(O, Mat2{})) return std::move(*c);
    for (int m = 1; m <= O.degree(); ++m) {
        for (int s : {+1, -1}) {
            Mat2 A{1, s * m, 0, 1};
            if (auto c = cut_in_frame(act(A, O), A)) return std::move(*c);
        }
    }
    Mat2 S = Mat2::rot_s();
    if (auto c = cut_in_frame(act(S, O), S)) return std::move(*c);
    throw NoRegularCutFound(
        "no sigma_a/sigma_b cycle avoids the cone points in any probed frame");
}

Origami cyclic_cover(const Origami& O, const CutSpec& cut, int k) {
    if (k < 1) throw InvalidCut("cover order must be >= 1");
    if (!(O == cut.base)) throw InvalidCut("cut was computed for a different origami");
    const int n = O.degree();
    std::vector<char> in_cut(n, 0);
    for (int i : cut.cycle) {
        if (i < 0 || i >= n) throw InvalidCut("cut cycle entry out of range");
        if (O.commutator()(i) != i)
            throw InvalidCut("cut line passes through a cone point");
        in_cut[i] = 1;
    }
    // The cycle must be a full cycle of the relevant permutation.
    {
        const Permutation& p = cut.horizontal ? O.sigma_a() : O.sigma_b();
        if (cut.cycle.empty()) throw InvalidCut("empty cut cycle");
        int start = cut.cycle[0];
        int j = start;
        size_t len = 0;
        do {
            if (!in_cut[j]) throw InvalidCut("cut is not a full permutation cycle");
            j = p(j);
            ++len;
        } while (j != start);
        if (len != cut.cycle.size()) throw InvalidCut("cut is not a full permutation cycle");
    }

    const auto& a = O.sigma_a().images();
    const auto& b = O.sigma_b().images();
    std::vector<int> ca(n * k), cb(n * k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) {
            int idx = i + j * n;
            if (cut.horizontal) {
                ca[idx] = a[i] + j * n;
                int jj = in_cut[b[i]] ? (j + 1) % k : j;
                cb[idx] = b[i] + jj * n;
            } else {
                cb[idx] = b[i] + j * n;
                int jj = in_cut[a[i]] ? (j + 1) % k : j;
                ca[idx] = a[i] + jj * n;
            }
        }
    }
    return Origami(Permutation(std::move(ca)), Permutation(std::move(cb)));
}

CoverReport verify_cover(const Origami& base, const Origami& cover, int k, bool with_systole) {
    CoverReport r;
    r.k = k;
    r.degree_base = base.degree();
    r.degree_cover = cover.degree();
    r.genus_base = base.genus();
    r.genus_cover = cover.genus();
    r.stratum_base = base.stratum();
    r.stratum_cover = cover.stratum();
    r.genus_ok = r.genus_cover == k * (r.genus_base - 1) + 1;
    Stratum expected;
    for (int i = 0; i < k; ++i)
        expected.orders.insert(expected.orders.end(), r.stratum_base.orders.begin(),
                               r.stratum_base.orders.end());
    std::sort(expected.orders.begin(), expected.orders.end());
    r.stratum_ok = expected == r.stratum_cover;
    if (with_systole && r.genus_base >= 2) {
        SystoleReport rb = systole(base);
        SystoleReport rc = systole(cover);
        r.systole_checked = !rb.unresolved && !rc.unresolved;
        r.sy_base = rb.sy_surface;
        r.sy_cover = rc.sy_surface;
        if (r.systole_checked) r.systole_ok = rc.sy_surface >= rb.sy_surface;
    }
    return r;
}

}  // namespace flatsys
