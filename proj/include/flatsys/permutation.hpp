#pragma once

#include <vector>

#include "flatsys/errors.hpp"

namespace flatsys {

// Bijection on {0, .., n-1}. Composition convention throughout the library:
// (f * g)(x) = f(g(x)), i.e. g is applied first.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Cycles use 0-based entries; points absent from every cycle are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;
    bool operator==(const Permutation& rhs) const = default;

    bool is_identity() const;
    // Cycles sorted by smallest element, each rotated to start at its minimum.
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> cycle_type() const;  // lengths, descending
    int min_cycle_length() const;
    // Conjugation g . this . g^-1 (relabeling squares by g).
    Permutation conjugate_by(const Permutation& g) const;

private:
    std::vector<int> images_;
};

// [a, b] = a b a^-1 b^-1 under (f*g)(x) = f(g(x)).
Permutation commutator(const Permutation& a, const Permutation& b);

// Low-level helpers shared with the enumeration hot loop (no validation).
namespace perm_detail {
void invert_into(const int* p, int n, int* out);
bool is_transitive_pair(const int* a, const int* b, int n);
void commutator_into(const int* a, const int* ainv, const int* b, const int* binv,
                     int n, int* out);
}  // namespace perm_detail

}  // namespace flatsys
