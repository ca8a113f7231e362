#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flatsys/permutation.hpp"

namespace flatsys {

// Cone point of the surface. `cycle` is the commutator cycle of squares whose
// lower-left corners meet at the point; order k means cone angle 2*pi*(k+1).
struct Singularity {
    int id = 0;
    std::vector<int> cycle;  // 0-based squares, rotated to start at the minimum
    int order = 0;           // cycle.size() - 1
};

// Multiset of singularity orders, ascending. Empty for the torus.
struct Stratum {
    std::vector<int> orders;

    bool operator==(const Stratum&) const = default;
    int genus() const;  // 1 + (sum of orders)/2
    std::string to_string() const;  // "H(1,1)", "H()" for the torus
};

// A square-tiled surface: sigma_a glues each square's right edge to the left
// edge of its image, sigma_b glues top to bottom. The pair must generate a
// transitive group (connected surface).
class Origami {
public:
    Origami(Permutation sigma_a, Permutation sigma_b);

    int degree() const { return sigma_a_.degree(); }
    const Permutation& sigma_a() const { return sigma_a_; }
    const Permutation& sigma_b() const { return sigma_b_; }
    const Permutation& commutator() const { return commutator_; }

    const std::vector<Singularity>& singularities() const { return singularities_; }
    // Ascending list of squares whose lower-left corner is a cone point
    // (Algorithm II's list L).
    const std::vector<int>& singular_squares() const { return singular_squares_; }
    // Singularity id owning square i's lower-left corner, or -1 if regular.
    int singularity_of_square(int i) const { return square_to_singularity_[i]; }

    Stratum stratum() const;
    int genus() const;
    // Independent genus computation from V - E + F of the square complex.
    int genus_from_euler() const;
    int vertex_count() const { return vertex_count_; }

    // Canonical form under simultaneous relabeling of squares; two origamis
    // are isomorphic iff their canonical forms coincide.
    std::pair<std::vector<int>, std::vector<int>> canonical_form() const;
    bool is_isomorphic_to(const Origami& other) const;
    Origami relabeled_by(const Permutation& g) const;

    bool operator==(const Origami& o) const {
        return sigma_a_ == o.sigma_a_ && sigma_b_ == o.sigma_b_;
    }

private:
    Permutation sigma_a_;
    Permutation sigma_b_;
    Permutation commutator_;
    std::vector<Singularity> singularities_;
    std::vector<int> singular_squares_;
    std::vector<int> square_to_singularity_;
    int vertex_count_ = 0;
};

}  // namespace flatsys
