#include <doctest.h>

#include "fixtures.hpp"

using namespace flatsys;
using namespace flatsys::testing;

TEST_CASE("permutation basics") {
    Permutation p = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.cycle_type() == std::vector<int>{3, 2});
    CHECK(p.min_cycle_length() == 2);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), NotABijection);
}

TEST_CASE("composition convention: (f*g)(x) = f(g(x))") {
    Permutation f = Permutation::from_cycles(3, {{0, 1}});
    Permutation g = Permutation::from_cycles(3, {{1, 2}});
    CHECK((f * g)(1) == f(g(1)));
    CHECK((f * g)(1) == f(2));
}

TEST_CASE("L-origami commutator is a 3-cycle, stratum H(2)") {
    Origami L = l_origami();
    CHECK(L.degree() == 3);
    REQUIRE(L.singularities().size() == 1);
    CHECK(L.singularities()[0].cycle.size() == 3);
    CHECK(L.singularities()[0].order == 2);
    CHECK(L.stratum().orders == std::vector<int>{2});
    CHECK(L.genus() == 2);
    CHECK(L.singular_squares() == std::vector<int>{0, 1, 2});
}

TEST_CASE("torus has no singularities, genus 1") {
    Origami T = torus();
    CHECK(T.singularities().empty());
    CHECK(T.stratum().orders.empty());
    CHECK(T.genus() == 1);
    CHECK(T.stratum().to_string() == "H()");
}

TEST_CASE("15-square surface: two order-1 singularities") {
    Origami O = fifteen_square();
    REQUIRE(O.singularities().size() == 2);
    CHECK(O.singularities()[0].order == 1);
    CHECK(O.singularities()[1].order == 1);
    CHECK(O.stratum().orders == std::vector<int>{1, 1});
    CHECK(O.genus() == 2);
    // Commutator moves exactly squares {1,4} and {6,13} (1-based).
    CHECK(O.singular_squares() == std::vector<int>{0, 3, 5, 12});
}

TEST_CASE("30-square surface: H(1,1), genus 2") {
    Origami O = thirty_square();
    CHECK(O.degree() == 30);
    REQUIRE(O.singularities().size() == 2);
    CHECK(O.stratum().orders == std::vector<int>{1, 1});
    CHECK(O.genus() == 2);
}

TEST_CASE("disconnected pairs are rejected") {
    CHECK_THROWS_AS(parse_origami("a=(1,2) b=(1,2) on 3 squares"), Disconnected);
}

TEST_CASE("genus from Euler characteristic agrees with the order sum") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 11);
        Origami O = random_origami(n, rng, false);
        CHECK(O.genus() == O.genus_from_euler());
        int sum = 0;
        for (const auto& s : O.singularities()) sum += s.order;
        CHECK(sum == 2 * O.genus() - 2);
    }
}

TEST_CASE("singularity orders are relabeling invariants") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + static_cast<int>(rng() % 9);
        Origami O = random_origami(n, rng, false);
        Origami R = O.relabeled_by(random_permutation(n, rng));
        CHECK(O.stratum() == R.stratum());
        CHECK(O.is_isomorphic_to(R));
    }
}

TEST_CASE("connectivity agrees with union-find over the edge orbits") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        Permutation a = random_permutation(n, rng);
        Permutation b = random_permutation(n, rng);
        // union-find
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int i = 0; i < n; ++i) {
            parent[find(i)] = find(a(i));
            parent[find(i)] = find(b(i));
        }
        bool connected = true;
        for (int i = 0; i < n; ++i) connected &= find(i) == find(0);
        bool ctor_ok = true;
        try {
            Origami O(a, b);
        } catch (const Disconnected&) {
            ctor_ok = false;
        }
        CHECK(connected == ctor_ok);
    }
}

TEST_CASE("canonical form is constant on a conjugation class") {
    std::mt19937 rng(17);
    Origami L = l_origami();
    for (int iter = 0; iter < 20; ++iter) {
        Origami L2 = L.relabeled_by(random_permutation(3, rng));
        CHECK(L.canonical_form() == L2.canonical_form());
    }
    // Degree mismatch is never isomorphic.
    CHECK_FALSE(l_origami().is_isomorphic_to(torus()));
}
