#include <doctest.h>

#include <set>

#include "fixtures.hpp"

using namespace flatsys;
using namespace flatsys::testing;

namespace {

// Multiset of (steps, norm2) weights.
std::multiset<std::pair<int64_t, int64_t>> weights(const SaddleGraph& g) {
    std::multiset<std::pair<int64_t, int64_t>> out;
    for (const auto& e : g.edges) out.insert({e.steps, e.dir.norm2()});
    return out;
}

std::multiset<std::pair<int64_t, int64_t>> ms(std::initializer_list<std::pair<int64_t, int64_t>> v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("direction sets") {
    CHECK(direction_set_squared(1) == std::vector<Direction>{Direction(1, 0), Direction(0, 1)});
    CHECK(direction_set_squared(4) ==
          std::vector<Direction>{Direction(1, 0), Direction(1, 1), Direction(0, 1),
                                 Direction(-1, 1)});
    auto s3 = direction_set_squared(9);
    CHECK(s3.size() == 8);
    for (const Direction& d : {Direction(2, 1), Direction(1, 2), Direction(-1, 2),
                               Direction(-2, 1)})
        CHECK(std::count(s3.begin(), s3.end(), d) == 1);
}

TEST_CASE("15-square surface: the four direction graphs of the worked example") {
    Origami O = fifteen_square();
    CHECK(weights(horizontal_graph(O)) == ms({{1, 1}, {2, 1}, {3, 1}, {3, 1}}));
    CHECK(weights(trace_graph_in_direction(O, Direction(0, 1))) ==
          ms({{1, 1}, {2, 1}, {2, 1}, {4, 1}}));
    CHECK(weights(trace_graph_in_direction(O, Direction(1, 1))) ==
          ms({{3, 2}, {3, 2}, {4, 2}, {5, 2}}));
    CHECK(weights(trace_graph_in_direction(O, Direction(-1, 1))) ==
          ms({{2, 2}, {2, 2}, {3, 2}, {3, 2}}));
    // The (-1,1) graph is four loops; the (1,1) graph has loops of steps 3.
    for (const auto& e : trace_graph_in_direction(O, Direction(-1, 1)).edges)
        CHECK(e.from == e.to);
}

TEST_CASE("15-square union graph for l0 = 2 has the published 16 edges") {
    Origami O = fifteen_square();
    SaddleGraph g = union_graph(O, direction_set_squared(4));
    CHECK(g.edges.size() == 16);
    std::multiset<std::pair<int64_t, int64_t>> loops, links;
    for (const auto& e : g.edges)
        (e.from == e.to ? loops : links).insert({e.steps, e.dir.norm2()});
    CHECK(links == ms({{1, 1}, {1, 1}, {2, 1}, {2, 1}, {2, 1}, {4, 1}, {4, 2}, {5, 2}}));
    CHECK(loops == ms({{3, 1}, {3, 1}, {3, 2}, {3, 2}, {2, 2}, {2, 2}, {3, 2}, {3, 2}}));
}

TEST_CASE("L-origami horizontal graph: three unit loops at the unique vertex") {
    Origami L = l_origami();
    SaddleGraph g = horizontal_graph(L);
    CHECK(g.num_vertices == 1);
    CHECK(weights(g) == ms({{1, 1}, {1, 1}, {1, 1}}));
    for (const auto& e : g.edges) CHECK(e.from == e.to);
    // Tracing (1,0) reduces to the sigma_a-orbit walk.
    CHECK(same_weighted_multigraph(g, trace_graph_in_direction(L, Direction(1, 0))));
}

TEST_CASE("30-square surface: direction (1,4) contains the sqrt(17) loops") {
    Origami O = thirty_square();
    SaddleGraph g = trace_graph_in_direction(O, Direction(1, 4));
    int unit_loops = 0;
    for (const auto& e : g.edges)
        if (e.from == e.to && e.steps == 1) ++unit_loops;
    CHECK(unit_loops == 2);
    CHECK(Length::radical(1, 17).squared() == Length::integer(17));
}

TEST_CASE("graphs need a cone point") {
    CHECK_THROWS_AS(horizontal_graph(torus()), NoSingularities);
    CHECK_THROWS_AS(trace_graph_in_direction(torus(), Direction(1, 1)), NoSingularities);
}

TEST_CASE("edge count equals the singular-corner count in every direction") {
    std::mt19937 rng(37);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 3 + static_cast<int>(rng() % 8);
        Origami O = random_origami(n, rng);
        for (const Direction& v : direction_set_squared(8))
            CHECK(trace_graph_in_direction(O, v).edges.size() == O.singular_squares().size());
    }
}

TEST_CASE("horizontal weights sum to the number of squares on singular rows") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 80; ++iter) {
        int n = 3 + static_cast<int>(rng() % 9);
        Origami O = random_origami(n, rng);
        // Mark sigma_a-orbits of singular squares.
        std::vector<char> marked(n, 0);
        for (int i : O.singular_squares()) {
            int j = i;
            while (!marked[j]) {
                marked[j] = 1;
                j = O.sigma_a()(j);
            }
        }
        int64_t expected = std::count(marked.begin(), marked.end(), char(1));
        int64_t total = 0;
        for (const auto& e : horizontal_graph(O).edges) total += e.steps;
        CHECK(total == expected);
    }
}

TEST_CASE("tracer and SL2 route agree on random surfaces (spot check)") {
    std::mt19937 rng(43);
    auto dirs = direction_set_squared(25);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        Origami O = random_origami(n, rng);
        for (const Direction& v : dirs)
            CHECK(same_weighted_multigraph(graph_in_direction(O, v),
                                           trace_graph_in_direction(O, v)));
    }
}

TEST_CASE("acting by the direction matrix turns diagonal graphs horizontal") {
    // act(T, L) has the same horizontal multiset as the (1,1) graph of L up
    // to the sqrt(2) rescaling encoded in the direction.
    Origami L = l_origami();
    Mat2 A = matrix_for_direction(Direction(1, 1));
    SaddleGraph diag = trace_graph_in_direction(L, Direction(1, 1));
    SaddleGraph horiz = horizontal_graph(act(A, L));
    std::multiset<int64_t> d1, d2;
    for (const auto& e : diag.edges) d1.insert(e.steps);
    for (const auto& e : horiz.edges) d2.insert(e.steps);
    CHECK(d1 == d2);
    for (const auto& e : diag.edges) CHECK(e.dir.norm2() == 2);
}
