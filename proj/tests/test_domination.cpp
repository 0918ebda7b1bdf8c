#include <doctest.h>

#include "girthguard/domination.hpp"
#include "girthguard/generators.hpp"
#include "girthguard/graph.hpp"
#include "testsupport.hpp"

namespace gg = girthguard;

TEST_CASE("is_dominating") {
    gg::Graph c7 = gg::gen_cycle(7);
    CHECK(gg::is_dominating(c7, {0, 2, 4}));
    CHECK_FALSE(gg::is_dominating(c7, {0}));  // vertex 3 undominated
    CHECK(gg::is_dominating(gg::gen_star(3), {0}));
    CHECK_THROWS_AS(gg::is_dominating(c7, {7}), std::invalid_argument);

    CHECK(gg::is_dominating(gg::Graph::from_edges(0, {}), {}));
    CHECK_FALSE(gg::is_dominating(gg::Graph::from_edges(1, {}), {}));
}

TEST_CASE("greedy_upper_bound") {
    CHECK(gg::greedy_upper_bound(gg::gen_star(5)).members == std::vector<int>{0});

    auto c7 = gg::greedy_upper_bound(gg::gen_cycle(7));
    CHECK(c7.size() <= 3);  // gamma(C7) = 3, greedy must not trail the optimum here
    CHECK(gg::is_dominating(gg::gen_cycle(7), c7.members));
    CHECK(c7.members == std::vector<int>{0, 3, 4});  // lowest-id ties, frozen
    CHECK_FALSE(c7.verified_minimum);

    CHECK(gg::greedy_upper_bound(gg::Graph::from_edges(4, {})).members ==
          std::vector<int>{0, 1, 2, 3});

    SUBCASE("result always dominates") {
        for (uint64_t seed = 1; seed <= 25; ++seed) {
            gg::Graph g = testsupport::random_connected_graph(11, seed);
            CHECK(gg::is_dominating(g, gg::greedy_upper_bound(g).members));
        }
    }
}

TEST_CASE("gamma_brute on the fixture graphs") {
    auto c7 = gg::gamma_brute(gg::gen_cycle(7));
    CHECK(c7.size() == 3);
    CHECK(c7.verified_minimum);
    CHECK(c7.members == std::vector<int>{0, 1, 4});  // lexicographically first witness

    auto star = gg::gamma_brute(gg::gen_star(5));
    CHECK(star.size() == 1);
    CHECK(star.members == std::vector<int>{0});

    CHECK(gg::gamma_brute(gg::gen_path(7)).size() == 3);
    CHECK(gg::gamma_brute(gg::Graph::from_edges(0, {})).size() == 0);
}

TEST_CASE("gamma_brute guards") {
    CHECK_THROWS_AS(gg::gamma_brute(gg::gen_cycle(21)), std::invalid_argument);
    CHECK_NOTHROW(gg::gamma_brute(gg::gen_cycle(21), 7, 30));  // relaxed guard
    CHECK_THROWS_AS(gg::gamma_brute(gg::gen_cycle(7), 0), std::invalid_argument);
    // cap below gamma: nothing found
    CHECK_THROWS_AS(gg::gamma_brute(gg::gen_cycle(7), 2), std::runtime_error);
}

TEST_CASE("gamma_exact on the fixture graphs") {
    CHECK(gg::gamma_exact(gg::gen_cycle(12)).size() == 4);
    CHECK(gg::gamma_exact(gg::gen_cycle(9)).size() == 3);

    gg::Graph mcgee = gg::gen_cage(gg::CageName::McGee);
    auto cert = gg::gamma_exact(mcgee);
    CHECK(cert.size() >= 7);  // (3+sqrt(105))/2 rounds up to 7
    CHECK(cert.verified_minimum);
    CHECK(gg::is_dominating(mcgee, cert.members));
}

TEST_CASE("gamma_exact handles degenerate graphs") {
    CHECK(gg::gamma_exact(gg::Graph::from_edges(0, {})).size() == 0);
    CHECK(gg::gamma_exact(gg::Graph::from_edges(1, {})).size() == 1);
    CHECK(gg::gamma_exact(gg::Graph::from_edges(5, {})).size() == 5);

    gg::Graph two_triangles =
        gg::Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(gg::gamma_exact(two_triangles).size() == 2);
}

TEST_CASE("gamma_exact equals gamma_brute on a seeded corpus") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        gg::Graph g = testsupport::random_connected_graph(5 + static_cast<int>(seed % 10), seed);
        auto brute = gg::gamma_brute(g);
        auto exact = gg::gamma_exact(g);
        REQUIRE(brute.size() == exact.size());
        CHECK(gg::is_dominating(g, exact.members));
        CHECK(exact.verified_minimum);
    }
}

TEST_CASE("gamma_exact cycle law: ceil(n/3)") {
    for (int n = 3; n <= 30; ++n) CHECK(gg::gamma_exact(gg::gen_cycle(n)).size() == (n + 2) / 3);
}

TEST_CASE("gamma is 1 exactly on universal-vertex graphs") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        gg::Graph g = testsupport::random_connected_graph(8, seed);
        bool universal = gg::structure_summary(g).has_universal_vertex;
        CHECK((gg::gamma_exact(g).size() == 1) == universal);
    }
}

TEST_CASE("greedy never beats the exact solver") {
    for (uint64_t seed = 31; seed <= 60; ++seed) {
        gg::Graph g = testsupport::random_connected_graph(10, seed);
        auto greedy = gg::greedy_upper_bound(g);
        auto exact = gg::gamma_exact(g);
        CHECK(greedy.size() >= exact.size());
        CHECK(gg::is_dominating(g, greedy.members));
        CHECK(gg::is_dominating(g, exact.members));
    }
}
