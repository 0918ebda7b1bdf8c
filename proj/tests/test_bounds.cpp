#include <doctest.h>

#include <cmath>

#include "girthguard/bounds.hpp"
#include "girthguard/domination.hpp"
#include "girthguard/generators.hpp"

namespace gg = girthguard;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("bound_general_g7 formula values") {
    CHECK(gg::bound_general_g7(7, 7) == doctest::Approx(3.0).epsilon(kTol));
    CHECK(gg::bound_general_g7(10, 9) == doctest::Approx(2.0).epsilon(kTol));  // any tree
    CHECK(gg::bound_general_g7(24, 36) == doctest::Approx(6.623475382979799).epsilon(kTol));
    CHECK_THROWS_AS(gg::bound_general_g7(10, 7), std::invalid_argument);  // radicand < 0
}

TEST_CASE("bound_general_g7 grows with m and stays above 2") {
    for (int m = 7; m < 40; ++m)
        CHECK(gg::bound_general_g7(7, m + 1) > gg::bound_general_g7(7, m));
    for (int n = 2; n <= 40; ++n)
        for (int m = n; m <= n + 20; ++m) CHECK(gg::bound_general_g7(n, m) >= 2.0);
}

TEST_CASE("bound_mindeg2_g7 formula values") {
    CHECK(gg::bound_mindeg2_g7(9, 9) == doctest::Approx(3.0).epsilon(kTol));
    CHECK(gg::bound_mindeg2_g7(7, 7) == doctest::Approx(2.6457513110645907).epsilon(kTol));
    CHECK(gg::bound_mindeg2_g7(24, 36) == doctest::Approx(4.898979485566356).epsilon(kTol));
}

TEST_CASE("lemma1_max_edges") {
    auto c7 = gg::lemma1_max_edges(7, 7);
    CHECK(c7.stated == doctest::Approx(49.0 / 6.0).epsilon(kTol));
    CHECK(c7.derived == doctest::Approx(7.0).epsilon(kTol));  // C7 meets it exactly

    auto petersen = gg::lemma1_max_edges(10, 5);
    CHECK(petersen.stated == doctest::Approx(25.0).epsilon(kTol));
    CHECK(petersen.derived == doctest::Approx(22.5).epsilon(kTol));
    CHECK(gg::gen_cage(gg::CageName::Petersen).m() == 15);  // within both

    auto lonely = gg::lemma1_max_edges(1, 9);
    CHECK(lonely.stated == doctest::Approx(1.0 / 8.0).epsilon(kTol));
    CHECK(lonely.derived == doctest::Approx(0.0).epsilon(kTol));

    CHECK_THROWS_AS(gg::lemma1_max_edges(5, 2), std::invalid_argument);

    SUBCASE("derived never exceeds stated") {
        for (int n = 1; n <= 30; ++n)
            for (int g = 3; g <= 15; ++g) {
                auto lim = gg::lemma1_max_edges(n, g);
                CHECK(lim.derived <= lim.stated + kTol);
            }
    }
}

TEST_CASE("bound_girth12 formula values") {
    CHECK(gg::bound_girth12(12, 12, 12) == doctest::Approx(3.4641016151377544).epsilon(kTol));
    CHECK(gg::bound_girth12(15, 15, 15) == doctest::Approx(4.47213595499958).epsilon(kTol));
    // Petersen subdivided twice per edge: n=40, m=45, girth 15
    CHECK(gg::bound_girth12(40, 45, 15) == doctest::Approx(7.745966692414834).epsilon(kTol));
    CHECK_THROWS_AS(gg::bound_girth12(12, 12, 11), std::invalid_argument);
}

TEST_CASE("bound_girth12_triangle_free formula values") {
    CHECK(gg::bound_girth12_triangle_free(12, 12, 12) == doctest::Approx(4.0).epsilon(kTol));
    CHECK(gg::gamma_exact(gg::gen_cycle(12)).size() == 4);  // tight on C12
    CHECK(gg::bound_girth12_triangle_free(13, 13, 13) ==
          doctest::Approx(4.163331998932265).epsilon(kTol));
    CHECK(gg::gamma_exact(gg::gen_cycle(13)).size() == 5);
    CHECK_THROWS_AS(gg::bound_girth12_triangle_free(12, 12, 15), std::invalid_argument);
    CHECK_THROWS_AS(gg::bound_girth12_triangle_free(12, 12, 11), std::invalid_argument);

    SUBCASE("refinement dominates the plain girth-12 bound on 12..14") {
        for (int g = 12; g <= 14; ++g)
            for (int n = g; n <= 30; ++n)
                for (int m = n; m <= n + 10; ++m)
                    CHECK(gg::bound_girth12_triangle_free(n, m, g) >=
                          gg::bound_girth12(n, m, g) - kTol);
    }
}

TEST_CASE("integer_strengthening") {
    CHECK(gg::integer_strengthening(3.0) == 3);
    CHECK(gg::integer_strengthening(6.623475382979799) == 7);
    CHECK(gg::integer_strengthening(2.9999999999) == 3);
    CHECK(gg::integer_strengthening(0.0) == 0);
}

TEST_CASE("evaluate_all applicability gates") {
    SUBCASE("Petersen: girth 5 keeps every gamma bound out, lemma1 holds") {
        auto r = gg::evaluate_all(gg::gen_cage(gg::CageName::Petersen));
        CHECK_FALSE(r.general_g7.applicable);
        CHECK_FALSE(r.mindeg2_g7.applicable);
        CHECK_FALSE(r.girth12.applicable);
        CHECK_FALSE(r.girth12_tf.applicable);
        REQUIRE(r.lemma1.applicable);
        CHECK(*r.lemma1.valid);
    }

    SUBCASE("C7 with gamma: general bound tight, mindeg2 slack") {
        auto r = gg::evaluate_all(gg::gen_cycle(7), 3);
        REQUIRE(r.general_g7.applicable);
        CHECK(*r.general_g7.value == doctest::Approx(3.0).epsilon(kTol));
        CHECK(std::abs(*r.general_g7.slack) <= kTol);
        CHECK(*r.general_g7.valid);
        REQUIRE(r.mindeg2_g7.applicable);
        CHECK(*r.mindeg2_g7.value == doctest::Approx(2.6457513110645907).epsilon(kTol));
        CHECK(*r.mindeg2_g7.slack == doctest::Approx(3 - 2.6457513110645907).epsilon(1e-6));
        CHECK_FALSE(r.girth12.applicable);
    }

    SUBCASE("stars are the gamma-1 case, nothing applies") {
        auto r = gg::evaluate_all(gg::gen_star(9));
        CHECK(r.is_star);
        CHECK(r.has_universal_vertex);
        CHECK_FALSE(r.general_g7.applicable);
        CHECK_FALSE(r.mindeg2_g7.applicable);
        CHECK_FALSE(r.girth12.applicable);
        CHECK_FALSE(r.girth12_tf.applicable);
        CHECK(r.lemma1.vacuous);
    }

    SUBCASE("non-star trees get the general bound vacuously via acyclic girth") {
        auto r = gg::evaluate_all(gg::gen_path(4), 2);
        CHECK(r.girth.is_acyclic());
        REQUIRE(r.general_g7.applicable);
        CHECK(*r.general_g7.value == doctest::Approx(2.0).epsilon(kTol));
        CHECK(*r.general_g7.valid);
        CHECK(r.lemma1.vacuous);
        CHECK(*r.lemma1.valid);
    }

    SUBCASE("girth 12 cycles activate the whole ladder") {
        auto r = gg::evaluate_all(gg::gen_cycle(12), 4);
        CHECK(r.l == 4);
        CHECK(r.general_g7.applicable);
        CHECK(r.mindeg2_g7.applicable);
        CHECK(r.girth12.applicable);
        CHECK(r.girth12_tf.applicable);
        CHECK(std::abs(*r.girth12_tf.slack) <= kTol);  // the refinement is tight on C12
    }

    SUBCASE("girth 15 drops only the triangle-free refinement") {
        auto r = gg::evaluate_all(gg::gen_cycle(15), 5);
        CHECK(r.girth12.applicable);
        CHECK_FALSE(r.girth12_tf.applicable);
        CHECK(*r.girth12.valid);
    }

    SUBCASE("disconnected graphs get no gamma bounds") {
        gg::Graph two = gg::Graph::from_edges(14, [] {
            std::vector<gg::Edge> edges;
            for (int i = 0; i < 7; ++i) edges.push_back(gg::make_edge(i, (i + 1) % 7));
            for (int i = 0; i < 7; ++i) edges.push_back(gg::make_edge(7 + i, 7 + (i + 1) % 7));
            return edges;
        }());
        auto r = gg::evaluate_all(two);
        CHECK_FALSE(r.connected);
        CHECK_FALSE(r.general_g7.applicable);
        CHECK_FALSE(r.mindeg2_g7.applicable);
        CHECK(r.lemma1.applicable);
    }
}

TEST_CASE("bound_report_to_json carries the fixed schema") {
    auto text = gg::bound_report_to_json(gg::evaluate_all(gg::gen_cycle(12), 4));
    for (const char* key : {"\"n\"", "\"m\"", "\"girth\"", "\"min_degree\"", "\"connected\"",
                            "\"is_star\"", "\"gamma\"", "\"bounds\"", "\"general_g7\"",
                            "\"mindeg2_g7\"", "\"girth12\"", "\"girth12_tf\"", "\"lemma1\"",
                            "\"applicable\"", "\"value\"", "\"ceil_value\"", "\"slack\"",
                            "\"valid\"", "\"derived_value\""})
        CHECK(text.find(key) != std::string::npos);

    auto acyclic = gg::bound_report_to_json(gg::evaluate_all(gg::gen_path(5)));
    CHECK(acyclic.find("\"girth\": \"acyclic\"") != std::string::npos);
}
