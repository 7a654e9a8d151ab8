#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plancage/bounds.hpp"
#include "plancage/families.hpp"

using namespace plancage;

TEST_CASE("moore bound for biregular prescriptions") {
    for (int m = 3; m <= 12; ++m) {
        CHECK(moore_biregular(2, m, 5) == 2 * m + 1);
        CHECK(moore_biregular(2, m, 4) == m + 2);
        if (m >= 4) CHECK(moore_biregular(3, m, 3) == m + 1);
    }
    CHECK(moore_biregular(3, 7, 4) == 7 + 3);       // 1 + m + (r-1)
    CHECK(moore_biregular(3, 7, 5) == 3 * 7 + 1);   // 1 + m + m(r-1)
    CHECK(moore_biregular(2, 9, 7) == 3 * 9 + 1);   // paths of length 3 from the root
    CHECK_THROWS_AS(moore_biregular(3, 3, 5), std::invalid_argument);
}

TEST_CASE("exact orders for degree set {2,m}") {
    CHECK(chartrand_2m_exact(4, 6) == 10);
    CHECK(chartrand_2m_exact(4, 5) == 9);
    CHECK(chartrand_2m_exact(3, 3) == 4);
    CHECK(chartrand_2m_exact(7, 9) == 29);
    CHECK_THROWS_AS(chartrand_2m_exact(2, 5), std::invalid_argument);
}

TEST_CASE("exact girth-4 order r+m") {
    CHECK(chartrand_girth4(2, 5) == 7);
    CHECK(chartrand_girth4(3, 4) == 7);
    CHECK(chartrand_girth4(2, 3) == 5);
}

TEST_CASE("regular feasibility and cage orders") {
    CHECK(regular_feasible(3, 5));
    CHECK(regular_cage_order(3, 5) == 20);
    CHECK(regular_cage_order(5, 3) == 12);
    CHECK(regular_cage_order(3, 3) == 4);
    CHECK(regular_cage_order(3, 4) == 8);
    CHECK(regular_cage_order(4, 3) == 6);
    CHECK_FALSE(regular_feasible(4, 4));
    CHECK_FALSE(regular_feasible(5, 4));
    CHECK_FALSE(regular_feasible(6, 3));
    CHECK(regular_feasible(2, 11));
    CHECK(regular_cage_order(2, 11) == 11);
    CHECK_THROWS_AS(regular_cage_order(4, 4), std::invalid_argument);
}

TEST_CASE("biregular feasibility matches the four enumerated sets") {
    CHECK(biregular_feasible(4, 7, 3));
    CHECK_FALSE(biregular_feasible(4, 5, 4));
    CHECK(biregular_feasible(2, 9, 11));
    for (int r = 2; r <= 6; ++r)
        for (int m = r + 1; m <= 20; ++m)
            for (int g = 3; g <= 15; ++g) {
                bool enumerated = (g == 3 && r <= 5) || (g == 4 && r <= 3) ||
                                  (g == 5 && r <= 3) || (g >= 6 && r == 2);
                CHECK(biregular_feasible(r, m, g) == enumerated);
            }
}

TEST_CASE("euler degree inequality") {
    // the windmill split: y = m of degree 2, one hub
    for (int m = 4; m <= 16; m += 2) CHECK(euler_degree_inequality(m, 1, 2, m, 3));
    CHECK_FALSE(euler_degree_inequality(3, 3, 2, 9, 12));
    // every family instance satisfies it with its actual split
    auto check_family = [](const SimpleGraph& g, int r, int m, int gi) {
        auto prof = degree_profile(g);
        CHECK(euler_degree_inequality(prof[r], prof[m], r, m, gi));
    };
    check_family(families::family_I(7), 5, 7, 3);
    check_family(families::family_D(9), 3, 9, 4);
    check_family(families::family_P(5), 3, 5, 5);
    check_family(families::family_O(6, 8), 2, 6, 8);
    check_family(families::wheel(8), 3, 8, 3);
    check_family(families::k2m(11), 2, 11, 4);
}

TEST_CASE("general lower bound rows") {
    for (int m = 6; m <= 20; ++m) CHECK(general_lower_bound(5, m, 3) == m + 7);
    for (int m = 4; m <= 20; ++m) CHECK(general_lower_bound(3, m, 5) == 3 * m + 11);
    for (int m = 4; m <= 20; ++m) CHECK(general_lower_bound(3, m, 4) == m + 5);
    CHECK_THROWS_AS(general_lower_bound(4, 9, 4), std::invalid_argument);
}

TEST_CASE("refined girth-4 lower bound") {
    CHECK(girth4_refined_lower(13) == 28);
    CHECK(girth4_refined_lower(14) == 29);
    CHECK(girth4_refined_lower(16) == 33);
    CHECK(girth4_refined_lower(4) == 10);
    CHECK_THROWS_AS(girth4_refined_lower(3), std::invalid_argument);
}

TEST_CASE("link lower bound") {
    for (long long m = 4; m <= 20; ++m) CHECK(link_lower_bound(m, 1, 1, 1) == 2 * m + 2);
    CHECK(link_lower_bound(14, 3, 1, 2) == 29);
    CHECK(link_lower_bound(9, 0, 0, 0) == 19);
}

TEST_CASE("planar lower bound report") {
    for (int m = 5; m <= 20; ++m) {
        BoundReport rep = planar_lower_bound(4, m, 3);
        CHECK(rep.lower == std::max<long long>(m + 1, (m + 1) / 2 + 4));
    }
    CHECK(planar_lower_bound(2, 9, 3).lower == 10);
    CHECK(planar_lower_bound(2, 6, 8).lower == (6 * 6 + 4) / 2);
    CHECK(planar_lower_bound(2, 7, 9).lower == (7 * 8 + 2) / 2);
    // provenance mentions every contributing source
    BoundReport rep = planar_lower_bound(3, 8, 4);
    CHECK(rep.lower == girth4_refined_lower(8));
    bool has_refinement = false;
    for (const auto& s : rep.provenance) has_refinement |= (s.source == "link_refinement");
    CHECK(has_refinement);
}

TEST_CASE("known bounds table rows") {
    {
        BoundReport rep = known_bounds_table(5, 6, 3);
        CHECK(rep.exact);
        CHECK(rep.lower == 14);
        CHECK(rep.upper == 14);
    }
    {
        BoundReport rep = known_bounds_table(3, 14, 4);
        CHECK(rep.exact);
        CHECK(rep.lower == 29);
        CHECK(rep.upper == 29);
    }
    {
        BoundReport rep = known_bounds_table(2, 7, 9);
        CHECK(rep.exact);
        CHECK(rep.lower == 29);
    }
    {
        BoundReport rep = known_bounds_table(5, 9, 3);
        CHECK_FALSE(rep.exact);
        CHECK(rep.lower == 16);
        CHECK(rep.upper == 20);
    }
    {
        BoundReport rep = known_bounds_table(3, 4, 5);
        CHECK(rep.lower == 23);
        CHECK(rep.upper == 26);
    }
    CHECK_THROWS_AS(known_bounds_table(4, 6, 4), std::invalid_argument);
}

TEST_CASE("no crossing bounds for any feasible triplet") {
    for (int r = 2; r <= 5; ++r)
        for (int m = r + 1; m <= 20; ++m)
            for (int g = 3; g <= 12; ++g) {
                if (!biregular_feasible(r, m, g)) continue;
                BoundReport rep = known_bounds_table(r, m, g);
                CHECK(planar_lower_bound(r, m, g).lower <= rep.lower);
                REQUIRE(rep.upper.has_value());
                CHECK(rep.lower <= *rep.upper);
            }
}

TEST_CASE("two-pole family order matches the exact two-degree value") {
    for (int g = 3; g <= 12; ++g)
        for (int m = 3; m <= 10; ++m) {
            long long order = static_cast<long long>(m - 1) * ((g - 1) / 2) + (g - 2) / 2 + 2;
            CHECK(order == chartrand_2m_exact(m, g));
        }
}

TEST_CASE("planar girth edge cap") {
    CHECK(max_edges_planar_girth(13, 3) == 33);
    CHECK(max_edges_planar_girth(12, 4) == 20);
    CHECK(max_edges_planar_girth(13, 7) == 15);
    CHECK(max_edges_planar_girth(2, 5) == 1);
    CHECK(max_edges_planar_girth(4, 5) == 3);  // too small for a cycle: forest cap
}

TEST_CASE("feasible degree-m counts") {
    CHECK(feasible_degree_m_counts(5, 6, 3, 13) == std::vector<int>{1});
    CHECK(feasible_degree_m_counts(5, 7, 3, 15).empty());
    CHECK(feasible_degree_m_counts(2, 3, 3, 3).empty());
    CHECK(feasible_degree_m_counts(5, 7, 3, 14) == std::vector<int>{1});
    auto xs24 = feasible_degree_m_counts(2, 4, 7, 13);
    CHECK(xs24 == std::vector<int>{1, 2});
}
