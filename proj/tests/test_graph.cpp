#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plancage/families.hpp"
#include "plancage/graph.hpp"
#include "plancage/graph6.hpp"
#include "support/oracles.hpp"

using namespace plancage;

TEST_CASE("from_edge_list basics") {
    SimpleGraph tri = SimpleGraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(tri.order() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(girth(tri) == 3);

    // duplicate pairs collapse
    SimpleGraph dup = SimpleGraph::from_edge_list(4, {{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(SimpleGraph::from_edge_list(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph::from_edge_list(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(65), std::invalid_argument);
}

TEST_CASE("neighbor iteration is ascending") {
    SimpleGraph g = SimpleGraph::from_edge_list(5, {{3, 1}, {3, 4}, {3, 0}, {3, 2}});
    CHECK(g.neighbors(3) == std::vector<int>{0, 1, 2, 4});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}, {3, 4}});
}

TEST_CASE("degree profiles") {
    CHECK(degree_profile(families::wheel(5)) == DegreeProfile{{3, 5}, {5, 1}});
    SimpleGraph c7(7);
    for (int i = 0; i < 7; ++i) c7.add_edge(i, (i + 1) % 7);
    CHECK(degree_profile(c7) == DegreeProfile{{2, 7}});
    CHECK(degree_profile(families::family_I(6)) == DegreeProfile{{5, 12}, {6, 2}});
}

TEST_CASE("handshake identity on random graphs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        SimpleGraph g = oracles::random_graph(1 + static_cast<int>(rng() % 20), 0.3, rng);
        long long total = 0;
        for (const auto& [deg, count] : degree_profile(g)) total += 1LL * deg * count;
        CHECK(total == 2LL * g.edge_count());
    }
}

TEST_CASE("girth basics") {
    CHECK(girth(families::platonic("tetrahedron")) == 3);
    CHECK(girth(families::k2m(4)) == 4);
    SimpleGraph p4 = SimpleGraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(girth(p4).has_value());
    CHECK_FALSE(girth(SimpleGraph(0)).has_value());
}

TEST_CASE("girth equals cycle-enumeration oracle") {
    // exhaustive over all graphs on up to 6 vertices
    for (int n = 0; n <= 6; ++n) {
        const uint64_t limit = uint64_t{1} << oracles::pair_count(n);
        for (uint64_t mask = 0; mask < limit; ++mask) {
            SimpleGraph g = oracles::graph_from_pair_mask(n, mask);
            CHECK(girth(g) == oracles::girth_by_cycle_enumeration(g));
        }
    }
    // random graphs on up to 8 vertices
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        SimpleGraph g = oracles::random_graph(7 + static_cast<int>(rng() % 2), 0.25, rng);
        CHECK(girth(g) == oracles::girth_by_cycle_enumeration(g));
    }
}

TEST_CASE("biregular and regular predicates") {
    CHECK(is_biregular(families::family_I(6), 5, 6));
    SimpleGraph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK_FALSE(is_biregular(c5, 2, 3));
    CHECK(is_biregular(families::wheel(5), 3, 5));
    CHECK(is_regular(families::platonic("cube"), 3));
}

TEST_CASE("connectivity and components") {
    SimpleGraph two_tri(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})
        two_tri.add_edge(u, v);
    CHECK_FALSE(is_connected(two_tri));
    CHECK(components(two_tri).size() == 2);
    CHECK(components(two_tri)[0] == std::vector<int>{0, 1, 2});
    CHECK(is_connected(families::platonic("tetrahedron")));
    CHECK(components(SimpleGraph(0)).empty());
    CHECK(is_connected(SimpleGraph(0)));
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(encode_graph6(families::platonic("tetrahedron")) == "C~");
    CHECK(encode_graph6(SimpleGraph(1)) == "@");
    CHECK(decode_graph6("C~").edge_count() == 6);
    CHECK(decode_graph6("@").order() == 1);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = static_cast<int>(rng() % 21);
        SimpleGraph g = oracles::random_graph(n, 0.4, rng);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    // the documented cap
    SimpleGraph big(62);
    big.add_edge(0, 61);
    CHECK(decode_graph6(encode_graph6(big)) == big);
    CHECK_THROWS_AS(encode_graph6(SimpleGraph(63)), std::invalid_argument);
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("\x20"), ParseError);     // header below '?'
    CHECK_THROWS_AS(decode_graph6("C~~"), ParseError);      // trailing garbage
    CHECK_THROWS_AS(decode_graph6("C"), ParseError);        // truncated
    CHECK_THROWS_AS(decode_graph6("B\x7f"), ParseError);    // data byte out of range
    // n = 2 has one meaningful bit followed by five padding bits
    CHECK_THROWS_AS(decode_graph6("A@"), ParseError);       // nonzero padding
    CHECK(decode_graph6("A_").edge_count() == 1);
}

TEST_CASE("edge list text round trip") {
    SimpleGraph g = families::family_D(5);
    CHECK(decode_edge_list(encode_edge_list(g)) == g);
    CHECK_THROWS_AS(decode_edge_list(""), ParseError);
    CHECK_THROWS_AS(decode_edge_list("3\n0 0\n"), ParseError);
    CHECK_THROWS_AS(decode_edge_list("2\n0 1 junk\n"), ParseError);
}

TEST_CASE("dot output shape") {
    std::string dot = encode_dot(families::platonic("tetrahedron"));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
}
