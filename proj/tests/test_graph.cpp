#include <doctest.h>

#include <numeric>
#include <random>

#include "mainspectra/families.hpp"
#include "mainspectra/graph.hpp"
#include "support.hpp"

using namespace mainspectra;

namespace {

Graph edges(int n, std::vector<std::pair<int, int>> e) { return Graph::from_edges(n, e); }

}  // namespace

TEST_CASE("graph6 decodes the fixed examples") {
    CHECK(parse_graph6("C~") == Graph::complete(4));
    CHECK(parse_graph6("A_") == Graph::complete(2));
    CHECK(parse_graph6("A?") == Graph::empty(2));
    CHECK(parse_graph6("@") == Graph::empty(1));
    // reference edge list from networkx.from_graph6_bytes
    CHECK(parse_graph6("DQc") == edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
    CHECK(write_graph6(parse_graph6("DQc")) == "DQc");
    CHECK(parse_graph6("C~\n") == Graph::complete(4));
    CHECK(parse_graph6("C~\r\n") == Graph::complete(4));
}

TEST_CASE("graph6 encodes small graphs") {
    CHECK(write_graph6(Graph::complete(2)) == "A_");
    CHECK(write_graph6(Graph::empty(1)) == "@");
    CHECK(write_graph6(Graph::complete(4)) == "C~");
    CHECK(write_graph6(Graph::empty(0)) == "?");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("A`"), Graph6Error);  // padding bit set
    CHECK_THROWS_AS(parse_graph6("C }"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~?Ck"), Graph6Error);  // n = 300 beyond the cap
    CHECK_THROWS_AS(parse_graph6("~??^"), Graph6Error);  // four-byte header for n = 31
}

TEST_CASE("graph6 round-trips random labeled graphs") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> order(0, 90);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = trial < 200 ? 63 + trial % 20 : order(rng);
        const double p = unit(rng);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p) b.add_edge(u, v);
        const Graph g = b.build();
        const std::string s = write_graph6(g);
        REQUIRE(parse_graph6(s) == g);
        if (n > 62) CHECK(s[0] == '~');
    }
}

TEST_CASE("graph validation") {
    using Row = Graph::Row;
    CHECK_THROWS_AS(Graph(2, {Row::single(1), Row{}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(1, {Row::single(0)}), InvalidGraph);
    CHECK_THROWS_AS(Graph(2, {Row::single(5), Row{}}), InvalidGraph);
    CHECK_THROWS_AS(GraphBuilder(3).add_edge(1, 1), InvalidGraph);
    CHECK_THROWS_AS(GraphBuilder(3).add_edge(0, 3), InvalidGraph);
    CHECK_THROWS_AS(GraphBuilder(kMaxVertices + 1), InvalidGraph);
    CHECK(Graph::path(4).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("relabeling") {
    const Graph p = Graph::path(4);
    const std::vector<int> perm{2, 0, 3, 1};
    const Graph q = p.relabeled(perm);
    for (auto [u, v] : p.edges()) CHECK(q.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
    CHECK(q.size() == 3);
}

TEST_CASE("vertex sets past one word") {
    VertexSet s;
    s.set(3);
    s.set(64);
    s.set(200);
    CHECK(s.count() == 3);
    CHECK(std::vector<int>(s.begin(), s.end()) == std::vector<int>{3, 64, 200});
    CHECK(s.next_from(65) == 200);
    CHECK(VertexSet::range(130).count() == 130);
    CHECK((VertexSet::range(130).minus(VertexSet::range(64))).lowest() == 64);
    const Graph c = Graph::cycle(150);
    CHECK(is_connected(c));
    CHECK(c.neighbors(149) == std::vector<int>{0, 148});
}

TEST_CASE("degree profiles") {
    auto p = degree_profile(Graph::path(4));
    CHECK(p.degrees == std::vector<int>{1, 2, 2, 1});
    CHECK(p.min_degree == 1);
    CHECK(p.max_degree == 2);
    CHECK(p.mean == Rational(3, 2));

    auto s = degree_profile(Graph::star(3));
    CHECK(s.degrees == std::vector<int>{3, 1, 1, 1});
    CHECK(s.mean == Rational(3, 2));

    auto t = degree_profile(t_tree(2));
    std::vector<int> d = t.degrees;
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 1, 1, 2, 2, 2, 3});

    for (const Graph& g : testing::atlas()) {
        auto prof = degree_profile(g);
        CHECK(std::accumulate(prof.degrees.begin(), prof.degrees.end(), 0) == 2 * g.size());
        CHECK(prof.mean * g.order() == Rational(2 * g.size()));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(Graph::path(4)));
    CHECK_FALSE(is_connected(Graph::empty(2)));
    CHECK(is_connected(construct_two_cell(1, 2, 1, 1).graph));
    CHECK(is_connected(Graph::empty(1)));
}

TEST_CASE("circulants") {
    const std::vector<int> c5{1, 4};
    CHECK(circulant(5, c5) == Graph::cycle(5));
    const std::vector<int> k4{1, 2, 3};
    CHECK(circulant(4, k4) == Graph::complete(4));
    const std::vector<int> prism{1, 5, 3};
    const Graph g = circulant(6, prism);
    CHECK(is_connected(g));
    for (int v = 0; v < 6; ++v) {
        CHECK(g.degree(v) == 3);
        for (int w = 0; w < 6; ++w) CHECK(g.adjacent(v, w) == g.adjacent(0, ((w - v) % 6 + 6) % 6));
    }
    const std::vector<int> bad{1};
    CHECK_THROWS_AS(circulant(5, bad), InvalidGraph);
    const std::vector<int> zero{0};
    CHECK_THROWS_AS(circulant(5, zero), InvalidGraph);
}
