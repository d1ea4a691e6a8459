#include <doctest.h>

#include "mainspectra/bounds.hpp"
#include "mainspectra/census.hpp"
#include "mainspectra/families.hpp"
#include "support.hpp"

using namespace mainspectra;

TEST_CASE("degree bound values") {
    for (int b = 1; b <= 6; ++b) {
        auto [lo1, hi1] = degree_bounds(1, b, 1);
        CHECK(lo1 == 0);
        CHECK(hi1 == 1 + b);
        auto [lo2, hi2] = degree_bounds(1, b, 2);
        CHECK(hi2 == b);
        CHECK(lo2 == 1);
    }
    auto [lo, hi] = degree_bounds(2, 0, 1);
    CHECK(hi == 3);
    CHECK(lo == 0);
    auto [l0, h0] = degree_bounds(0, 3, 1);
    CHECK(l0 == 1);
    CHECK(h0 == 3);
    CHECK_THROWS(degree_bounds(1, 2, 3));
    auto [ls, hs] = degree_bounds(1, 1, 1);
    CHECK(hs == 2);
    CHECK_FALSE(degree_bounds(3, 2, 1).second.is_rational());
}

TEST_CASE("maximum-degree bound") {
    CHECK(tang_hou_bound(2, 0) == 3);
    CHECK(tang_hou_bound(1, 4) == 5);
    CHECK_THROWS(tang_hou_bound(0, 2));
    for (int a = 1; a <= 8; ++a)
        for (int b = -12; b <= 12; ++b) {
            if (!is_feasible(a, b)) continue;
            CHECK(tang_hou_bound(a, b) == degree_bounds(a, b, 1).second);
        }
}

TEST_CASE("audit examples") {
    const auto k13 = audit_bounds(Graph::star(3));
    CHECK(k13.pair == MainPair{0, 3});
    CHECK(k13.ok());
    CHECK(k13.min_degree == 1);
    CHECK(k13.lower_bound_attained());
    CHECK(k13.upper_bound_attained());

    const auto p4 = audit_bounds(Graph::path(4));
    CHECK(p4.pair == MainPair{1, 1});
    CHECK(p4.ok());
    CHECK(p4.upper == 2);
    CHECK(p4.upper_bound_attained());

    const auto t2 = audit_bounds(t_tree(2));
    CHECK(t2.ok());
    CHECK(t2.upper == 3);
    CHECK(t2.upper_bound_attained());
    CHECK(t2.vertices[0].second_neighborhood_minimal);

    CHECK_THROWS(audit_bounds(Graph::cycle(5)));
}

TEST_CASE("audit holds on every connected two-main atlas graph") {
    int members = 0;
    for (const Graph& g : testing::atlas()) {
        if (!classify(g)) continue;
        ++members;
        const auto rep = audit_bounds(g);
        CHECK(rep.ok());
        CHECK_MESSAGE(rep.lower <= static_cast<std::int64_t>(rep.min_degree), write_graph6(g));
        CHECK(rep.upper >= static_cast<std::int64_t>(rep.max_degree));
    }
    CHECK(members == 54);
}

TEST_CASE("semi-regular bipartite detection") {
    CHECK(is_semiregular_bipartite(Graph::star(3)) == std::pair{3, 1});
    CHECK(is_semiregular_bipartite(Graph::cycle(6)) == std::pair{2, 2});
    CHECK_FALSE(is_semiregular_bipartite(Graph::path(4)));
    CHECK_FALSE(is_semiregular_bipartite(Graph::cycle(5)));
    CHECK_FALSE(is_semiregular_bipartite(Graph::empty(3)));
}
