#include <doctest.h>

#include <algorithm>

#include "mainspectra/claims.hpp"
#include "mainspectra/families.hpp"

using namespace mainspectra;

namespace {

const Census& census7() {
    static const Census c = Census::build(ClaimScope{7, 1, {}});
    return c;
}

}  // namespace

TEST_CASE("population") {
    const Census& c = census7();
    CHECK(c.records().size() == 54);
    CHECK(c.max_n() == 7);
    CHECK(c.scope_text().find("n<=7") != std::string::npos);
    CHECK(c.scope_text().find("54 classes") != std::string::npos);

    const Census with_extra = Census::build(ClaimScope{5, 1, {family_b15(3).graph, Graph::path(4), Graph::cycle(9)}});
    CHECK(with_extra.extra_count() == 1);
    CHECK(with_extra.scope_text().find("1 ingested") != std::string::npos);
}

TEST_CASE("every claim passes on the order-seven census") {
    for (const auto& id : claim_ids()) {
        const auto rep = verify_claim(id, census7());
        CHECK_MESSAGE(rep.pass, id << ": " << rep.detail);
        CHECK(rep.claim == id);
        if (id == "feasibility-sufficiency") continue;
        CHECK(rep.counterexamples.empty());
        CHECK(rep.scope.find("n<=7") != std::string::npos);
    }
}

TEST_CASE("class lists") {
    const auto g20 = verify_claim("g20", census7());
    CHECK(g20.members == std::vector<std::string>{canonical_key(t_tree(2))});
    const auto g11 = verify_claim("g11", census7());
    CHECK(g11.members == std::vector<std::string>{canonical_key(Graph::path(4))});
    const auto g12 = verify_claim("g12", census7());
    CHECK(g12.members == std::vector<std::string>{canonical_key(double_star(2, 2))});
    const auto g14 = verify_claim("g14", census7());
    CHECK(std::find(g14.members.begin(), g14.members.end(), canonical_key(family_a(1, 4).graph)) != g14.members.end());
}

TEST_CASE("extra members reach the claims") {
    const Census c = Census::build(ClaimScope{6, 1, {family_b15(3).graph, family_b15(4).graph}});
    const auto g15 = verify_claim("g15", c);
    CHECK(g15.pass);
    CHECK(g15.members.size() == 2);
    const auto boundary = verify_claim("boundary-cells", c);
    CHECK(boundary.pass);
}

TEST_CASE("helpers") {
    CHECK(has_one_ij_partition(family_a(1, 4).graph, 4));
    CHECK(has_one_ij_partition(double_star(3, 3), 3));
    CHECK_FALSE(has_one_ij_partition(double_star(3, 3), 4));
    CHECK_FALSE(has_one_ij_partition(Graph::star(3), 3));
    CHECK(matches_b15_pattern(family_b15(5).graph));
    CHECK_FALSE(matches_b15_pattern(Graph::path(4)));
    for (const Graph& g : semiregular_bipartite_graphs(7)) {
        CHECK(is_connected(g));
        CHECK(two_main_signature(g).two_main());
    }
    CHECK(semiregular_bipartite_graphs(4).size() == 2);
}

TEST_CASE("unknown claims are rejected") {
    CHECK_THROWS_AS(verify_claim("nope", census7()), Error);
    CHECK(std::find(claim_ids().begin(), claim_ids().end(), "g13") != claim_ids().end());
}
