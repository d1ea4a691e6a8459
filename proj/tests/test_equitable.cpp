#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>

#include "mainspectra/equitable.hpp"
#include "mainspectra/families.hpp"
#include "support.hpp"

using namespace mainspectra;

namespace {

using Cells = std::vector<std::vector<int>>;

QuotientMatrix three_cell_quotient(int k) { return QuotientMatrix({{k - 1, 1, 0}, {1, k - 1, 1}, {0, 3, k - 1}}); }

// Every set partition of {0..n-1} as restricted-growth strings.
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            visit(a);
            return;
        }
        for (int c = 0; c <= used && c < n; ++c) {
            a[static_cast<std::size_t>(i)] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    if (n == 0) visit(a);
    else rec(1, 1);
}

// Single rational basis vector proportional to `v`.
bool spans(const std::vector<std::vector<QuadNumber>>& basis, const std::vector<int>& v) {
    if (basis.size() != 1 || basis[0].size() != v.size()) return false;
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (basis[0][i].q.numerator() != 0) return false;
        if (v[i] == 0) {
            if (basis[0][i].p.numerator() != 0) return false;
            continue;
        }
        const Rational r = basis[0][i].p / Rational(v[i]);
        if (ratio && *ratio != r) return false;
        ratio = r;
    }
    return ratio && ratio->numerator() != 0;
}

}  // namespace

TEST_CASE("is_equitable examples") {
    const Graph k13 = Graph::star(3);
    auto q = is_equitable(k13, Partition::from_cells(4, {{0}, {1, 2, 3}}));
    REQUIRE(q);
    CHECK(q->c == std::vector<std::vector<int>>{{0, 3}, {1, 0}});

    const Graph p4 = Graph::path(4);
    auto qp = is_equitable(p4, Partition::from_cells(4, {{0, 3}, {1, 2}}));
    REQUIRE(qp);
    CHECK(qp->c == std::vector<std::vector<int>>{{0, 1}, {1, 1}});
    CHECK_FALSE(is_equitable(p4, Partition::from_cells(4, {{0, 1}, {2, 3}})));

    CHECK_THROWS_AS(is_equitable(p4, Partition::from_cells(3, {{0}, {1, 2}})), InvalidPartition);
    CHECK_THROWS_AS(Partition(std::vector<int>{0, 2}), InvalidPartition);
    CHECK_THROWS_AS(Partition::from_cells(3, {{0}, {1}}), InvalidPartition);
}

TEST_CASE("coarsest equitable examples") {
    auto c5 = coarsest_equitable(Graph::cycle(5));
    CHECK(c5.partition.r == 1);
    CHECK(c5.quotient.c == std::vector<std::vector<int>>{{2}});

    auto k13 = coarsest_equitable(Graph::star(3));
    CHECK(k13.partition.cells() == Cells{{0}, {1, 2, 3}});
    CHECK(k13.quotient.c == std::vector<std::vector<int>>{{0, 3}, {1, 0}});

    const Graph t2 = t_tree(2);
    auto t = coarsest_equitable(t2);
    REQUIRE(t.partition.r == 3);
    CHECK(t.quotient.c == std::vector<std::vector<int>>{{0, 3, 0}, {1, 0, 1}, {0, 1, 0}});
    for (const auto& cell : t.partition.cells()) {
        std::vector<int> d;
        for (int v : cell) d.push_back(t2.degree(v));
        CHECK(std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; }));
    }
    CHECK(t.partition.cell_sizes == std::vector<int>{1, 3, 3});
}

TEST_CASE("coarsest equitable partition matches exhaustive search on the atlas") {
    for (const Graph& g : testing::atlas()) {
        const int n = g.order();
        if (n == 7 && !is_connected(g)) continue;
        const auto ours = coarsest_equitable(g);
        REQUIRE(is_equitable(g, ours.partition));
        REQUIRE(check_commutation(g, ours.partition, ours.quotient));
        int fewest = n + 1;
        for_each_set_partition(n, [&](const std::vector<int>& a) {
            const Partition p(a);
            if (!is_equitable(g, p)) return;
            fewest = std::min(fewest, p.r);
            REQUIRE(p.refines(ours.partition));
        });
        CHECK(fewest == ours.partition.r);
    }
}

TEST_CASE("two-cell search matches exhaustive bipartitions on the atlas") {
    for (const Graph& g : testing::atlas()) {
        const int n = g.order();
        if (n < 2) continue;
        std::size_t brute = 0;
        for (std::uint64_t bits = 0; bits + 1 < (std::uint64_t{1} << (n - 1)); ++bits) {
            std::vector<int> a(static_cast<std::size_t>(n), 1);
            a[0] = 0;
            for (int v = 1; v < n; ++v)
                if ((bits >> (v - 1)) & 1U) a[static_cast<std::size_t>(v)] = 0;
            if (is_equitable(g, Partition(a))) ++brute;
        }
        const auto found = two_cell_equitable_partitions(g);
        CHECK(found.size() == brute);
        CHECK(has_two_cell_equitable(g) == (brute > 0));
        for (const auto& r : found) CHECK(check_commutation(g, r.partition, r.quotient));
    }
}

TEST_CASE("commutation") {
    const Graph k13 = Graph::star(3);
    const Partition p = Partition::from_cells(4, {{0}, {1, 2, 3}});
    CHECK(check_commutation(k13, p, QuotientMatrix({{0, 3}, {1, 0}})));
    CHECK_FALSE(check_commutation(k13, p, QuotientMatrix({{0, 3}, {2, 0}})));
    const Graph t2 = t_tree(2);
    const auto ep = coarsest_equitable(t2);
    CHECK(check_commutation(t2, ep.partition, ep.quotient));
}

TEST_CASE("quotient spectrum of the three-cell matrix") {
    const auto spec = quotient_spectrum(three_cell_quotient(2));
    REQUIRE(spec.size() == 3);
    CHECK(spec[0].rational_value == Rational(3));
    CHECK(spec[1].rational_value == Rational(1));
    CHECK(spec[2].rational_value == Rational(-1));
    CHECK(spans(spec[0].exact_basis, {1, 2, 3}));
    CHECK(spans(spec[1].exact_basis, {-1, 0, 1}));
    CHECK(spans(spec[2].exact_basis, {1, -2, 3}));
}

TEST_CASE("quotient spectrum small cases") {
    const auto s = quotient_spectrum(QuotientMatrix({{0, 3}, {1, 0}}));
    REQUIRE(s.size() == 2);
    CHECK(s[0].kind == QuotientEigen::Kind::Quadratic);
    CHECK(s[0].surd_value == Surd(0, 12, 1));
    CHECK(s[1].surd_value == Surd(0, 12, -1));
    REQUIRE(s[0].exact_basis.size() == 1);

    const auto one = quotient_spectrum(QuotientMatrix(std::vector<std::vector<int>>{{5}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].rational_value == Rational(5));

    const auto rep = quotient_spectrum(QuotientMatrix({{1, 1}, {1, 1}}));
    REQUIRE(rep.size() == 2);
    CHECK(rep[0].rational_value == Rational(2));
    CHECK(rep[1].rational_value == Rational(0));

    const auto deg = quotient_spectrum(QuotientMatrix({{2, 0}, {0, 2}}));
    REQUIRE(deg.size() == 1);
    CHECK(deg[0].multiplicity == 2);
    CHECK(deg[0].exact_basis.size() == 2);

    CHECK_THROWS(quotient_spectrum(QuotientMatrix(std::vector<std::vector<int>>(9, std::vector<int>(9, 1)))));
}

TEST_CASE("irreducible cubic quotients fall back to approximations") {
    const QuotientMatrix q({{1, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    const auto s = quotient_spectrum(q);
    REQUIRE(s.size() == 3);
    double trace = 0;
    for (const auto& e : s) {
        CHECK(e.kind == QuotientEigen::Kind::Approximate);
        trace += e.approx;
        REQUIRE(e.approx_basis.size() == 1);
        const auto& x = e.approx_basis[0];
        for (int i = 0; i < 3; ++i) {
            double row = 0;
            for (int j = 0; j < 3; ++j) row += q.c[i][j] * x[static_cast<std::size_t>(j)];
            CHECK(std::abs(row - e.approx * x[static_cast<std::size_t>(i)]) < 1e-9);
        }
    }
    CHECK(std::abs(trace - 1.0) < 1e-9);
}

TEST_CASE("divisor main candidates") {
    const Graph t2 = construct_three_cell(1, 1).graph;
    const auto ep = coarsest_equitable(t2);
    auto c = main_candidates_via_divisor(t2, ep.partition);
    REQUIRE(c.size() == 2);
    CHECK(c[0].rational_value == Rational(2));
    CHECK(c[1].rational_value == Rational(0));

    const auto cw = construct_three_cell(1, 1);
    auto c3 = main_candidates_via_divisor(cw.graph, cw.partition);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].matches(Surd::integer(2)));
    CHECK(c3[1].matches(Surd::integer(0)));

    const Graph k13 = Graph::star(3);
    auto ck = main_candidates_via_divisor(k13, Partition::from_cells(4, {{0}, {1, 2, 3}}));
    REQUIRE(ck.size() == 2);
    CHECK(ck[0].matches(Surd(0, 12, 1)));
    CHECK(ck[1].matches(Surd(0, 12, -1)));

    const Graph c5 = Graph::cycle(5);
    auto cc = main_candidates_via_divisor(c5, coarsest_equitable(c5).partition);
    REQUIRE(cc.size() == 1);
    CHECK(cc[0].rational_value == Rational(2));

    CHECK_THROWS_AS(main_candidates_via_divisor(Graph::path(4), Partition::from_cells(4, {{0, 1}, {2, 3}})), InvalidPartition);
}
