#include "mainspectra/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "mainspectra/bounds.hpp"
#include "mainspectra/equitable.hpp"
#include "mainspectra/families.hpp"

namespace mainspectra {

namespace {

std::string key_of(const Graph& g) {
    return g.order() <= kMaxCanonicalOrder ? canonical_key(g) : write_graph6(g);
}

std::string pair_text(std::int64_t a, std::int64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool has_pair(const CensusRecord& r, std::int64_t a, std::int64_t b) {
    return r.signature.pair && r.signature.pair->a == a && r.signature.pair->b == b;
}

VerificationReport start(std::string claim, std::string scope) {
    VerificationReport rep;
    rep.claim = std::move(claim);
    rep.scope = std::move(scope);
    return rep;
}

constexpr int kGridMaxA = 8;
constexpr int kGridMinB = -12;
constexpr int kGridMaxB = 12;

std::string grid_text() {
    return "grid 0<=a<=" + std::to_string(kGridMaxA) + ", " + std::to_string(kGridMinB) + "<=b<=" +
           std::to_string(kGridMaxB);
}

void fail(VerificationReport& rep, std::string witness) {
    rep.pass = false;
    rep.counterexamples.push_back(std::move(witness));
}

// Members of one signature must be exactly the class of `expected`, when it
// fits inside the scanned orders.
VerificationReport exact_class(const std::string& claim, const Census& c, std::int64_t a, std::int64_t b,
                               const Graph& expected) {
    VerificationReport rep = start(claim, c.scope_text());
    const std::string want = key_of(expected);
    bool found = false;
    for (const auto& r : c.records()) {
        ++rep.checked;
        if (!has_pair(r, a, b)) continue;
        const std::string k = r.canonical.empty() ? r.g6 : r.canonical;
        rep.members.push_back(k);
        if (k == want) found = true;
        else fail(rep, r.g6);
    }
    const bool in_scope = expected.order() <= c.max_n();
    if (in_scope && !found) {
        rep.pass = false;
        rep.counterexamples.push_back(write_graph6(expected));
        rep.detail = "expected class missing from the census";
    } else {
        rep.detail = "expected class " + want + (in_scope ? "" : " lies beyond the scanned order");
    }
    return rep;
}

template <class Pred>
VerificationReport every_member(const std::string& claim, const Census& c, Pred&& holds,
                                const std::function<bool(const CensusRecord&)>& relevant = nullptr) {
    VerificationReport rep = start(claim, c.scope_text());
    for (const auto& r : c.records()) {
        if (relevant && !relevant(r)) continue;
        ++rep.checked;
        if (relevant) rep.members.push_back(r.canonical.empty() ? r.g6 : r.canonical);
        if (!holds(r)) fail(rep, r.g6);
    }
    return rep;
}

Graph graph_of(const CensusRecord& r) { return parse_graph6(r.g6); }

VerificationReport feasibility_sufficiency() {
    VerificationReport rep = start("feasibility-sufficiency", grid_text());
    for (int a = 0; a <= kGridMaxA; ++a)
        for (int b = kGridMinB; b <= kGridMaxB; ++b) {
            if (!is_feasible(a, b)) continue;
            ++rep.checked;
            try {
                const Witness w = witness(a, b);
                const Graph& g = w.construction.graph;
                const MainSignature sig = two_main_signature(g);
                if (!is_connected(g) || !sig.pair || sig.pair->a != a || sig.pair->b != b) fail(rep, pair_text(a, b));
            } catch (const Error&) {
                fail(rep, pair_text(a, b));
            }
        }
    return rep;
}

VerificationReport g0b(const Census& c) {
    VerificationReport rep = start("g0b", c.scope_text());
    std::map<std::string, const CensusRecord*> by_key;
    for (const auto& r : c.records()) {
        by_key.emplace(r.canonical.empty() ? r.g6 : r.canonical, &r);
        if (!r.signature.pair || r.signature.pair->a != 0) continue;
        ++rep.checked;
        rep.members.push_back(r.canonical.empty() ? r.g6 : r.canonical);
        const auto sides = is_semiregular_bipartite(graph_of(r));
        if (!sides || static_cast<std::int64_t>(sides->first) * sides->second != r.signature.pair->b)
            fail(rep, r.g6);
    }
    // converse: every semi-regular bipartite graph in scope carries (0, δΔ)
    std::size_t converse = 0;
    for (int n = 2; n <= std::min(c.max_n(), kMaxCanonicalOrder); ++n)
        for (const Graph& g : semiregular_bipartite_graphs(n)) {
            ++converse;
            const auto sides = is_semiregular_bipartite(g);
            auto it = by_key.find(canonical_key(g));
            if (it == by_key.end() || !has_pair(*it->second, 0, std::int64_t{sides->first} * sides->second))
                fail(rep, write_graph6(g));
        }
    rep.detail = std::to_string(converse) + " labeled semi-regular bipartite graphs checked for the converse";
    return rep;
}

VerificationReport degree_bound_claim(const Census& c) {
    VerificationReport rep = every_member("degree-bounds", c, [](const CensusRecord& r) {
        try {
            return audit_bounds(graph_of(r)).ok();
        } catch (const Error&) {
            return false;
        }
    });
    std::size_t grid = 0;
    for (int a = 1; a <= kGridMaxA; ++a)
        for (int b = kGridMinB; b <= kGridMaxB; ++b) {
            if (!is_feasible(a, b)) continue;
            ++grid;
            try {
                if (!(tang_hou_bound(a, b) == degree_bounds(a, b, 1).second)) fail(rep, pair_text(a, b));
            } catch (const Error&) {
                fail(rep, pair_text(a, b));
            }
        }
    rep.detail = "maximum-degree bound compared on " + std::to_string(grid) + " grid pairs";
    return rep;
}

VerificationReport boundary_cells(const Census& c) {
    VerificationReport rep = start("boundary-cells", c.scope_text() + " + 3-cell witnesses k=1,2");
    std::set<std::string> seen;
    auto check = [&](const Graph& g) {
        const std::string k = key_of(g);
        if (!seen.insert(k).second) return;
        ++rep.checked;
        rep.members.push_back(k);
        if (g.order() > kMaxTwoCellOrder || has_two_cell_equitable(g)) fail(rep, write_graph6(g));
    };
    for (const auto& r : c.records())
        if (r.signature.pair && r.signature.pair->a * r.signature.pair->a + 4 * r.signature.pair->b == 4)
            check(graph_of(r));
    for (int k = 1; k <= 2; ++k) check(construct_three_cell(k, three_cell_order(k)).graph);
    return rep;
}

using ClaimFn = std::function<VerificationReport(const Census&)>;

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
    static const std::vector<std::pair<std::string, ClaimFn>> table = {
        {"feasibility-necessity",
         [](const Census& c) {
             return every_member("feasibility-necessity", c, [](const CensusRecord& r) {
                 return r.signature.pair && is_feasible(r.signature.pair->a, r.signature.pair->b).has_value();
             });
         }},
        {"feasibility-sufficiency", [](const Census&) { return feasibility_sufficiency(); }},
        {"g20", [](const Census& c) { return exact_class("g20", c, 2, 0, t_tree(2)); }},
        {"g11", [](const Census& c) { return exact_class("g11", c, 1, 1, double_star(1, 1)); }},
        {"g12", [](const Census& c) { return exact_class("g12", c, 1, 2, double_star(2, 2)); }},
        {"g13",
         [](const Census& c) {
             return every_member(
                 "g13", c, [](const CensusRecord& r) { return has_one_ij_partition(graph_of(r), 3); },
                 [](const CensusRecord& r) { return has_pair(r, 1, 3); });
         }},
        {"g14",
         [](const Census& c) {
             return every_member(
                 "g14", c, [](const CensusRecord& r) { return has_one_ij_partition(graph_of(r), 4); },
                 [](const CensusRecord& r) { return has_pair(r, 1, 4); });
         }},
        {"g15",
         [](const Census& c) {
             return every_member(
                 "g15", c,
                 [](const CensusRecord& r) {
                     const Graph g = graph_of(r);
                     return as_double_star(g) == std::pair{5, 5} || has_one_ij_partition(g, 5) ||
                            matches_b15_pattern(g);
                 },
                 [](const CensusRecord& r) { return has_pair(r, 1, 5); });
         }},
        {"g0b", g0b},
        {"delta-star",
         [](const Census& c) {
             return every_member("delta-star", c, [](const CensusRecord& r) {
                 const Graph g = graph_of(r);
                 const int delta = degree_profile(g).min_degree;
                 const auto [lower, upper] = degree_bounds(r.signature.pair->a, r.signature.pair->b, delta);
                 return (lower == std::int64_t{delta}) == (r.signature.pair->a == 0);
             });
         }},
        {"boundary-cells", boundary_cells},
        {"delta-lemma",
         [](const Census& c) {
             return every_member(
                 "delta-lemma", c,
                 [](const CensusRecord& r) {
                     const int delta = degree_profile(graph_of(r)).min_degree;
                     const auto b = r.signature.pair->b;
                     if (b == 1 || b == 2) return delta == 1;
                     if (b >= 3 && b <= 6) return delta <= 2;
                     return true;
                 },
                 [](const CensusRecord& r) { return r.signature.pair && r.signature.pair->a == 1; });
         }},
        {"delta2-range",
         [](const Census& c) {
             return every_member(
                 "delta2-range", c,
                 [](const CensusRecord& r) {
                     const auto prof = degree_profile(graph_of(r));
                     const auto b = r.signature.pair->b;
                     return 2 + b <= 2 * std::int64_t{prof.max_degree} &&
                            prof.max_degree <= b;
                 },
                 [](const CensusRecord& r) {
                     return r.signature.pair && r.signature.pair->a == 1 &&
                            degree_profile(parse_graph6(r.g6)).min_degree == 2;
                 });
         }},
        {"degree-bounds", degree_bound_claim},
        {"sandwich",
         [](const Census& c) {
             return every_member("sandwich", c,
                                 [](const CensusRecord& r) { return sandwich_check(graph_of(r), r.signature); });
         }},
        {"divisor-containment",
         [](const Census& c) {
             return every_member("divisor-containment", c, [](const CensusRecord& r) {
                 const Graph g = graph_of(r);
                 const auto cands = main_candidates_via_divisor(g, coarsest_equitable(g).partition);
                 auto has = [&](const Surd& s) {
                     return std::any_of(cands.begin(), cands.end(), [&](const QuotientEigen& e) { return e.matches(s); });
                 };
                 return has(*r.signature.lambda1) && has(*r.signature.lambda2);
             });
         }},
    };
    return table;
}

}  // namespace

std::string Census::scope_text() const {
    std::ostringstream os;
    os << "census n<=" << max_n_ << " (" << records_.size() << " classes";
    if (extra_ > 0) os << ", " << extra_ << " ingested";
    os << "); certified up to the scanned order only";
    return os.str();
}

Census Census::build(const ClaimScope& scope) {
    Census c;
    c.max_n_ = scope.max_n;
    CensusOptions opts;
    opts.min_n = 2;
    opts.max_n = scope.max_n;
    opts.jobs = scope.jobs;
    std::unordered_set<std::string> seen;
    enumerate_members(opts, [&](const CensusRecord& r) {
        seen.insert(r.canonical);
        c.records_.push_back(r);
    });
    for (const Graph& g : scope.extra) {
        auto rec = classify(g);
        if (!rec) continue;
        if (!seen.insert(rec->canonical.empty() ? rec->g6 : rec->canonical).second) continue;
        c.records_.push_back(std::move(*rec));
        ++c.extra_;
    }
    return c;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

VerificationReport verify_claim(const std::string& claim, const Census& census) {
    for (const auto& [id, fn] : registry())
        if (id == claim) return fn(census);
    throw Error("unknown claim id: " + claim);
}

VerificationReport verify_claim(const std::string& claim, const ClaimScope& scope) {
    if (std::find(claim_ids().begin(), claim_ids().end(), claim) == claim_ids().end())
        throw Error("unknown claim id: " + claim);
    if (claim == "feasibility-sufficiency") return feasibility_sufficiency();
    return verify_claim(claim, Census::build(scope));
}

bool has_one_ij_partition(const Graph& g, std::int64_t b) {
    for (const auto& ep : two_cell_equitable_partitions(g)) {
        const auto& q = ep.quotient.c;
        for (int first = 0; first < 2; ++first) {
            const int s = 1 - first;
            if (q[first][first] == 1 && q[s][s] == 0 && std::int64_t{q[first][s]} * q[s][first] == b) return true;
        }
    }
    return false;
}

bool matches_b15_pattern(const Graph& g) {
    using Sig = std::pair<int, std::vector<int>>;
    static const std::set<Sig> allowed = {{4, {2, 2, 2, 3}}, {3, {2, 2, 4}}, {3, {2, 3, 3}}, {2, {3, 4}}};
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        if (!allowed.count({g.degree(v), nd})) return false;
    }
    return g.order() > 0;
}

std::vector<Graph> semiregular_bipartite_graphs(int n) {
    if (n > kMaxCanonicalOrder) throw Error("semi-regular bipartite enumeration is limited to 10 vertices");
    std::vector<Graph> out;
    for (int n1 = 1; n1 < n; ++n1) {
        const int n2 = n - n1;
        for (int d1 = 1; d1 <= n2; ++d1) {
            if ((d1 * n1) % n2 != 0) continue;
            const int d2 = d1 * n1 / n2;
            if (d2 == d1 || d2 > n1) continue;
            // rows of the n1 x n2 biadjacency matrix, each a d1-subset of the other side
            std::vector<std::uint32_t> subsets;
            for (std::uint32_t m = 0; m < (1U << n2); ++m)
                if (std::popcount(m) == d1) subsets.push_back(m);
            std::vector<std::uint32_t> rows(static_cast<std::size_t>(n1));
            std::vector<int> col(static_cast<std::size_t>(n2), 0);
            std::function<void(int)> place = [&](int i) {
                if (i == n1) {
                    GraphBuilder gb(n);
                    for (int u = 0; u < n1; ++u)
                        for (int w = 0; w < n2; ++w)
                            if ((rows[static_cast<std::size_t>(u)] >> w) & 1U) gb.add_edge(u, n1 + w);
                    Graph g = gb.build();
                    if (is_connected(g)) out.push_back(std::move(g));
                    return;
                }
                for (std::uint32_t m : subsets) {
                    bool ok = true;
                    for (int w = 0; w < n2 && ok; ++w)
                        if ((m >> w) & 1U) ok = col[static_cast<std::size_t>(w)] < d2;
                    if (!ok) continue;
                    // remaining rows must be able to fill every column to d2
                    for (int w = 0; w < n2; ++w) col[static_cast<std::size_t>(w)] += (m >> w) & 1U;
                    bool feasible = true;
                    for (int w = 0; w < n2 && feasible; ++w)
                        feasible = d2 - col[static_cast<std::size_t>(w)] <= n1 - i - 1;
                    rows[static_cast<std::size_t>(i)] = m;
                    if (feasible) place(i + 1);
                    for (int w = 0; w < n2; ++w) col[static_cast<std::size_t>(w)] -= (m >> w) & 1U;
                }
            };
            place(0);
        }
    }
    return out;
}

}  // namespace mainspectra
