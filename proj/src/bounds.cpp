#include "mainspectra/bounds.hpp"

#include <algorithm>

namespace mainspectra {

std::pair<Surd, Surd> degree_bounds(std::int64_t a, std::int64_t b, std::int64_t delta) {
    const std::int64_t m = a * a - a * delta + b + delta;
    const std::int64_t disc = m * m + 4 * (a - delta) * b;
    if (disc < 0) throw Error("degree bound discriminant is negative for (a,b,delta)=(" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(delta) + ")");
    return {Surd(m, disc, -1), Surd(m, disc, 1)};
}

Surd tang_hou_bound(std::int64_t a, std::int64_t b) {
    if (a < 1) throw Error("the maximum-degree bound needs a >= 1");
    const std::int64_t m = a * a - a + b + 1;
    const std::int64_t disc = m * m + 4 * (a - 1) * b;
    if (disc < 0) throw Error("maximum-degree bound discriminant is negative");
    return Surd(m, disc, 1);
}

bool BoundsReport::lower_bound_attained() const {
    return std::any_of(vertices.begin(), vertices.end(), [](const VertexBoundAudit& v) { return v.lower_attained; });
}

bool BoundsReport::upper_bound_attained() const {
    return std::any_of(vertices.begin(), vertices.end(), [](const VertexBoundAudit& v) { return v.upper_attained; });
}

BoundsReport audit_bounds(const Graph& g) {
    const MainSignature sig = two_main_signature(g);
    if (!sig.pair) throw Error("bounds audit needs a graph with exactly two main eigenvalues");
    const DegreeProfile prof = degree_profile(g);

    BoundsReport rep;
    rep.pair = *sig.pair;
    rep.min_degree = prof.min_degree;
    rep.max_degree = prof.max_degree;
    std::tie(rep.lower, rep.upper) = degree_bounds(sig.pair->a, sig.pair->b, prof.min_degree);

    for (int u = 0; u < g.order(); ++u) {
        VertexBoundAudit va;
        va.vertex = u;
        va.degree = g.degree(u);
        va.lower_attained = rep.lower == static_cast<std::int64_t>(va.degree);
        va.upper_attained = rep.upper == static_cast<std::int64_t>(va.degree);
        va.within = rep.lower <= static_cast<std::int64_t>(va.degree) && rep.upper >= static_cast<std::int64_t>(va.degree);

        Graph::Row second;
        for (int w : g.row(u)) second |= g.row(w);
        second.reset(u);
        for (int w : second) {
            const int d = g.degree(w);
            va.second_neighborhood_degrees.push_back(d);
            if (d != prof.min_degree) va.second_neighborhood_minimal = false;
        }
        const bool attained = va.lower_attained || va.upper_attained;
        if (!va.within || attained != va.second_neighborhood_minimal) rep.violations.push_back(u);
        rep.vertices.push_back(std::move(va));
    }
    return rep;
}

std::optional<std::pair<int, int>> is_semiregular_bipartite(const Graph& g) {
    const int n = g.order();
    if (n < 2 || !is_connected(g)) return std::nullopt;
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    side[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (side[static_cast<std::size_t>(w)] == -1) {
                side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                queue.push_back(w);
            } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                return std::nullopt;
            }
        }
    }
    int d[2] = {-1, -1};
    for (int v = 0; v < n; ++v) {
        int& slot = d[side[static_cast<std::size_t>(v)]];
        if (slot == -1) slot = g.degree(v);
        else if (slot != g.degree(v)) return std::nullopt;
    }
    return std::pair{d[0], d[1]};
}

}  // namespace mainspectra
