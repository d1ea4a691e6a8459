#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mainspectra/graph.hpp"
#include "mainspectra/spectral.hpp"
#include "mainspectra/surd.hpp"

namespace mainspectra {

/// (lower, upper) degree bounds for a two-main graph with pair (a, b) and
/// minimum degree delta: roots of x^2 - M x - (a - delta) b with
/// M = a^2 - a delta + b + delta. Throws if the discriminant is negative.
std::pair<Surd, Surd> degree_bounds(std::int64_t a, std::int64_t b, std::int64_t delta);

/// Upper bound on the maximum degree for a >= 1 (the delta = 1 upper bound).
Surd tang_hou_bound(std::int64_t a, std::int64_t b);

struct VertexBoundAudit {
    int vertex = 0;
    int degree = 0;
    bool lower_attained = false;
    bool upper_attained = false;
    bool within = true;                    // lower <= d(u) <= upper
    bool second_neighborhood_minimal = true;  // all of (∪N(v)) \ {u} has degree delta
    std::vector<int> second_neighborhood_degrees;
};

struct BoundsReport {
    MainPair pair;
    int min_degree = 0;
    int max_degree = 0;
    Surd lower;
    Surd upper;
    std::vector<VertexBoundAudit> vertices;
    std::vector<int> violations;  // vertices breaking the bound or the attainment iff

    bool lower_bound_attained() const;  // some vertex has degree == lower
    bool upper_bound_attained() const;
    bool ok() const { return violations.empty(); }
};

/// Throws if g is not a two-main graph.
BoundsReport audit_bounds(const Graph& g);

/// (d1, d2) when g is connected bipartite with every vertex of the part
/// containing vertex 0 of degree d1 and the other part of degree d2.
std::optional<std::pair<int, int>> is_semiregular_bipartite(const Graph& g);

}  // namespace mainspectra
