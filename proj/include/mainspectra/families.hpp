#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mainspectra/equitable.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/spectral.hpp"

namespace mainspectra {

class InfeasiblePair : public Error {
public:
    InfeasiblePair(std::int64_t a, std::int64_t b, const std::string& reason);
    std::int64_t a, b;
};

/// A pair in the feasible set: a >= 0, a^2 + 4b >= 4, (a, b) != (0, 1).
struct FeasiblePair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool boundary = false;  // a^2 + 4b == 4
};

std::optional<FeasiblePair> is_feasible(std::int64_t a, std::int64_t b);

/// Which clause of the feasible set (a, b) violates; empty when feasible.
std::string infeasibility_reason(std::int64_t a, std::int64_t b);

struct TwoCellParams {
    int c11 = 0, c12 = 1, c21 = 1, c22 = 0;
    int t = 1;  // order of each regular block
    friend bool operator==(const TwoCellParams&, const TwoCellParams&) = default;
};

struct ThreeCellParams {
    int k = 1;
    int t = 1;
    friend bool operator==(const ThreeCellParams&, const ThreeCellParams&) = default;
};

/// A general r-cell quotient realized with the given cell sizes.
struct QuotientParams {
    std::string id;  // e.g. "alt-boundary-k2"
    std::vector<std::vector<int>> c;
    std::vector<int> sizes;
    friend bool operator==(const QuotientParams&, const QuotientParams&) = default;
};

using Recipe = std::variant<TwoCellParams, ThreeCellParams, QuotientParams>;

std::string describe(const Recipe& recipe);

/// Smallest block order for a two-cell recipe: 1 when c11 = c22 = 0, else the
/// smallest even t >= max(c11 + 1, c22 + 1, 2).
int two_cell_order(int c11, int c22);

/// Smallest t admitting a connected (k-1)-regular graph on t vertices.
int three_cell_order(int k);

Recipe recipe_for(const FeasiblePair& pair);

/// Alternative parameter rows: "alt-a2", "alt-a4", "alt-a3",
/// "alt-boundary-k2", "alt-boundary-k3". Throws on unknown ids or a pair the row does
/// not cover.
Recipe variant_recipe(const std::string& variant, std::int64_t a, std::int64_t b);
std::vector<std::string> variant_ids();

/// r-regular graph on t vertices: circulant with S = {±1..±floor(r/2)} plus
/// t/2 when r is odd (r = 1 gives a perfect matching, r = 0 the empty graph).
Graph regular_on(int t, int r);

struct ConstructedGraph {
    Graph graph;
    Partition partition;  // the declared equitable partition
    QuotientMatrix quotient;
};

struct TwoCellOptions {
    bool allow_regular = false;  // permit c11 + c12 == c21 + c22
};

/// c21 copies of a connected c11-regular G1 and c12 copies of a c22-regular
/// G2, all on t vertices, with u_i joined to v_i across every pair of copies.
ConstructedGraph construct_two_cell(const TwoCellParams& p, TwoCellOptions opts = {});
ConstructedGraph construct_two_cell(int c11, int c12, int c21, int c22);

/// Cells G1, G2 ((k-1)-regular on 3t) and G3 (connected (k-1)-regular on t)
/// with matchings u_ij v_ij and stars v_ij w_j.
ConstructedGraph construct_three_cell(int k, int t);

/// Realizes quotient c with the given cell sizes: regular graphs inside
/// cells and round-robin biregular graphs between them. Throws when sizes
/// are inconsistent or the result is disconnected.
ConstructedGraph realize_quotient(const std::vector<std::vector<int>>& c, const std::vector<int>& sizes);

ConstructedGraph build(const Recipe& recipe);

struct Witness {
    FeasiblePair pair;
    Recipe recipe;
    ConstructedGraph construction;
    MainSignature signature;
};

/// A connected graph realizing exactly (a, b); throws InfeasiblePair otherwise.
Witness witness(std::int64_t a, std::int64_t b);
Witness witness(std::int64_t a, std::int64_t b, const std::string& variant);

/// Edge uv with n1 pendants on u and n2 on v. Vertex 0 is u, 1 is v.
Graph double_star(int n1, int n2);

/// (n1, n2) if g is a double star, n1 counted at the lower-indexed centre.
std::optional<std::pair<int, int>> as_double_star(const Graph& g);

/// Rooted tree: root of degree a^2-a+1, children of degree a, then leaves.
Graph t_tree(int a);

/// Member of the (1, i·j) family with 2-cell parameters (1, i; j, 0). The
/// scale s multiplies the smallest realizable cell sizes.
ConstructedGraph family_a(int i, int j, int s = 1);

struct ClassedGraph {
    Graph graph;
    Partition classes;  // V1..V4; not equitable in general
};

/// The 6t-vertex graph on V1..V4 (sizes t, t, t, 3t) with G[V3] a t-cycle.
/// `sigma` relabels the 3t V4 positions (identity when empty); a relabeling
/// that disconnects the graph is rejected.
ClassedGraph family_b15(int t, std::span<const int> sigma = {});

}  // namespace mainspectra
