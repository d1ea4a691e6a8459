#include "mainspectra/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace mainspectra {

namespace {

constexpr int kRealizeAttempts = 64;

std::string pair_text(std::int64_t a, std::int64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string matrix_text(const std::vector<std::vector<int>>& c) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < c[i].size(); ++j) os << (j ? "," : "") << c[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

ConstructedGraph finish(GraphBuilder& b, std::vector<int> assignment) {
    Graph g = b.build();
    Partition p(std::move(assignment));
    auto q = is_equitable(g, p);
    if (!q) throw Error("construction produced a non-equitable partition");
    return {std::move(g), std::move(p), std::move(*q)};
}

void add_copy(GraphBuilder& b, const Graph& block, int offset) {
    for (auto [u, v] : block.edges()) b.add_edge(offset + u, offset + v);
}

}  // namespace

InfeasiblePair::InfeasiblePair(std::int64_t a_, std::int64_t b_, const std::string& reason)
    : Error("(a,b)=" + pair_text(a_, b_) + " is infeasible: " + reason), a(a_), b(b_) {}

std::string infeasibility_reason(std::int64_t a, std::int64_t b) {
    if (a < 0) return "a < 0";
    if (a * a + 4 * b < 4) return "a^2+4b = " + std::to_string(a * a + 4 * b) + " < 4";
    if (a == 0 && b == 1) return "(a,b)=(0,1) excluded";
    return {};
}

std::optional<FeasiblePair> is_feasible(std::int64_t a, std::int64_t b) {
    if (!infeasibility_reason(a, b).empty()) return std::nullopt;
    return FeasiblePair{a, b, a * a + 4 * b == 4};
}

std::string describe(const Recipe& recipe) {
    struct Visitor {
        std::string operator()(const TwoCellParams& p) const {
            std::ostringstream os;
            os << "two-cell(" << p.c11 << ',' << p.c12 << ';' << p.c21 << ',' << p.c22 << "; t=" << p.t << ')';
            return os.str();
        }
        std::string operator()(const ThreeCellParams& p) const {
            return "three-cell(k=" + std::to_string(p.k) + "; t=" + std::to_string(p.t) + ")";
        }
        std::string operator()(const QuotientParams& p) const {
            std::ostringstream os;
            os << p.id << ' ' << matrix_text(p.c) << " sizes=(";
            for (std::size_t i = 0; i < p.sizes.size(); ++i) os << (i ? "," : "") << p.sizes[i];
            os << ')';
            return os.str();
        }
    };
    return std::visit(Visitor{}, recipe);
}

int two_cell_order(int c11, int c22) {
    const int hi = std::max(c11, c22);
    if (hi == 0) return 1;
    int t = std::max(hi + 1, 2);
    if (t % 2 != 0) ++t;
    return t;
}

int three_cell_order(int k) {
    if (k < 1) throw Error("three-cell construction needs k >= 1");
    if (k == 1) return 1;
    int t = k;
    while ((t * (k - 1)) % 2 != 0) ++t;
    return t;
}

Recipe recipe_for(const FeasiblePair& pair) {
    if (!is_feasible(pair.a, pair.b)) throw InfeasiblePair(pair.a, pair.b, infeasibility_reason(pair.a, pair.b));
    const std::int64_t a = pair.a, b = pair.b;
    if (pair.boundary) {
        const int k = static_cast<int>(a / 2);
        return ThreeCellParams{k, three_cell_order(k)};
    }
    const std::int64_t k = a / 2;
    TwoCellParams p;
    if (a % 2 == 0) {
        p = {static_cast<int>(k), static_cast<int>(b + k * k), 1, static_cast<int>(k), 1};
    } else {
        p = {static_cast<int>(k + 1), static_cast<int>(b + k * k + k), 1, static_cast<int>(k), 1};
    }
    p.t = two_cell_order(p.c11, p.c22);
    return p;
}

std::vector<std::string> variant_ids() { return {"alt-a2", "alt-a4", "alt-a3", "alt-boundary-k2", "alt-boundary-k3"}; }

Recipe variant_recipe(const std::string& variant, std::int64_t a, std::int64_t b) {
    if (!is_feasible(a, b)) throw InfeasiblePair(a, b, infeasibility_reason(a, b));
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw Error("variant " + variant + " covers " + what + ", not " + pair_text(a, b));
    };
    auto two_cell = [](int c11, std::int64_t c12, int c21, int c22) {
        return TwoCellParams{c11, static_cast<int>(c12), c21, c22, two_cell_order(c11, c22)};
    };
    if (variant == "alt-a2") {  // k = 1: (k+1, b+k^2-1; 1, k-1)
        require(a == 2 && b >= 1, "(2,b) with b >= 1");
        return two_cell(2, b, 1, 0);
    }
    if (variant == "alt-a4") {  // k = 2
        require(a == 4 && b >= -2, "(4,b) with b >= -2");
        return two_cell(3, b + 3, 1, 1);
    }
    if (variant == "alt-a3") {  // k = 1: (k+2, b+k^2+k-2; 1, k-1)
        require(a == 3 && b >= 1, "(3,b) with b >= 1");
        return two_cell(3, b, 1, 0);
    }
    if (variant == "alt-boundary-k2" || variant == "alt-boundary-k3") {
        const int k = variant == "alt-boundary-k2" ? 2 : 3;
        require(a == 2 * k && b == 1 - k * k, pair_text(2 * k, 1 - k * k));
        const std::vector<std::vector<int>> c{{k - 1, 1, 0}, {2, k - 2, 1}, {0, 4, k - 1}};
        // |C1| = 2|C2|, |C2| = 4|C3|; take the smallest |C3| that realizes connected
        for (int t = 1; t <= 16; ++t) {
            std::vector<int> sizes{8 * t, 4 * t, t};
            try {
                realize_quotient(c, sizes);
                return QuotientParams{variant, c, sizes};
            } catch (const Error&) {
            }
        }
        throw Error("no realization found for " + variant);
    }
    throw Error("unknown recipe variant '" + variant + "'");
}

Graph regular_on(int t, int r) {
    if (t < 1 || r < 0 || r >= t) throw Error("regular_on(" + std::to_string(t) + "," + std::to_string(r) + "): need 0 <= r < t");
    if ((t * r) % 2 != 0) throw Error("regular_on(" + std::to_string(t) + "," + std::to_string(r) + "): t*r must be even");
    std::vector<int> s;
    for (int j = 1; j <= r / 2; ++j) {
        s.push_back(j);
        s.push_back(t - j);
    }
    if (r % 2 != 0) s.push_back(t / 2);
    return circulant(t, s);
}

ConstructedGraph construct_two_cell(const TwoCellParams& p, TwoCellOptions opts) {
    if (p.c11 < 0 || p.c22 < 0 || p.c12 < 1 || p.c21 < 1) throw Error("two-cell parameters need c11,c22 >= 0 and c12,c21 >= 1");
    if (!opts.allow_regular && p.c11 + p.c12 == p.c21 + p.c22)
        throw Error("two-cell parameters with c11+c12 == c21+c22 give a regular graph");
    if (p.c11 < p.c22) {
        // the denser cell carries the connected block
        ConstructedGraph swapped = construct_two_cell(TwoCellParams{p.c22, p.c21, p.c12, p.c11, p.t}, opts);
        std::vector<int> assignment = swapped.partition.cell_of;
        for (int& c : assignment) c = 1 - c;
        Partition part(std::move(assignment));
        auto q = is_equitable(swapped.graph, part);
        return {std::move(swapped.graph), std::move(part), std::move(*q)};
    }

    const int t = p.t;
    const Graph g1 = regular_on(t, p.c11);
    const Graph g2 = regular_on(t, p.c22);
    if (!is_connected(g1)) throw Error("two-cell block G1 is not connected for t=" + std::to_string(t));

    const int n1 = p.c21 * t;
    GraphBuilder b(n1 + p.c12 * t);
    std::vector<int> assignment(static_cast<std::size_t>(b.order()), 1);
    for (int copy = 0; copy < p.c21; ++copy) add_copy(b, g1, copy * t);
    for (int copy = 0; copy < p.c12; ++copy) add_copy(b, g2, n1 + copy * t);
    for (int v = 0; v < n1; ++v) assignment[static_cast<std::size_t>(v)] = 0;
    for (int i = 0; i < t; ++i)
        for (int x = 0; x < p.c21; ++x)
            for (int y = 0; y < p.c12; ++y) b.add_edge(x * t + i, n1 + y * t + i);

    ConstructedGraph out = finish(b, std::move(assignment));
    if (!is_connected(out.graph)) throw Error("two-cell construction is disconnected");
    return out;
}

ConstructedGraph construct_two_cell(int c11, int c12, int c21, int c22) {
    return construct_two_cell(TwoCellParams{c11, c12, c21, c22, two_cell_order(c11, c22)});
}

ConstructedGraph construct_three_cell(int k, int t) {
    if (k < 1) throw Error("three-cell construction needs k >= 1");
    const Graph g12 = regular_on(3 * t, k - 1);
    const Graph g3 = regular_on(t, k - 1);
    if (!is_connected(g3)) throw Error("three-cell block G3 must be connected; t=" + std::to_string(t) + " fails for k=" + std::to_string(k));

    GraphBuilder b(7 * t);
    add_copy(b, g12, 0);
    add_copy(b, g12, 3 * t);
    add_copy(b, g3, 6 * t);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < t; ++j) {
            b.add_edge(i * t + j, 3 * t + i * t + j);  // u_ij v_ij
            b.add_edge(3 * t + i * t + j, 6 * t + j);  // v_ij w_j
        }
    std::vector<int> assignment(static_cast<std::size_t>(7 * t));
    for (int v = 0; v < 7 * t; ++v) assignment[static_cast<std::size_t>(v)] = v < 3 * t ? 0 : (v < 6 * t ? 1 : 2);
    ConstructedGraph out = finish(b, std::move(assignment));
    if (!is_connected(out.graph)) throw Error("three-cell construction is disconnected");
    return out;
}

ConstructedGraph realize_quotient(const std::vector<std::vector<int>>& c, const std::vector<int>& sizes) {
    const std::size_t r = sizes.size();
    if (c.size() != r) throw Error("quotient and size vector disagree");
    std::vector<int> offset(r + 1, 0);
    for (std::size_t i = 0; i < r; ++i) {
        if (c[i].size() != r) throw Error("quotient matrix must be square");
        if (sizes[i] < 1) throw Error("cell sizes must be positive");
        offset[i + 1] = offset[i] + sizes[i];
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (c[i][j] < 0) throw Error("quotient entries must be nonnegative");
            if (i != j && sizes[i] * c[i][j] != sizes[j] * c[j][i]) throw Error("cell sizes violate |C_i| c_ij = |C_j| c_ji");
            if (i != j && c[i][j] > sizes[j]) throw Error("c_ij exceeds |C_j|");
        }

    // Relabeling the block inside a cell keeps the quotient; retry until connected.
    std::mt19937 rng(0x5eed);
    std::vector<std::vector<int>> inner(r);
    for (std::size_t i = 0; i < r; ++i) {
        inner[i].resize(static_cast<std::size_t>(sizes[i]));
        std::iota(inner[i].begin(), inner[i].end(), 0);
    }
    for (int attempt = 0;; ++attempt) {
        GraphBuilder b(offset[r]);
        std::vector<int> assignment(static_cast<std::size_t>(offset[r]));
        for (std::size_t i = 0; i < r; ++i) {
            for (auto [u, v] : regular_on(sizes[i], c[i][i]).edges())
                b.add_edge(offset[i] + inner[i][static_cast<std::size_t>(u)], offset[i] + inner[i][static_cast<std::size_t>(v)]);
            for (int v = offset[i]; v < offset[i + 1]; ++v) assignment[static_cast<std::size_t>(v)] = static_cast<int>(i);
            for (std::size_t j = i + 1; j < r; ++j) {
                // vertex p of C_i takes the c_ij consecutive residues starting at p*c_ij mod |C_j|
                for (int p = 0; p < sizes[i]; ++p)
                    for (int q = 0; q < c[i][j]; ++q) b.add_edge(offset[i] + p, offset[j] + (p * c[i][j] + q) % sizes[j]);
            }
        }
        ConstructedGraph out = finish(b, std::move(assignment));
        if (out.quotient.c != c) throw Error("realized quotient differs from the requested one");
        if (is_connected(out.graph)) return out;
        if (attempt == kRealizeAttempts) throw Error("realization of " + matrix_text(c) + " is disconnected");
        for (auto& perm : inner) std::shuffle(perm.begin(), perm.end(), rng);
    }
}

ConstructedGraph build(const Recipe& recipe) {
    struct Visitor {
        ConstructedGraph operator()(const TwoCellParams& p) const { return construct_two_cell(p); }
        ConstructedGraph operator()(const ThreeCellParams& p) const { return construct_three_cell(p.k, p.t); }
        ConstructedGraph operator()(const QuotientParams& p) const { return realize_quotient(p.c, p.sizes); }
    };
    return std::visit(Visitor{}, recipe);
}

namespace {

Witness finish_witness(std::int64_t a, std::int64_t b, Recipe recipe) {
    Witness w{*is_feasible(a, b), std::move(recipe), {}, {}};
    w.construction = build(w.recipe);
    w.signature = two_main_signature(w.construction.graph);
    if (!w.signature.pair || *w.signature.pair != MainPair{a, b} || !is_connected(w.construction.graph))
        throw Error("witness for " + pair_text(a, b) + " via " + describe(w.recipe) + " has the wrong signature");
    return w;
}

}  // namespace

Witness witness(std::int64_t a, std::int64_t b) {
    auto pair = is_feasible(a, b);
    if (!pair) throw InfeasiblePair(a, b, infeasibility_reason(a, b));
    return finish_witness(a, b, recipe_for(*pair));
}

Witness witness(std::int64_t a, std::int64_t b, const std::string& variant) {
    if (variant.empty() || variant == "default") return witness(a, b);
    return finish_witness(a, b, variant_recipe(variant, a, b));
}

Graph double_star(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw Error("double star arms must be positive");
    GraphBuilder b(n1 + n2 + 2);
    b.add_edge(0, 1);
    for (int i = 0; i < n1; ++i) b.add_edge(0, 2 + i);
    for (int i = 0; i < n2; ++i) b.add_edge(1, 2 + n1 + i);
    return b.build();
}

std::optional<std::pair<int, int>> as_double_star(const Graph& g) {
    const int n = g.order();
    if (n < 4 || g.size() != n - 1 || !is_connected(g)) return std::nullopt;
    std::vector<int> centres;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 1) centres.push_back(v);
    if (centres.size() != 2 || !g.adjacent(centres[0], centres[1])) return std::nullopt;
    return std::pair{g.degree(centres[0]) - 1, g.degree(centres[1]) - 1};
}

Graph t_tree(int a) {
    if (a < 2) throw Error("t_tree needs a >= 2");
    const int children = a * a - a + 1;
    GraphBuilder b(1 + children + children * (a - 1));
    int next = 1 + children;
    for (int c = 1; c <= children; ++c) {
        b.add_edge(0, c);
        for (int l = 0; l < a - 1; ++l) b.add_edge(c, next++);
    }
    return b.build();
}

ConstructedGraph family_a(int i, int j, int s) {
    if (i < 1 || j < 1 || s < 1) throw Error("family_a needs i, j, s >= 1");
    if (j == i + 1) throw Error("family_a excludes j = i + 1 (the realization is regular)");
    // |C1| i = |C2| j with G[C1] a perfect matching: |C1| even, |C1| >= j, |C2| >= i
    const int g = std::gcd(i, j);
    int m = g;
    while ((m * (j / g)) % 2 != 0) ++m;
    const int x = s * m * (j / g);
    const int y = s * m * (i / g);
    return realize_quotient({{1, i}, {j, 0}}, {x, y});
}

ClassedGraph family_b15(int t, std::span<const int> sigma) {
    if (t < 3) throw Error("family_b15 needs t >= 3 for a 2-regular G[V3]");
    std::vector<int> perm(static_cast<std::size_t>(3 * t));
    if (sigma.empty()) {
        std::iota(perm.begin(), perm.end(), 0);
    } else {
        if (sigma.size() != perm.size()) throw Error("family_b15 relabeling must cover the 3t vertices of V4");
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t p = 0; p < perm.size(); ++p) {
            const int v = sigma[p];
            if (v < 0 || v >= 3 * t || seen[static_cast<std::size_t>(v)]) throw Error("family_b15 relabeling is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
            perm[p] = v;
        }
    }
    // V1 = [0,t), V2 = [t,2t), V3 = [2t,3t), V4 = [3t,6t); u'_{ji} sits at 3t + j t + i
    auto v1 = [&](int i) { return i; };
    auto v2 = [&](int i) { return t + i; };
    auto v3 = [&](int i) { return 2 * t + i; };
    auto u_primed = [&](int part, int i) { return 3 * t + part * t + i; };
    auto u = [&](int part, int i) { return 3 * t + perm[static_cast<std::size_t>(part * t + i)]; };

    GraphBuilder b(6 * t);
    for (int i = 0; i < t; ++i) {
        for (int part = 0; part < 3; ++part) b.add_edge(v1(i), u_primed(part, i));
        b.add_edge(v1(i), v2(i));
        b.add_edge(v2(i), u(0, i));
        b.add_edge(v2(i), u(1, i));
        b.add_edge(v3(i), u(2, i));
        b.add_edge(v3(i), v3((i + 1) % t));
    }
    Graph g = b.build();
    if (!is_connected(g)) throw Error("family_b15 relabeling yields a disconnected graph");
    std::vector<int> classes(static_cast<std::size_t>(6 * t));
    for (int v = 0; v < 6 * t; ++v) classes[static_cast<std::size_t>(v)] = std::min(v / t, 3);
    return {std::move(g), Partition(std::move(classes))};
}

}  // namespace mainspectra
