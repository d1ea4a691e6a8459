#include "mainspectra/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace mainspectra {

namespace {

int read_max_vertices() {
    const char* env = std::getenv("MAINSPECTRA_MAX_N");
    if (env == nullptr || *env == '\0') return kMaxVertices;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > kMaxVertices) {
        throw Error("MAINSPECTRA_MAX_N must be an integer in [1, " + std::to_string(kMaxVertices) + "], got '" +
                    std::string(env) + "'");
    }
    return static_cast<int>(value);
}

void check_order(int n) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    if (n > max_vertices()) {
        throw InvalidGraph("vertex count " + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(max_vertices()));
    }
}

}  // namespace

int max_vertices() {
    static const int cap = read_max_vertices();
    return cap;
}

Graph::Graph(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
    check_order(n);
    if (rows_.size() != static_cast<std::size_t>(n)) throw InvalidGraph("row count does not match vertex count");
    const Row valid = Row::range(n);
    for (int v = 0; v < n; ++v) {
        const Row& r = rows_[static_cast<std::size_t>(v)];
        if (!r.subset_of(valid)) throw InvalidGraph("adjacency row references a vertex out of range");
        if (r.test(v)) throw InvalidGraph("self-loop at vertex " + std::to_string(v));
        for (int u : r) {
            if (!rows_[static_cast<std::size_t>(u)].test(v)) {
                throw InvalidGraph("asymmetric adjacency between " + std::to_string(u) + " and " +
                                   std::to_string(v));
            }
        }
    }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::empty(int n) { return GraphBuilder(n).build(); }

Graph Graph::complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph Graph::path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InvalidGraph("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph Graph::star(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

int Graph::size() const {
    int twice = 0;
    for (const Row& r : rows_) twice += r.count();
    return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u : row(v)) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = row(u).next_from(u + 1); v >= 0; v = row(u).next_from(v + 1)) out.emplace_back(u, v);
    return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw InvalidGraph("permutation size mismatch");
    std::vector<Row> rows(static_cast<std::size_t>(n_));
    for (int u = 0; u < n_; ++u) {
        Row r;
        for (int w : row(u)) r.set(perm[static_cast<std::size_t>(w)]);
        rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = r;
    }
    return Graph(n_, std::move(rows));
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), Graph::Row{});
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
    return *this;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const int n = g.order();
    p.degrees.resize(static_cast<std::size_t>(n));
    int total = 0;
    for (int v = 0; v < n; ++v) {
        p.degrees[static_cast<std::size_t>(v)] = g.degree(v);
        total += g.degree(v);
    }
    if (n > 0) {
        auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *lo;
        p.max_degree = *hi;
        p.mean = Rational(total, n);
    }
    return p;
}

bool is_regular(const Graph& g) {
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    Graph::Row seen = Graph::Row::single(0), frontier = seen;
    while (frontier.any()) {
        Graph::Row next;
        for (int v : frontier) next |= g.row(v);
        frontier = next.minus(seen);
        seen |= next;
    }
    return seen.count() == n;
}

Graph circulant(int t, std::span<const int> connection_set) {
    if (t < 1) throw InvalidGraph("circulant order must be positive");
    std::vector<bool> in_set(static_cast<std::size_t>(t), false);
    for (int s : connection_set) {
        if (s <= 0 || s >= t) throw InvalidGraph("connection set entries must lie in 1..t-1");
        in_set[static_cast<std::size_t>(s)] = true;
    }
    for (int s = 1; s < t; ++s)
        if (in_set[static_cast<std::size_t>(s)] != in_set[static_cast<std::size_t>(t - s)])
            throw InvalidGraph("connection set is not inverse-closed");
    GraphBuilder b(t);
    for (int i = 0; i < t; ++i)
        for (int s = 1; s < t; ++s)
            if (in_set[static_cast<std::size_t>(s)]) b.add_edge(i, (i + s) % t);
    return b.build();
}

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range in '" + std::string(line) + "'");

    std::size_t pos = 0;
    int n = 0;
    if (line[0] != 126) {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() < 4 || line[1] == 126) throw Graph6Error("malformed graph6 header");
        n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
        if (n < 63) throw Graph6Error("non-canonical four-byte graph6 header");
        pos = 4;
    }
    if (n > max_vertices()) {
        throw Graph6Error("graph6 vertex count " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(max_vertices()));
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos != bytes) {
        throw Graph6Error("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                          std::to_string(bytes));
    }

    std::vector<Graph::Row> rows(static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = line[pos + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[static_cast<std::size_t>(i)].set(j);
                rows[static_cast<std::size_t>(j)].set(i);
            }
        }
    }
    for (; k < bytes * 6; ++k)
        if (((line[pos + k / 6] - 63) >> (5 - k % 6)) & 1) throw Graph6Error("nonzero graph6 padding bits");
    return Graph(n, std::move(rows));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

}  // namespace mainspectra
