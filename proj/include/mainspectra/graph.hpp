#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "mainspectra/vertex_set.hpp"

namespace mainspectra {

using Rational = boost::rational<std::int64_t>;

/// Hard ceiling on the vertex count: the adjacency row width chosen at build
/// time (MAINSPECTRA_MAX_VERTICES, default 256).
inline constexpr int kMaxVertices = VertexSet::kCapacity;

/// Effective vertex cap. Defaults to kMaxVertices; the MAINSPECTRA_MAX_N
/// environment variable may set any value in [1, kMaxVertices].
int max_vertices();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Graph6Error : public Error {
public:
    using Error::Error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

/// Simple undirected graph on vertices 0..n-1 stored as bitset rows.
/// Immutable once built; use GraphBuilder or the edge-list factory.
class Graph {
public:
    using Row = VertexSet;

    Graph() = default;

    /// Validates symmetry, irreflexivity and the vertex cap.
    Graph(int n, std::vector<Row> rows);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph empty(int n);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int leaves);

    int order() const { return n_; }
    int size() const;  // edge count m
    const Row& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    std::span<const Row> rows() const { return rows_; }

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    int degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    /// Relabels so that old vertex v becomes perm[v].
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Row> rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(int u, int v);
    bool has_edge(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    int order() const { return n_; }
    Graph build() const { return Graph(n_, rows_); }

private:
    int n_;
    std::vector<Graph::Row> rows_;
};

struct DegreeProfile {
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    Rational mean{0};
};

DegreeProfile degree_profile(const Graph& g);
bool is_regular(const Graph& g);
bool is_connected(const Graph& g);

/// Circulant graph on Z_t with connection set S (inverse-closed, 0 excluded).
Graph circulant(int t, std::span<const int> connection_set);

// graph6 (n <= 62 uses the one-byte header, larger orders the four-byte form).
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace mainspectra
