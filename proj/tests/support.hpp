#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "mainspectra/graph.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(MAINSPECTRA_TEST_DATA) + "/" + name; }

// Every graph on 1..7 vertices, one per isomorphism class (networkx atlas).
inline const std::vector<mainspectra::Graph>& atlas() {
    static const std::vector<mainspectra::Graph> graphs = [] {
        std::vector<mainspectra::Graph> out;
        std::ifstream in(data_path("atlas_upto7.g6"));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) out.push_back(mainspectra::parse_graph6(line));
        return out;
    }();
    return graphs;
}

// Labeled graph on n vertices from the bits of mask, pairs in graph6 order.
inline mainspectra::Graph labeled(int n, std::uint64_t mask) {
    mainspectra::GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U) b.add_edge(i, j);
    return b.build();
}

}  // namespace testing
