#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mainspectra/graph.hpp"
#include "mainspectra/spectral.hpp"

namespace mainspectra {

inline constexpr int kMaxNativeCensusOrder = 8;
inline constexpr int kMaxCanonicalOrder = 10;

/// Minimum graph6 string over all relabelings (n <= 10). Equal keys iff
/// the graphs are isomorphic.
std::string canonical_key(const Graph& g);

struct CensusRecord {
    std::string g6;
    int n = 0;
    int m = 0;
    MainSignature signature;
    std::string canonical;  // empty when n > kMaxCanonicalOrder
};

struct CensusOptions {
    int max_n = 4;
    int min_n = 2;
    std::optional<MainPair> filter;
    int jobs = 1;
    bool dedup = true;  // one record per isomorphism class (first labeled hit)
};

using RecordSink = std::function<void(const CensusRecord&)>;

/// Exhaustive labeled enumeration for min_n <= n <= max_n <= 8. For each
/// order, labeled graphs are visited prefix-major: the graph induced on the
/// first n-1 vertices (graph6 bit order), then the neighbourhood of the last
/// vertex. The stream is identical for every job count.
void enumerate_members(const CensusOptions& opts, const RecordSink& sink);
std::vector<CensusRecord> collect_members(const CensusOptions& opts);

/// Work units of one order, each a half-open range of prefix masks.
struct CensusChunk {
    int n = 0;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};
std::vector<CensusChunk> census_chunks(int n, int count);

/// Labeled connected two-main graphs in one chunk, in enumeration order.
std::vector<Graph> scan_chunk(const CensusChunk& chunk);

struct IngestError {
    std::size_t line = 0;
    std::string message;
};

struct IngestResult {
    std::size_t lines = 0;
    std::size_t parsed = 0;
    std::vector<IngestError> errors;
};

/// Runs graph6 lines through the same filter; parse failures are collected
/// and the stream continues. `all_graphs`, when given, receives every parsed
/// graph, members or not.
IngestResult ingest_graph6(std::istream& in, const std::optional<MainPair>& filter, const RecordSink& sink,
                           std::vector<Graph>* all_graphs = nullptr);

/// Builds the record for a graph, or nullopt if it is disconnected or does
/// not have exactly two main eigenvalues.
std::optional<CensusRecord> classify(const Graph& g);

}  // namespace mainspectra
