#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mainspectra/census.hpp"

namespace mainspectra {

struct ClaimScope {
    int max_n = 8;
    int jobs = 1;
    std::vector<Graph> extra;  // ingested graphs added to the population
};

/// The deduplicated population a claim is checked against: the native
/// census up to max_n plus any extra members, one record per class.
class Census {
public:
    static Census build(const ClaimScope& scope);

    const std::vector<CensusRecord>& records() const { return records_; }
    int max_n() const { return max_n_; }
    std::size_t extra_count() const { return extra_; }
    std::string scope_text() const;

private:
    std::vector<CensusRecord> records_;
    int max_n_ = 0;
    std::size_t extra_ = 0;
};

struct VerificationReport {
    std::string claim;
    std::string scope;
    bool pass = true;
    std::vector<std::string> counterexamples;  // graph6, or "(a,b)" for grid claims
    std::vector<std::string> members;          // canonical graph6 of the relevant class list
    std::size_t checked = 0;
    std::string detail;
};

const std::vector<std::string>& claim_ids();

/// Throws Error for an unknown claim id.
VerificationReport verify_claim(const std::string& claim, const Census& census);
VerificationReport verify_claim(const std::string& claim, const ClaimScope& scope);

/// True if some 2-cell equitable partition of g has quotient [[1, i], [j, 0]]
/// (in either cell order) with i * j == b.
bool has_one_ij_partition(const Graph& g, std::int64_t b);

/// Every vertex falls into one of four classes by (degree, neighbour degree
/// multiset): (4; 2,2,2,3), (3; 2,2,4), (3; 2,3,3), (2; 3,4).
bool matches_b15_pattern(const Graph& g);

/// Connected semi-regular bipartite graphs on n vertices with unequal part
/// degrees, by direct biadjacency enumeration (n <= 10).
std::vector<Graph> semiregular_bipartite_graphs(int n);

}  // namespace mainspectra
