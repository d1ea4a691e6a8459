#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mainspectra/graph.hpp"
#include "mainspectra/surd.hpp"

namespace mainspectra {

/// The integer pair (a, b) with sum_{u in N(v)} d(u) = a d(v) + b for every v.
struct MainPair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const MainPair&, const MainPair&) = default;
    friend auto operator<=>(const MainPair&, const MainPair&) = default;
};

struct MainSignature {
    int main_count = 1;
    std::optional<MainPair> pair;  // present iff main_count == 2
    std::optional<Surd> lambda1;   // larger main eigenvalue
    std::optional<Surd> lambda2;

    bool two_main() const { return main_count == 2; }
};

/// A^2 j and A j agree with a rational (a, b) that is not integral. This
/// cannot happen for a correct implementation; the graph is carried along.
class AnomalyNonIntegerPair : public Error {
public:
    AnomalyNonIntegerPair(std::string graph6, Rational a, Rational b);
    const std::string& graph6() const { return graph6_; }

private:
    std::string graph6_;
};

/// Entry v is the sum of the degrees of the neighbours of v, i.e. (A·A·j)_v.
std::vector<std::int64_t> neighbor_degree_sums(const Graph& g);

MainSignature two_main_signature(const Graph& g);

/// Rank of the walk matrix [j, Aj, A^2 j, ...] over Q.
int count_main_eigenvalues(const Graph& g);

/// Roots of x^2 - a x - b, larger first.
std::pair<Surd, Surd> main_eigenvalue_pair(std::int64_t a, std::int64_t b);

/// lambda2 < min degree < mean degree < lambda1 < max degree, decided exactly.
bool sandwich_check(const Graph& g, const MainSignature& sig);

}  // namespace mainspectra
