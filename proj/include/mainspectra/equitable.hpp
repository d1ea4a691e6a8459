#pragma once

#include <optional>
#include <vector>

#include "mainspectra/graph.hpp"
#include "mainspectra/surd.hpp"

namespace mainspectra {

class InvalidPartition : public Error {
public:
    using Error::Error;
};

/// Vertex partition with contiguous, nonempty cells 0..r-1.
struct Partition {
    std::vector<int> cell_of;
    int r = 0;
    std::vector<int> cell_sizes;

    Partition() = default;
    explicit Partition(std::vector<int> assignment);
    static Partition from_cells(int n, const std::vector<std::vector<int>>& cells);

    int order() const { return static_cast<int>(cell_of.size()); }
    std::vector<std::vector<int>> cells() const;
    Graph::Row cell_mask(int i) const;

    /// True if every cell of *this lies inside a cell of `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Parameter matrix c[i][j] = |N(u) ∩ C_j| for any u in C_i.
struct QuotientMatrix {
    int r = 0;
    std::vector<std::vector<int>> c;

    QuotientMatrix() = default;
    explicit QuotientMatrix(std::vector<std::vector<int>> rows);

    friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;
};

struct EquitableResult {
    Partition partition;
    QuotientMatrix quotient;
};

std::optional<QuotientMatrix> is_equitable(const Graph& g, const Partition& p);

/// Refinement from the unit partition; cells ordered by their first vertex.
EquitableResult coarsest_equitable(const Graph& g);

/// A·P == P·Q entrywise, P the character matrix of p.
bool check_commutation(const Graph& g, const Partition& p, const QuotientMatrix& q);

/// Exhaustive search over all 2^(n-1)-1 bipartitions (n <= kMaxTwoCellOrder).
inline constexpr int kMaxTwoCellOrder = 24;
std::vector<EquitableResult> two_cell_equitable_partitions(const Graph& g);
bool has_two_cell_equitable(const Graph& g);

/// p + q*sqrt(D), D implied by the owning eigenvalue (q == 0 for rational ones).
struct QuadNumber {
    Rational p{0};
    Rational q{0};
    friend bool operator==(const QuadNumber&, const QuadNumber&) = default;
};

struct QuotientEigen {
    enum class Kind { Rational, Quadratic, Approximate };

    Kind kind = Kind::Rational;
    Rational rational_value{0};  // Kind::Rational
    Surd surd_value;             // Kind::Quadratic
    double approx = 0.0;         // always filled
    int multiplicity = 1;

    std::vector<std::vector<QuadNumber>> exact_basis;  // exact kinds
    std::vector<std::vector<double>> approx_basis;     // Kind::Approximate, unit vectors

    bool exact() const { return kind != Kind::Approximate; }
    /// Exact when both sides are exact, otherwise within `tol`.
    bool matches(const Surd& value, double tol = kApproxTolerance) const;

    static constexpr double kApproxTolerance = 1e-9;
};

inline constexpr int kMaxQuotientOrder = 8;

/// Eigenvalues (with eigenspace bases) of an integer quotient matrix, r <= 8.
/// Integer roots and a residual quadratic factor are exact; anything left over
/// is approximated and flagged.
std::vector<QuotientEigen> quotient_spectrum(const QuotientMatrix& q);

/// Quotient eigenvalues owning an eigenvector x with sum_i |C_i| x_i != 0.
/// Every main eigenvalue of g is among them.
std::vector<QuotientEigen> main_candidates_via_divisor(const Graph& g, const Partition& p);

}  // namespace mainspectra
