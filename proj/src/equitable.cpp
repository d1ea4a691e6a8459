#include "mainspectra/equitable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace mainspectra {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// ---- partitions ------------------------------------------------------------

void validate_assignment(const std::vector<int>& cell_of, int& r, std::vector<int>& sizes) {
    r = 0;
    for (int c : cell_of) {
        if (c < 0) throw InvalidPartition("negative cell index");
        r = std::max(r, c + 1);
    }
    sizes.assign(static_cast<std::size_t>(r), 0);
    for (int c : cell_of) ++sizes[static_cast<std::size_t>(c)];
    for (int i = 0; i < r; ++i)
        if (sizes[static_cast<std::size_t>(i)] == 0) throw InvalidPartition("cell " + std::to_string(i) + " is empty");
}

// ---- exact fields for eigenvector extraction -------------------------------

std::int64_t to_i64(const cpp_int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error("exact quotient arithmetic overflowed 64 bits");
    return v.convert_to<std::int64_t>();
}

Rational to_rational(const cpp_rational& v) {
    return Rational(to_i64(boost::multiprecision::numerator(v)), to_i64(boost::multiprecision::denominator(v)));
}

// p + q*sqrt(D) with D fixed and not a perfect square.
struct Quad {
    cpp_rational p, q;
    std::int64_t D = 0;

    bool is_zero() const { return p == 0 && q == 0; }
    Quad operator+(const Quad& o) const { return {p + o.p, q + o.q, D}; }
    Quad operator-(const Quad& o) const { return {p - o.p, q - o.q, D}; }
    Quad operator*(const Quad& o) const { return {p * o.p + q * o.q * D, p * o.q + q * o.p, D}; }
    Quad operator/(const Quad& o) const {
        const cpp_rational norm = o.p * o.p - o.q * o.q * D;
        const Quad conj{o.p / norm, -o.q / norm, D};
        return *this * conj;
    }
};

struct RationalField {
    using T = cpp_rational;
    static bool is_zero(const T& x) { return x == 0; }
};

struct QuadField {
    using T = Quad;
    static bool is_zero(const T& x) { return x.is_zero(); }
};

// Basis of the right nullspace of m (square, r x r).
template <class Field>
std::vector<std::vector<typename Field::T>> nullspace(std::vector<std::vector<typename Field::T>> m,
                                                      const typename Field::T& zero, const typename Field::T& one) {
    using T = typename Field::T;
    const int r = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < r && row < r; ++col) {
        int sel = -1;
        for (int i = row; i < r; ++i)
            if (!Field::is_zero(m[i][col])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        const T inv_head = m[row][col];
        for (int j = 0; j < r; ++j) m[row][j] = m[row][j] / inv_head;
        for (int i = 0; i < r; ++i) {
            if (i == row || Field::is_zero(m[i][col])) continue;
            const T f = m[i][col];
            for (int j = 0; j < r; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(r), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<T>> basis;
    for (int free = 0; free < r; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<T> v(static_cast<std::size_t>(r), zero);
        v[static_cast<std::size_t>(free)] = one;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[static_cast<std::size_t>(pivot_col[k])] = zero - m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial det(xI - C), coefficients lowest degree first, monic.
std::vector<cpp_int> characteristic_polynomial(const QuotientMatrix& q) {
    const int r = q.r;
    using Mat = std::vector<std::vector<cpp_int>>;
    Mat a(static_cast<std::size_t>(r), std::vector<cpp_int>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = q.c[i][j];

    std::vector<cpp_int> coeff(static_cast<std::size_t>(r + 1), 0);
    coeff[static_cast<std::size_t>(r)] = 1;
    Mat m(static_cast<std::size_t>(r), std::vector<cpp_int>(static_cast<std::size_t>(r), 0));
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{r-k+1} I, c_{r-k} = -tr(A M_k)/k
    for (int k = 1; k <= r; ++k) {
        Mat next(static_cast<std::size_t>(r), std::vector<cpp_int>(static_cast<std::size_t>(r), 0));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                cpp_int acc = 0;
                for (int l = 0; l < r; ++l) acc += a[i][l] * m[l][j];
                next[i][j] = acc;
            }
            next[i][i] += coeff[static_cast<std::size_t>(r - k + 1)];
        }
        m = std::move(next);
        cpp_int trace = 0;
        for (int i = 0; i < r; ++i)
            for (int l = 0; l < r; ++l) trace += a[i][l] * m[l][i];
        coeff[static_cast<std::size_t>(r - k)] = -trace / k;
    }
    return coeff;
}

cpp_int eval(const std::vector<cpp_int>& poly, const cpp_int& x) {
    cpp_int acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Divides by (x - root); poly(root) must be zero.
std::vector<cpp_int> deflate(const std::vector<cpp_int>& poly, const cpp_int& root) {
    const std::size_t deg = poly.size() - 1;
    std::vector<cpp_int> out(deg);
    cpp_int carry = 0;
    for (std::size_t i = deg; i-- > 0;) {
        carry = poly[i + 1] + carry * root;
        out[i] = carry;
    }
    return out;
}

std::vector<QuadNumber> to_quad_numbers(const std::vector<cpp_rational>& v) {
    // scale to a primitive integer vector with positive leading entry
    cpp_int lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
    std::vector<cpp_int> ints;
    cpp_int content = 0;
    for (const auto& x : v) {
        ints.push_back(boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x)));
        content = gcd(content, ints.back());
    }
    int sign = 1;
    for (const auto& x : ints)
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    std::vector<QuadNumber> out;
    for (const auto& x : ints) out.push_back({Rational(to_i64(sign * x / content)), Rational(0)});
    return out;
}

std::vector<QuadNumber> to_quad_numbers(const std::vector<Quad>& v) {
    std::vector<QuadNumber> out;
    for (const auto& x : v) out.push_back({to_rational(x.p), to_rational(x.q)});
    return out;
}

std::vector<std::vector<double>> numeric_eigenvectors(const QuotientMatrix& q, double lambda, int multiplicity) {
    const int r = q.r;
    Eigen::MatrixXd m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = q.c[i][j] - (i == j ? lambda : 0.0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    std::vector<std::vector<double>> out;
    const auto& sv = svd.singularValues();
    for (int k = 0; k < multiplicity; ++k) {
        const int col = r - 1 - k;
        if (k > 0 && sv(col) > 1e-6 * std::max(1.0, sv(0))) break;
        std::vector<double> vec(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) vec[static_cast<std::size_t>(i)] = svd.matrixV()(i, col);
        out.push_back(std::move(vec));
    }
    return out;
}

}  // namespace

// ---- Partition / QuotientMatrix --------------------------------------------

Partition::Partition(std::vector<int> assignment) : cell_of(std::move(assignment)) {
    validate_assignment(cell_of, r, cell_sizes);
}

Partition Partition::from_cells(int n, const std::vector<std::vector<int>>& cells) {
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (int v : cells[i]) {
            if (v < 0 || v >= n) throw InvalidPartition("cell member out of range");
            if (assignment[static_cast<std::size_t>(v)] != -1) throw InvalidPartition("vertex in two cells");
            assignment[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    if (std::find(assignment.begin(), assignment.end(), -1) != assignment.end())
        throw InvalidPartition("cells do not cover every vertex");
    return Partition(std::move(assignment));
}

std::vector<std::vector<int>> Partition::cells() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(r));
    for (int v = 0; v < order(); ++v) out[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

Graph::Row Partition::cell_mask(int i) const {
    Graph::Row m;
    for (int v = 0; v < order(); ++v)
        if (cell_of[static_cast<std::size_t>(v)] == i) m.set(v);
    return m;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.order() != order()) return false;
    std::vector<int> image(static_cast<std::size_t>(r), -1);
    for (int v = 0; v < order(); ++v) {
        int& slot = image[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(v)])];
        const int target = coarser.cell_of[static_cast<std::size_t>(v)];
        if (slot == -1) slot = target;
        else if (slot != target) return false;
    }
    return true;
}

QuotientMatrix::QuotientMatrix(std::vector<std::vector<int>> rows) : r(static_cast<int>(rows.size())), c(std::move(rows)) {
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != r) throw InvalidPartition("quotient matrix must be square");
}

bool QuotientEigen::matches(const Surd& value, double tol) const {
    switch (kind) {
        case Kind::Rational: return value == rational_value;
        case Kind::Quadratic: return value == surd_value;
        case Kind::Approximate: return std::abs(approx - value.approx()) <= tol * std::max(1.0, std::abs(approx));
    }
    return false;
}

// ---- equitable partitions --------------------------------------------------

std::optional<QuotientMatrix> is_equitable(const Graph& g, const Partition& p) {
    if (p.order() != g.order()) throw InvalidPartition("partition order does not match the graph");
    std::vector<Graph::Row> masks;
    for (int i = 0; i < p.r; ++i) masks.push_back(p.cell_mask(i));

    std::vector<std::vector<int>> c(static_cast<std::size_t>(p.r), std::vector<int>(static_cast<std::size_t>(p.r), -1));
    for (int v = 0; v < g.order(); ++v) {
        auto& row = c[static_cast<std::size_t>(p.cell_of[static_cast<std::size_t>(v)])];
        for (int j = 0; j < p.r; ++j) {
            const int count = intersection_count(g.row(v), masks[static_cast<std::size_t>(j)]);
            if (row[static_cast<std::size_t>(j)] == -1) row[static_cast<std::size_t>(j)] = count;
            else if (row[static_cast<std::size_t>(j)] != count) return std::nullopt;
        }
    }
    return QuotientMatrix(std::move(c));
}

EquitableResult coarsest_equitable(const Graph& g) {
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n), 0);
    int r = n > 0 ? 1 : 0;
    while (true) {
        std::vector<Graph::Row> masks(static_cast<std::size_t>(r));
        for (int v = 0; v < n; ++v) masks[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(v)])].set(v);

        std::map<std::vector<int>, int> ids;
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{cell_of[static_cast<std::size_t>(v)]};
            for (int j = 0; j < r; ++j) key.push_back(intersection_count(g.row(v), masks[static_cast<std::size_t>(j)]));
            auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<int>(ids.size()));
            next[static_cast<std::size_t>(v)] = it->second;
        }
        const int next_r = static_cast<int>(ids.size());
        cell_of = std::move(next);
        if (next_r == r) break;
        r = next_r;
    }
    Partition p(cell_of);
    auto q = is_equitable(g, p);
    return {std::move(p), std::move(*q)};
}

bool check_commutation(const Graph& g, const Partition& p, const QuotientMatrix& q) {
    if (p.order() != g.order() || q.r != p.r) return false;
    for (int v = 0; v < g.order(); ++v) {
        const int cell = p.cell_of[static_cast<std::size_t>(v)];
        for (int j = 0; j < p.r; ++j)
            if (intersection_count(g.row(v), p.cell_mask(j)) != q.c[static_cast<std::size_t>(cell)][static_cast<std::size_t>(j)])
                return false;
    }
    return true;
}

namespace {

template <class Visit>
void for_each_two_cell(const Graph& g, Visit&& visit) {
    const int n = g.order();
    if (n > kMaxTwoCellOrder) throw Error("two-cell search is limited to " + std::to_string(kMaxTwoCellOrder) + " vertices");
    if (n < 2) return;
    // n <= 24, so single words suffice here
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) row[static_cast<std::size_t>(v)] = g.row(v).word(0);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::map<int, std::uint64_t> by_degree;
    for (int v = 0; v < n; ++v) by_degree[g.degree(v)] |= std::uint64_t{1} << v;
    auto degree_class = [&](int v) { return by_degree[g.degree(v)]; };

    // vertex 0 is fixed in cell 0; the other n-1 vertices choose freely
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t bits = 0; bits + 1 < count; ++bits) {
        const std::uint64_t cell0 = 1 | (bits << 1);
        const std::uint64_t cell1 = all & ~cell0;
        if ((cell0 & ~degree_class(0)) != 0) continue;
        if ((cell1 & ~degree_class(std::countr_zero(cell1))) != 0) continue;

        int c[2][2] = {{-1, -1}, {-1, -1}};
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const int i = (cell0 >> v) & 1U ? 0 : 1;
            const int into0 = std::popcount(row[static_cast<std::size_t>(v)] & cell0);
            const int into1 = std::popcount(row[static_cast<std::size_t>(v)] & cell1);
            if (c[i][0] == -1) {
                c[i][0] = into0;
                c[i][1] = into1;
            } else if (c[i][0] != into0 || c[i][1] != into1) {
                ok = false;
            }
        }
        if (!ok) continue;
        std::vector<int> assignment(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) assignment[static_cast<std::size_t>(v)] = (cell0 >> v) & 1U ? 0 : 1;
        if (!visit(EquitableResult{Partition(std::move(assignment)), QuotientMatrix({{c[0][0], c[0][1]}, {c[1][0], c[1][1]}})}))
            return;
    }
}

}  // namespace

std::vector<EquitableResult> two_cell_equitable_partitions(const Graph& g) {
    std::vector<EquitableResult> out;
    for_each_two_cell(g, [&](EquitableResult r) {
        out.push_back(std::move(r));
        return true;
    });
    return out;
}

bool has_two_cell_equitable(const Graph& g) {
    bool found = false;
    for_each_two_cell(g, [&](const EquitableResult&) {
        found = true;
        return false;
    });
    return found;
}

// ---- quotient spectra ------------------------------------------------------

std::vector<QuotientEigen> quotient_spectrum(const QuotientMatrix& q) {
    const int r = q.r;
    if (r < 1) throw Error("empty quotient matrix");
    if (r > kMaxQuotientOrder) throw Error("quotient spectrum is limited to " + std::to_string(kMaxQuotientOrder) + " cells");

    std::vector<cpp_int> poly = characteristic_polynomial(q);
    // |lambda| <= max row sum for a nonnegative matrix; check the bound generously
    int bound = 0;
    for (const auto& row : q.c) bound = std::max(bound, std::accumulate(row.begin(), row.end(), 0, [](int acc, int x) { return acc + std::abs(x); }));

    std::vector<QuotientEigen> out;
    for (int root = bound; root >= -bound; --root) {
        int mult = 0;
        while (poly.size() > 1 && eval(poly, root) == 0) {
            poly = deflate(poly, root);
            ++mult;
        }
        if (mult == 0) continue;
        QuotientEigen e;
        e.kind = QuotientEigen::Kind::Rational;
        e.rational_value = Rational(root);
        e.approx = root;
        e.multiplicity = mult;
        std::vector<std::vector<cpp_rational>> m(static_cast<std::size_t>(r), std::vector<cpp_rational>(static_cast<std::size_t>(r)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m[i][j] = q.c[i][j] - (i == j ? root : 0);
        for (const auto& v : nullspace<RationalField>(m, cpp_rational(0), cpp_rational(1))) e.exact_basis.push_back(to_quad_numbers(v));
        out.push_back(std::move(e));
    }

    const std::size_t rest = poly.size() - 1;
    if (rest == 2) {
        // x^2 + c1 x + c0 with irrational roots (-c1 ± sqrt(c1^2 - 4 c0)) / 2
        const std::int64_t c1 = to_i64(poly[1]);
        const std::int64_t c0 = to_i64(poly[0]);
        const std::int64_t disc = c1 * c1 - 4 * c0;
        for (int sign : {1, -1}) {
            QuotientEigen e;
            e.kind = QuotientEigen::Kind::Quadratic;
            e.surd_value = Surd(-c1, disc, sign);
            e.approx = e.surd_value.approx();
            const Quad lambda{cpp_rational(-c1) / 2, cpp_rational(sign) / 2, disc};
            std::vector<std::vector<Quad>> m(static_cast<std::size_t>(r), std::vector<Quad>(static_cast<std::size_t>(r)));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    m[i][j] = Quad{cpp_rational(q.c[i][j]), 0, disc};
                    if (i == j) m[i][j] = m[i][j] - lambda;
                }
            for (const auto& v : nullspace<QuadField>(m, Quad{0, 0, disc}, Quad{1, 0, disc})) e.exact_basis.push_back(to_quad_numbers(v));
            out.push_back(std::move(e));
        }
    } else if (rest > 2) {
        const int d = static_cast<int>(rest);
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
        for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < d; ++i) companion(i, d - 1) = -poly[static_cast<std::size_t>(i)].convert_to<double>();
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
        std::vector<double> roots;
        for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i).real());
        std::sort(roots.begin(), roots.end(), std::greater<>());
        for (std::size_t i = 0; i < roots.size();) {
            std::size_t j = i + 1;
            while (j < roots.size() && std::abs(roots[j] - roots[i]) < 1e-7) ++j;
            QuotientEigen e;
            e.kind = QuotientEigen::Kind::Approximate;
            e.multiplicity = static_cast<int>(j - i);
            double mean = 0;
            for (std::size_t k = i; k < j; ++k) mean += roots[k];
            e.approx = mean / static_cast<double>(j - i);
            e.approx_basis = numeric_eigenvectors(q, e.approx, e.multiplicity);
            out.push_back(std::move(e));
            i = j;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const QuotientEigen& x, const QuotientEigen& y) { return x.approx > y.approx; });
    return out;
}

std::vector<QuotientEigen> main_candidates_via_divisor(const Graph& g, const Partition& p) {
    auto q = is_equitable(g, p);
    if (!q) throw InvalidPartition("partition is not equitable");
    std::vector<QuotientEigen> out;
    for (auto& e : quotient_spectrum(*q)) {
        bool nonzero = false;
        if (e.exact()) {
            for (const auto& v : e.exact_basis) {
                Rational rp{0}, rq{0};
                for (int i = 0; i < p.r; ++i) {
                    rp += v[static_cast<std::size_t>(i)].p * p.cell_sizes[static_cast<std::size_t>(i)];
                    rq += v[static_cast<std::size_t>(i)].q * p.cell_sizes[static_cast<std::size_t>(i)];
                }
                // rp + rq*sqrt(D) = 0 with D non-square forces rp = rq = 0
                if (rp.numerator() != 0 || rq.numerator() != 0) nonzero = true;
            }
        } else {
            for (const auto& v : e.approx_basis) {
                double sum = 0, scale = 0;
                for (int i = 0; i < p.r; ++i) {
                    sum += v[static_cast<std::size_t>(i)] * p.cell_sizes[static_cast<std::size_t>(i)];
                    scale += std::abs(v[static_cast<std::size_t>(i)]) * p.cell_sizes[static_cast<std::size_t>(i)];
                }
                if (std::abs(sum) > QuotientEigen::kApproxTolerance * scale) nonzero = true;
            }
        }
        if (nonzero) out.push_back(std::move(e));
    }
    return out;
}

}  // namespace mainspectra
