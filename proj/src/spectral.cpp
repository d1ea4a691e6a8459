#include "mainspectra/spectral.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace mainspectra {

namespace {

using boost::multiprecision::cpp_int;

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

AnomalyNonIntegerPair::AnomalyNonIntegerPair(std::string graph6, Rational a, Rational b)
    : Error("non-integer main pair (a, b) = (" + rational_text(a) + ", " + rational_text(b) + ") for graph " +
            graph6),
      graph6_(std::move(graph6)) {}

std::vector<std::int64_t> neighbor_degree_sums(const Graph& g) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.row(v)) out[static_cast<std::size_t>(v)] += g.degree(w);
    return out;
}

MainSignature two_main_signature(const Graph& g) {
    MainSignature sig;
    const int n = g.order();
    if (n == 0 || is_regular(g)) return sig;

    const auto sums = neighbor_degree_sums(g);
    auto deg = [&](int v) { return static_cast<std::int64_t>(g.degree(v)); };
    auto sum = [&](int v) { return sums[static_cast<std::size_t>(v)]; };

    int j = 1;
    while (deg(j) == deg(0)) ++j;
    const std::int64_t dd = deg(0) - deg(j);
    const std::int64_t ds = sum(0) - sum(j);
    // sums must lie on the line through (d0, s0) and (dj, sj)
    for (int v = 0; v < n; ++v) {
        if ((sum(v) - sum(0)) * dd != ds * (deg(v) - deg(0))) {
            sig.main_count = count_main_eigenvalues(g);
            return sig;
        }
    }
    const Rational a(ds, dd);
    const Rational b = Rational(sum(0)) - a * deg(0);
    if (a.denominator() != 1 || b.denominator() != 1) throw AnomalyNonIntegerPair(write_graph6(g), a, b);

    sig.main_count = 2;
    sig.pair = MainPair{a.numerator(), b.numerator()};
    auto [l1, l2] = main_eigenvalue_pair(sig.pair->a, sig.pair->b);
    sig.lambda1 = l1;
    sig.lambda2 = l2;
    return sig;
}

int count_main_eigenvalues(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;

    // Incremental fraction-free elimination: each basis vector carries its pivot row.
    struct Reduced {
        std::vector<cpp_int> v;
        int pivot;
    };
    std::vector<Reduced> basis;
    std::vector<cpp_int> walk(static_cast<std::size_t>(n), 1);

    for (int k = 0; k < n; ++k) {
        std::vector<cpp_int> v = walk;
        for (const Reduced& b : basis) {
            const cpp_int& head = b.v[static_cast<std::size_t>(b.pivot)];
            const cpp_int factor = v[static_cast<std::size_t>(b.pivot)];
            if (factor == 0) continue;
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = head * v[static_cast<std::size_t>(i)] - factor * b.v[static_cast<std::size_t>(i)];
            cpp_int content = 0;
            for (const auto& x : v) content = gcd(content, x);
            if (content > 1)
                for (auto& x : v) x /= content;
        }
        int pivot = -1;
        for (int i = 0; i < n && pivot < 0; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) pivot = i;
        if (pivot < 0) break;
        basis.push_back({std::move(v), pivot});

        std::vector<cpp_int> next(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int w : g.row(i)) next[static_cast<std::size_t>(i)] += walk[static_cast<std::size_t>(w)];
        walk = std::move(next);
    }
    return static_cast<int>(basis.size());
}

std::pair<Surd, Surd> main_eigenvalue_pair(std::int64_t a, std::int64_t b) {
    const std::int64_t disc = a * a + 4 * b;
    if (disc <= 0) throw Error("main eigenvalue pair needs a^2 + 4b > 0");
    return {Surd(a, disc, 1), Surd(a, disc, -1)};
}

bool sandwich_check(const Graph& g, const MainSignature& sig) {
    if (!sig.two_main() || !sig.lambda1 || !sig.lambda2) throw Error("sandwich check needs a two-main signature");
    const DegreeProfile p = degree_profile(g);
    return *sig.lambda2 < Rational(p.min_degree) && Rational(p.min_degree) < p.mean && *sig.lambda1 > p.mean &&
           *sig.lambda1 < Rational(p.max_degree);
}

}  // namespace mainspectra
