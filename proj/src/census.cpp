#include "mainspectra/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <istream>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace mainspectra {

// ---- canonical form ---------------------------------------------------------

namespace {

struct CanonicalSearch {
    const Graph& g;
    int n;
    std::array<int, kMaxCanonicalOrder> order{};
    std::array<std::uint32_t, kMaxCanonicalOrder> best{};

    // Column j of the relabeled upper triangle: bit (j-1-i) = adj(order[i], w).
    std::uint32_t column(int j, int w) const {
        std::uint32_t c = 0;
        for (int i = 0; i < j; ++i) c = (c << 1) | (g.adjacent(order[static_cast<std::size_t>(i)], w) ? 1U : 0U);
        return c;
    }

    // Invariant: on entry best[0..j) equals the current prefix.
    void search(int j, std::uint64_t used) {
        if (j == n) return;
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1U) continue;
            const std::uint32_t c = column(j, w);
            if (c > best[static_cast<std::size_t>(j)]) continue;
            if (c < best[static_cast<std::size_t>(j)]) {
                best[static_cast<std::size_t>(j)] = c;
                for (int k = j + 1; k < n; ++k) best[static_cast<std::size_t>(k)] = UINT32_MAX;
            }
            order[static_cast<std::size_t>(j)] = w;
            search(j + 1, used | (std::uint64_t{1} << w));
        }
    }
};

}  // namespace

std::string canonical_key(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) throw Error("canonical_key is limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
    CanonicalSearch cs{g, n};
    cs.best.fill(UINT32_MAX);
    cs.search(0, 0);

    std::vector<Graph::Row> rows(static_cast<std::size_t>(n));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((cs.best[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1U) {
                rows[static_cast<std::size_t>(i)].set(j);
                rows[static_cast<std::size_t>(j)].set(i);
            }
    return write_graph6(Graph(n, std::move(rows)));
}

// ---- classification ---------------------------------------------------------

std::optional<CensusRecord> classify(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return std::nullopt;
    MainSignature sig = two_main_signature(g);
    if (!sig.two_main()) return std::nullopt;
    CensusRecord rec;
    rec.g6 = write_graph6(g);
    rec.n = g.order();
    rec.m = g.size();
    rec.signature = std::move(sig);
    if (g.order() <= kMaxCanonicalOrder) rec.canonical = canonical_key(g);
    return rec;
}

// ---- exhaustive enumeration -------------------------------------------------

namespace {

std::uint64_t prefix_count(int n) {
    const int bits = (n - 1) * (n - 2) / 2;
    return std::uint64_t{1} << bits;
}

}  // namespace

std::vector<CensusChunk> census_chunks(int n, int count) {
    const std::uint64_t total = prefix_count(n);
    const std::uint64_t parts = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(count, 1)), 1, total);
    std::vector<CensusChunk> out;
    for (std::uint64_t p = 0; p < parts; ++p) out.push_back({n, total * p / parts, total * (p + 1) / parts});
    return out;
}

std::vector<Graph> scan_chunk(const CensusChunk& chunk) {
    const int n = chunk.n;
    if (n < 2 || n > kMaxNativeCensusOrder) throw Error("native enumeration covers 2 <= n <= 8");
    const int last = n - 1;

    // graph6 bit k of the prefix -> (i, j), i < j < n-1
    std::vector<std::pair<int, int>> pair_of;
    for (int j = 1; j < last; ++j)
        for (int i = 0; i < j; ++i) pair_of.emplace_back(i, j);

    std::vector<Graph> out;
    std::array<std::uint32_t, 8> row{};
    std::array<int, 8> dh{}, sh{}, d{}, s{};

    for (std::uint64_t prefix = chunk.begin; prefix < chunk.end; ++prefix) {
        row.fill(0);
        for (std::uint64_t bits = prefix; bits != 0; bits &= bits - 1) {
            auto [i, j] = pair_of[static_cast<std::size_t>(std::countr_zero(bits))];
            row[static_cast<std::size_t>(i)] |= 1U << j;
            row[static_cast<std::size_t>(j)] |= 1U << i;
        }
        std::uint32_t required = 0;  // isolated in the prefix graph: must touch the last vertex
        for (int v = 0; v < last; ++v) {
            dh[static_cast<std::size_t>(v)] = std::popcount(row[static_cast<std::size_t>(v)]);
            if (dh[static_cast<std::size_t>(v)] == 0) required |= 1U << v;
        }
        for (int v = 0; v < last; ++v) {
            int acc = 0;
            for (std::uint32_t r = row[static_cast<std::size_t>(v)]; r != 0; r &= r - 1) acc += dh[static_cast<std::size_t>(std::countr_zero(r))];
            sh[static_cast<std::size_t>(v)] = acc;
        }

        const std::uint32_t full = (1U << last) - 1;
        // supersets of `required` in increasing order; S = 0 isolates the last vertex
        for (std::uint32_t nbrs = required;; nbrs = ((nbrs + 1) | required) & full) {
            if (nbrs != 0) {
                const int dl = std::popcount(nbrs);
                int sl = dl;
                for (int v = 0; v < last; ++v) {
                    const int in = (nbrs >> v) & 1U;
                    d[static_cast<std::size_t>(v)] = dh[static_cast<std::size_t>(v)] + in;
                    s[static_cast<std::size_t>(v)] = sh[static_cast<std::size_t>(v)] + std::popcount(row[static_cast<std::size_t>(v)] & nbrs) + in * dl;
                    if (in) sl += dh[static_cast<std::size_t>(v)];
                }
                d[static_cast<std::size_t>(last)] = dl;
                s[static_cast<std::size_t>(last)] = sl;

                int other = 1;
                while (other < n && d[static_cast<std::size_t>(other)] == d[0]) ++other;
                if (other < n) {
                    const int dd = d[0] - d[static_cast<std::size_t>(other)];
                    const int ds = s[0] - s[static_cast<std::size_t>(other)];
                    bool on_line = true;
                    for (int v = 1; v < n && on_line; ++v)
                        on_line = (s[static_cast<std::size_t>(v)] - s[0]) * dd == ds * (d[static_cast<std::size_t>(v)] - d[0]);
                    if (on_line) {
                        std::vector<Graph::Row> rows(static_cast<std::size_t>(n));
                        for (int v = 0; v < last; ++v)
                            rows[static_cast<std::size_t>(v)] = Graph::Row::from_word(row[static_cast<std::size_t>(v)] | (((nbrs >> v) & 1U) << last));
                        rows[static_cast<std::size_t>(last)] = Graph::Row::from_word(nbrs);
                        Graph g(n, std::move(rows));
                        if (is_connected(g)) out.push_back(std::move(g));
                    }
                }
            }
            if (nbrs == full) break;
        }
    }
    return out;
}

void enumerate_members(const CensusOptions& opts, const RecordSink& sink) {
    if (opts.max_n > kMaxNativeCensusOrder)
        throw Error("native enumeration stops at n = 8; feed larger orders through graph6 ingestion");
    const int jobs = std::max(1, opts.jobs);
    std::unordered_set<std::string> seen;

    for (int n = std::max(2, opts.min_n); n <= opts.max_n; ++n) {
        // more chunks than workers keeps the load balanced
        const auto chunks = census_chunks(n, jobs == 1 ? 1 : jobs * 16);
        std::vector<std::vector<CensusRecord>> results(chunks.size());
        auto work = [&](std::size_t idx) {
            for (const Graph& g : scan_chunk(chunks[idx])) {
                auto rec = classify(g);
                if (!rec) continue;
                if (opts.filter && rec->signature.pair != opts.filter) continue;
                results[idx].push_back(std::move(*rec));
            }
        };
        if (jobs == 1) {
            for (std::size_t i = 0; i < chunks.size(); ++i) work(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (int w = 0; w < jobs; ++w)
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < chunks.size(); i = next++) work(i);
                });
        }
        for (auto& part : results)
            for (auto& rec : part) {
                if (opts.dedup && !seen.insert(rec.canonical).second) continue;
                sink(rec);
            }
    }
}

std::vector<CensusRecord> collect_members(const CensusOptions& opts) {
    std::vector<CensusRecord> out;
    enumerate_members(opts, [&](const CensusRecord& r) { out.push_back(r); });
    return out;
}

IngestResult ingest_graph6(std::istream& in, const std::optional<MainPair>& filter, const RecordSink& sink,
                           std::vector<Graph>* all_graphs) {
    IngestResult res;
    std::string line;
    while (std::getline(in, line)) {
        ++res.lines;
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const Error& e) {
            res.errors.push_back({res.lines, e.what()});
            continue;
        }
        ++res.parsed;
        if (all_graphs) all_graphs->push_back(g);
        auto rec = classify(g);
        if (!rec) continue;
        if (filter && rec->signature.pair != filter) continue;
        sink(*rec);
    }
    return res;
}

}  // namespace mainspectra
