#include "mainspectra/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mainspectra/bounds.hpp"
#include "mainspectra/census.hpp"
#include "mainspectra/claims.hpp"
#include "mainspectra/equitable.hpp"
#include "mainspectra/families.hpp"
#include "mainspectra/spectral.hpp"

namespace mainspectra::cli {

namespace {

using nlohmann::json;

std::string decimal(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string rational_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json surd_json(const Surd& s) {
    return {{"s", s.s}, {"D", s.D}, {"sign", s.sign}, {"text", s.str()}, {"approx", s.approx()}};
}

json quotient_json(const QuotientMatrix& q) { return q.c; }

std::string quotient_text(const QuotientMatrix& q) {
    std::string out;
    for (int i = 0; i < q.r; ++i) {
        if (i) out += ';';
        for (int j = 0; j < q.r; ++j) {
            if (j) out += ',';
            out += std::to_string(q.c[i][j]);
        }
    }
    return out;
}

std::string cells_text(const Partition& p) {
    std::string out;
    bool first_cell = true;
    for (const auto& cell : p.cells()) {
        if (!first_cell) out += '|';
        first_cell = false;
        for (std::size_t k = 0; k < cell.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(cell[k]);
        }
    }
    return out;
}

json eigen_json(const QuotientEigen& e) {
    json j{{"approx", e.approx}, {"multiplicity", e.multiplicity}};
    switch (e.kind) {
        case QuotientEigen::Kind::Rational:
            j["kind"] = "rational";
            j["value"] = rational_text(e.rational_value);
            break;
        case QuotientEigen::Kind::Quadratic:
            j["kind"] = "quadratic";
            j["value"] = surd_json(e.surd_value);
            break;
        case QuotientEigen::Kind::Approximate: j["kind"] = "approximate"; break;
    }
    return j;
}

std::string eigen_text(const QuotientEigen& e) {
    switch (e.kind) {
        case QuotientEigen::Kind::Rational: return rational_text(e.rational_value);
        case QuotientEigen::Kind::Quadratic: return e.surd_value.str();
        case QuotientEigen::Kind::Approximate: return "~" + decimal(e.approx);
    }
    return "";
}

struct Input {
    std::string path;  // empty or "-" for the stream given to run()
};

// Calls fn(graph, line_number) per non-blank line; parse errors go to err.
template <class Fn>
bool for_each_graph(const Input& src, std::istream& in, std::ostream& err, Fn&& fn) {
    std::ifstream file;
    std::istream* stream = &in;
    if (!src.path.empty() && src.path != "-") {
        file.open(src.path);
        if (!file) {
            err << "cannot open " << src.path << "\n";
            return false;
        }
        stream = &file;
    }
    bool ok = true;
    std::string line;
    std::size_t number = 0;
    while (std::getline(*stream, line)) {
        ++number;
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        if (line.empty()) continue;
        try {
            const Graph g = parse_graph6(line);
            if (!fn(g, number)) ok = false;
        } catch (const Error& e) {
            err << "line " << number << ": " << e.what() << "\n";
            ok = false;
        }
    }
    return ok;
}

json record_json(const CensusRecord& r) {
    return {{"g6", r.g6},
            {"n", r.n},
            {"m", r.m},
            {"a", r.signature.pair->a},
            {"b", r.signature.pair->b},
            {"lambda1", surd_json(*r.signature.lambda1)},
            {"lambda2", surd_json(*r.signature.lambda2)}};
}

void print_record(std::ostream& out, const CensusRecord& r, bool as_json) {
    if (as_json) {
        out << record_json(r).dump() << "\n";
        return;
    }
    out << r.g6 << '\t' << r.n << '\t' << r.m << '\t' << r.signature.pair->a << '\t' << r.signature.pair->b << '\t'
        << decimal(r.signature.lambda1->approx()) << '\t' << decimal(r.signature.lambda2->approx()) << "\n";
}

bool analyze_one(const Graph& g, std::ostream& out, bool as_json) {
    const bool connected = is_connected(g);
    const MainSignature sig = two_main_signature(g);
    std::optional<std::pair<Surd, Surd>> bounds;
    std::string bounds_error;
    if (sig.pair) {
        try {
            bounds = degree_bounds(sig.pair->a, sig.pair->b, degree_profile(g).min_degree);
        } catch (const Error& e) {
            bounds_error = e.what();
        }
    }
    const bool sandwich = sig.two_main() && connected && sandwich_check(g, sig);
    if (as_json) {
        json j{{"g6", write_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"connected", connected},
               {"main_count", sig.main_count}};
        if (sig.pair) {
            j["a"] = sig.pair->a;
            j["b"] = sig.pair->b;
            j["lambda1"] = surd_json(*sig.lambda1);
            j["lambda2"] = surd_json(*sig.lambda2);
            j["sandwich"] = sandwich;
            if (bounds) {
                j["delta_star"] = surd_json(bounds->first);
                j["Delta_star"] = surd_json(bounds->second);
            } else {
                j["bounds_error"] = bounds_error;
            }
        }
        out << j.dump() << "\n";
        return true;
    }
    out << write_graph6(g) << '\t' << g.order() << '\t' << g.size() << '\t' << (connected ? 1 : 0) << '\t'
        << sig.main_count;
    if (sig.pair) {
        out << '\t' << sig.pair->a << '\t' << sig.pair->b << '\t' << sig.lambda1->str() << '\t' << sig.lambda2->str();
        if (bounds) out << '\t' << bounds->first.str() << '\t' << bounds->second.str();
        else out << "\t-\t-";
        out << '\t' << (sandwich ? 1 : 0);
    } else {
        out << "\t-\t-\t-\t-\t-\t-\t-";
    }
    out << "\n";
    return true;
}

json certificate(const Witness& w) {
    const auto& c = w.construction;
    return {{"a", w.pair.a},
            {"b", w.pair.b},
            {"boundary", w.pair.boundary},
            {"recipe", describe(w.recipe)},
            {"n", c.graph.order()},
            {"m", c.graph.size()},
            {"connected", is_connected(c.graph)},
            {"partition", c.partition.cells()},
            {"quotient", quotient_json(c.quotient)},
            {"equitable", check_commutation(c.graph, c.partition, c.quotient)},
            {"lambda1", surd_json(*w.signature.lambda1)},
            {"lambda2", surd_json(*w.signature.lambda2)}};
}

json report_json(const VerificationReport& r) {
    return {{"claim", r.claim},
            {"scope", r.scope},
            {"status", r.pass ? "pass" : "fail"},
            {"checked", r.checked},
            {"members", r.members},
            {"counterexamples", r.counterexamples},
            {"detail", r.detail}};
}

void print_report(std::ostream& out, const VerificationReport& r, bool as_json) {
    if (as_json) {
        out << report_json(r).dump() << "\n";
        return;
    }
    out << "claim\t" << r.claim << "\n"
        << "scope\t" << r.scope << "\n"
        << "status\t" << (r.pass ? "pass" : "fail") << "\n"
        << "checked\t" << r.checked << "\n"
        << "members\t" << r.members.size() << "\n";
    for (const auto& m : r.members) out << "member\t" << m << "\n";
    out << "counterexamples\t" << r.counterexamples.size() << "\n";
    for (const auto& c : r.counterexamples) out << "counterexample\t" << c << "\n";
    if (!r.detail.empty()) out << "detail\t" << r.detail << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graphs with exactly two main eigenvalues", "mainspectra"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON lines with exact surds instead of TSV");

    Input input;
    auto add_input = [&](CLI::App* sub) { sub->add_option("--input", input.path, "graph6 file ('-' for stdin)"); };

    auto* analyze = app.add_subcommand("analyze", "signature, exact main eigenvalues and degree bounds per graph");
    add_input(analyze);

    std::int64_t a = 0, b = 0;
    std::string variant;
    auto* witness_cmd = app.add_subcommand("witness", "certified connected graph for a feasible (a,b)");
    witness_cmd->add_option("--a", a)->required();
    witness_cmd->add_option("--b", b)->required();
    witness_cmd->add_option("--variant", variant, "alternative parameter row")->check(CLI::IsMember(variant_ids()));

    int max_n = 4, min_n = 2, jobs = 1;
    const CLI::Validator native_order(
        [](std::string& v) -> std::string {
            int n = 0;
            if (!CLI::detail::lexical_cast(v, n) || n < 2) return "order must be an integer >= 2";
            if (n > kMaxNativeCensusOrder)
                return "native enumeration stops at n = " + std::to_string(kMaxNativeCensusOrder) +
                       "; feed larger orders as graph6 through --input";
            return {};
        },
        "ORDER<=8");
    bool labeled = false;
    auto* enumerate = app.add_subcommand("enumerate", "census of connected two-main graphs");
    enumerate->add_option("--max-n", max_n)->check(native_order);
    enumerate->add_option("--min-n", min_n)->check(native_order);
    auto* ea = enumerate->add_option("--a", a);
    auto* eb = enumerate->add_option("--b", b);
    ea->needs(eb);
    eb->needs(ea);
    enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    enumerate->add_flag("--labeled", labeled, "every labeled hit instead of one per isomorphism class");
    add_input(enumerate);

    auto* partition = app.add_subcommand("partition", "coarsest equitable partition and divisor main candidates");
    add_input(partition);

    auto* bounds = app.add_subcommand("bounds", "degree-bound audit per graph");
    add_input(bounds);

    std::string claim;
    auto* verify = app.add_subcommand("verify", "machine-check one classification claim");
    verify->add_option("--claim", claim)->required()->check(CLI::IsMember(claim_ids()));
    verify->add_option("--max-n", max_n)->check(native_order);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->add_option("--input", input.path, "extra graph6 members to include");

    auto* feasible = app.add_subcommand("feasible", "feasibility verdict for (a,b)");
    feasible->add_option("--a", a)->required();
    feasible->add_option("--b", b)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            return for_each_graph(input, in, err, [&](const Graph& g, std::size_t) { return analyze_one(g, out, as_json); })
                       ? 0
                       : 1;
        }

        if (witness_cmd->parsed()) {
            if (!is_feasible(a, b)) {
                err << "infeasible pair (" << a << "," << b << "): " << infeasibility_reason(a, b) << "\n";
                return 1;
            }
            const Witness w = variant.empty() ? witness(a, b) : witness(a, b, variant);
            const std::string g6 = write_graph6(w.construction.graph);
            if (as_json) {
                json j = certificate(w);
                j["g6"] = g6;
                out << j.dump() << "\n";
            } else {
                out << g6 << "\n" << certificate(w).dump() << "\n";
            }
            return 0;
        }

        if (enumerate->parsed()) {
            std::optional<MainPair> filter;
            if (ea->count() > 0) filter = MainPair{a, b};
            auto sink = [&](const CensusRecord& r) { print_record(out, r, as_json); };
            if (!input.path.empty()) {
                std::ifstream file;
                std::istream* stream = &in;
                if (input.path != "-") {
                    file.open(input.path);
                    if (!file) {
                        err << "cannot open " << input.path << "\n";
                        return 1;
                    }
                    stream = &file;
                }
                const IngestResult res = ingest_graph6(*stream, filter, sink);
                for (const auto& e : res.errors) err << "line " << e.line << ": " << e.message << "\n";
                return res.errors.empty() ? 0 : 1;
            }
            CensusOptions opts;
            opts.min_n = min_n;
            opts.max_n = max_n;
            opts.filter = filter;
            opts.jobs = jobs;
            opts.dedup = !labeled;
            enumerate_members(opts, sink);
            return 0;
        }

        if (partition->parsed()) {
            return for_each_graph(input, in, err,
                                  [&](const Graph& g, std::size_t) {
                                      const EquitableResult ep = coarsest_equitable(g);
                                      std::vector<QuotientEigen> cands;
                                      std::string note;
                                      if (ep.partition.r <= kMaxQuotientOrder)
                                          cands = main_candidates_via_divisor(g, ep.partition);
                                      else
                                          note = "quotient too large for the spectrum";
                                      if (as_json) {
                                          json j{{"g6", write_graph6(g)},
                                                 {"cells", ep.partition.cells()},
                                                 {"quotient", quotient_json(ep.quotient)}};
                                          json cj = json::array();
                                          for (const auto& e : cands) cj.push_back(eigen_json(e));
                                          j["main_candidates"] = cj;
                                          if (!note.empty()) j["note"] = note;
                                          out << j.dump() << "\n";
                                      } else {
                                          out << write_graph6(g) << '\t' << ep.partition.r << '\t'
                                              << cells_text(ep.partition) << '\t' << quotient_text(ep.quotient) << '\t';
                                          if (!note.empty()) out << '-';
                                          for (std::size_t k = 0; k < cands.size(); ++k)
                                              out << (k ? "," : "") << eigen_text(cands[k]);
                                          out << "\n";
                                      }
                                      return true;
                                  })
                       ? 0
                       : 1;
        }

        if (bounds->parsed()) {
            return for_each_graph(input, in, err,
                                  [&](const Graph& g, std::size_t line) {
                                      BoundsReport rep;
                                      try {
                                          rep = audit_bounds(g);
                                      } catch (const Error& e) {
                                          err << "line " << line << ": " << e.what() << "\n";
                                          return false;
                                      }
                                      if (as_json) {
                                          json j{{"g6", write_graph6(g)},
                                                 {"a", rep.pair.a},
                                                 {"b", rep.pair.b},
                                                 {"min_degree", rep.min_degree},
                                                 {"max_degree", rep.max_degree},
                                                 {"delta_star", surd_json(rep.lower)},
                                                 {"Delta_star", surd_json(rep.upper)},
                                                 {"lower_attained", rep.lower_bound_attained()},
                                                 {"upper_attained", rep.upper_bound_attained()},
                                                 {"violations", rep.violations},
                                                 {"ok", rep.ok()}};
                                          out << j.dump() << "\n";
                                      } else {
                                          out << write_graph6(g) << '\t' << rep.pair.a << '\t' << rep.pair.b << '\t'
                                              << rep.min_degree << '\t' << rep.max_degree << '\t' << rep.lower.str()
                                              << '\t' << rep.upper.str() << '\t' << rep.lower_bound_attained() << '\t'
                                              << rep.upper_bound_attained() << '\t' << (rep.ok() ? "ok" : "violation")
                                              << "\n";
                                      }
                                      return rep.ok();
                                  })
                       ? 0
                       : 1;
        }

        if (verify->parsed()) {
            ClaimScope scope;
            scope.max_n = max_n;
            scope.jobs = jobs;
            if (!input.path.empty() &&
                !for_each_graph(input, in, err, [&](const Graph& g, std::size_t) {
                    scope.extra.push_back(g);
                    return true;
                }))
                return 1;
            const VerificationReport rep = verify_claim(claim, scope);
            print_report(out, rep, as_json);
            return rep.pass ? 0 : 1;
        }

        if (feasible->parsed()) {
            const auto pair = is_feasible(a, b);
            if (as_json) {
                json j{{"a", a}, {"b", b}, {"feasible", pair.has_value()}};
                if (pair) j["boundary"] = pair->boundary;
                else j["reason"] = infeasibility_reason(a, b);
                out << j.dump() << "\n";
            } else if (pair) {
                out << "feasible\t" << (pair->boundary ? "boundary" : "interior") << "\n";
            } else {
                out << "infeasible\t" << infeasibility_reason(a, b) << "\n";
            }
            if (!pair) err << "infeasible pair (" << a << "," << b << "): " << infeasibility_reason(a, b) << "\n";
            return pair ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace mainspectra::cli
