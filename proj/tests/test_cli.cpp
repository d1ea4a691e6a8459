#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "mainspectra/census.hpp"
#include "mainspectra/cli.hpp"
#include "mainspectra/families.hpp"

using namespace mainspectra;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("witness certificate") {
    const auto r = run({"witness", "--a", "2", "--b", "0"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(parse_graph6(ls[0]).order() == 7);
    const auto cert = nlohmann::json::parse(ls[1]);
    CHECK(cert["boundary"] == true);
    CHECK(cert["equitable"] == true);
    CHECK(cert["connected"] == true);
    CHECK(cert["quotient"] == nlohmann::json::parse("[[0,1,0],[1,0,1],[0,3,0]]"));

    const auto j = run({"--json", "witness", "--a", "4", "--b", "-3", "--variant", "alt-boundary-k2"});
    REQUIRE(j.code == 0);
    const auto obj = nlohmann::json::parse(j.out);
    CHECK(obj["a"] == 4);
    CHECK(obj.contains("g6"));

    CHECK(run({"witness", "--a", "0", "--b", "1"}).code == 1);
    CHECK(run({"witness", "--a", "2", "--b", "1", "--variant", "bogus"}).code == 2);
}

TEST_CASE("feasible") {
    const auto bad = run({"feasible", "--a", "0", "--b", "1"});
    CHECK(bad.code == 1);
    CHECK(bad.out.rfind("infeasible\t", 0) == 0);
    const auto edge = run({"feasible", "--a", "2", "--b", "0"});
    CHECK(edge.code == 0);
    CHECK(edge.out == "feasible\tboundary\n");
    CHECK(run({"feasible", "--a", "3", "--b", "3"}).out == "feasible\tinterior\n");
}

TEST_CASE("analyze") {
    const auto r = run({"analyze"}, "CL\nC~\nnot-a-graph\n");
    CHECK(r.code == 1);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].rfind("CL\t4\t3\t1\t2\t1\t1\t", 0) == 0);
    CHECK(ls[1].rfind("C~\t4\t6\t1\t1\t-", 0) == 0);
    CHECK(r.err.find("line 3") != std::string::npos);

    const auto j = run({"--json", "analyze"}, "CL\n");
    const auto obj = nlohmann::json::parse(j.out);
    CHECK(obj["a"] == 1);
    CHECK(obj["b"] == 1);
    CHECK(obj["lambda1"]["D"] == 5);
}

TEST_CASE("enumerate") {
    const auto r = run({"enumerate", "--max-n", "4", "--min-n", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 3);
    const auto f = run({"enumerate", "--max-n", "7", "--a", "2", "--b", "0"});
    const auto fl = lines(f.out);
    REQUIRE(fl.size() == 1);
    CHECK(canonical_key(parse_graph6(fl[0].substr(0, fl[0].find('\t')))) == canonical_key(t_tree(2)));
    CHECK(run({"enumerate", "--max-n", "6", "--jobs", "2"}).out == run({"enumerate", "--max-n", "6"}).out);
    CHECK(lines(run({"enumerate", "--max-n", "4", "--min-n", "4", "--labeled"}).out).size() == 22);

    const auto nine = run({"enumerate", "--max-n", "9"});
    CHECK(nine.code == 2);
    CHECK(nine.err.find("--input") != std::string::npos);
    CHECK(run({"enumerate", "--a", "1"}).code == 2);

    const auto ingest = run({"enumerate", "--input", "-", "--a", "1", "--b", "3"},
                            write_graph6(double_star(3, 3)) + "\nCL\n");
    CHECK(lines(ingest.out).size() == 1);
}

TEST_CASE("partition and bounds") {
    const auto p = run({"partition"}, "CL\n");
    REQUIRE(p.code == 0);
    CHECK(p.out.find("0,1|2,3") != std::string::npos);
    CHECK(p.out.find("0,1;1,1") != std::string::npos);

    const auto b = run({"bounds"}, "CL\nC~\n");
    CHECK(b.code == 1);
    CHECK(b.err.find("line 2") != std::string::npos);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--claim", "g11", "--max-n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status\tpass\n") != std::string::npos);
    CHECK(r.out.find("members\t1\n") != std::string::npos);
    CHECK(r.out.find("scope\tcensus n<=8") != std::string::npos);
    CHECK(run({"verify", "--claim", "unknown"}).code == 2);

    const auto j = run({"--json", "verify", "--claim", "g20", "--max-n", "7"});
    const auto obj = nlohmann::json::parse(j.out);
    CHECK(obj["status"] == "pass");
    CHECK(obj["members"].size() == 1);
}

TEST_CASE("usage errors") {
    CHECK(run({"--bogus"}).code == 2);
    CHECK(run({"witness", "--a", "x", "--b", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
}

TEST_CASE("output is deterministic") {
    CHECK(run({"--json", "witness", "--a", "5", "--b", "7"}).out == run({"--json", "witness", "--a", "5", "--b", "7"}).out);
}
