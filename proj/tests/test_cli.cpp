#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gnshom/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gnshom::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gamma verb output is pinned") {
    CHECK(run({"gamma", "--n", "2", "--s", "8", "--i", "9"}).out ==
          "(2,1^6) + (2^3,1^2)  dim=35\n");
    CHECK(run({"gamma", "--n", "1", "--s", "5", "--i", "3"}).out == "0  dim=0\n");
    CHECK(run({"gamma", "--n", "2", "--s", "10", "--i", "7"}).out ==
          "(4,2,1^4) + (5,1^5) + (5,2,1^3) + (6,1^4)  dim=1050\n");
    CHECK(run({"modular", "--k", "12"}).out == "M=2 S=1\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"gamma", "--n", "2", "--s", "8", "--i", "9"}).code == 0);
    CHECK(run({"gamma", "--n", "5", "--s", "1", "--i", "1"}).code == 1);  // unsupported rank
    CHECK(run({"wmod", "--q", "3"}).code == 1);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gamma", "--n", "2"}).code == 2);
    CHECK(run({"gamma", "--n", "2", "--s", "8", "--i", "9", "--bogus", "1"}).code == 2);
    CHECK(run({"assembly", "check", "no_such_file.pat"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("simple verbs") {
    CHECK(run({"lr", "--lambda", "(2,2)", "--mu", "(3)", "--nu", "(5,2)"}).out == "1\n");
    CHECK(run({"dim", "--lambda", "(2^3,1^2)"}).out == "28\n");
    CHECK(run({"schur-dim", "--lambda", "(3,1)", "--N", "2"}).out == "3\n");
    CHECK(run({"pieri", "--lambda", "(2,2)", "--k", "3"}).out ==
          "(3,2^2) + (4,2,1) + (5,2)  dim=70\n");
    CHECK(run({"sp-detect", "--n", "2", "--m", "1", "--d", "1"}).out ==
          "degree=5 weight=(3^2,1)\n");
    CHECK(run({"detect-2mn", "--n", "3", "--m", "1", "--s", "9"}).out ==
          "summand=(3^3) multiplicity=1\n");
    CHECK(run({"hairy", "--n", "1", "--s", "3", "--k", "1", "--N", "2"}).out ==
          "S(3)  dim=4\n");
    auto wmod = run({"wmod", "--q", "8"});
    CHECK(wmod.out.find("flattened: (2,1^6) + (2^3,1^2)  dim=35") != std::string::npos);
    auto cusp = run({"cusp-pairs", "--m", "6"});
    CHECK(cusp.out.find("total=1  target=H_26(Out(F_15))") != std::string::npos);
}

TEST_CASE("tables are deterministic and tsv round-trips") {
    for (int which : {1, 2, 3, 4}) {
        auto a = run({"tables", "--which", std::to_string(which)});
        auto b = run({"tables", "--which", std::to_string(which)});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
    auto tsv = run({"tables", "--which", "3", "--format", "tsv"});
    std::istringstream lines(tsv.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "s\ti\tmodule\tdim");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::istringstream cells(line);
        std::string s, i, module, dim;
        std::getline(cells, s, '\t');
        std::getline(cells, i, '\t');
        std::getline(cells, module, '\t');
        std::getline(cells, dim, '\t');
        gnshom::ModuleSum m = gnshom::parse_module_sum(module, std::stoi(s));
        CHECK(m == gnshom::gamma_cohomology(2, std::stoi(s), std::stoi(i)));
        CHECK(m.dimension().to_decimal() == dim);
    }
    CHECK(rows > 40);
}

TEST_CASE("table spot values match") {
    auto t4 = run({"tables", "--which", "4"});
    CHECK(t4.out.find("1575") != std::string::npos);
    CHECK(t4.out.find("1050") != std::string::npos);
    auto t1 = run({"tables", "--which", "1"});
    CHECK(t1.out.find("(5,1^2)") != std::string::npos);  // H^2(Gamma_{1,7})
}

TEST_CASE("assembly subcommands read pattern files") {
    const char* path = "cli_test_pattern.pat";
    {
        std::ofstream f(path);
        f << "# alpha_1 x alpha_1 along one edge\n"
             "vertex a rank=1 leaves=3 degree=2\n"
             "vertex b rank=1 leaves=3 degree=2\n"
             "glue a.1 b.1\n";
    }
    auto check = run({"assembly", "check", path});
    CHECK(check.code == 0);
    CHECK(check.out.find("signature: n=2 s=4 degree=4 vcd=5") != std::string::npos);
    CHECK(check.out.find("verdict: Inconclusive") != std::string::npos);
    CHECK(check.out.find("(2^2)  domain=1 target=1") != std::string::npos);

    {
        std::ofstream f(path);
        f << "vertex a rank=1 leaves=3 degree=2\n"
             "vertex b rank=1 leaves=5 degree=4\n"
             "glue a.1 b.1\nglue a.2 b.2\nglue a.3 b.3\n";
    }
    auto morita = run({"assembly", "morita", path});
    CHECK(morita.code == 0);
    CHECK(morita.out.find("verdict: ForcedZero") != std::string::npos);
    CHECK(morita.out.find("unequal-valence") != std::string::npos);
    std::remove(path);
}

TEST_CASE("selfcheck passes") {
    auto r = run({"selfcheck"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
