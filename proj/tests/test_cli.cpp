#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <vector>

#include "berger/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "berger-cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = berger::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum csv rows") {
    auto r = run({"--format", "csv", "spectrum", "--space", "berger", "--n", "1", "--tau-sq", "1/3", "--kmax", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "k,p,value,multiplicity,source\n"
          "0,0,0,1,berger-laplacian\n"
          "1,0,5,4,berger-laplacian\n"
          "2,0,16,6,berger-laplacian\n"
          "2,1,8,3,berger-laplacian\n");
}

TEST_CASE("spectrum json has a modes array") {
    auto r = run({"--format", "json", "spectrum", "--space", "clifford", "--m1", "0", "--m2", "0", "--tau-sq", "1/3",
                  "--low"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["modes"].is_array());
    CHECK(j["modes"].size() == 4);
}

TEST_CASE("invalid tau is rejected with exit code 2") {
    CHECK(run({"spectrum", "--n", "1", "--tau-sq", "0"}).code == 2);
    CHECK(run({"spectrum", "--n", "1", "--tau-sq", "3/2"}).code == 2);
    auto r = run({"spectrum", "--n", "1", "--tau-sq", "0.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("fraction") != std::string::npos);
    CHECK(run({"index", "--model", "nonsense", "--tau-sq", "1/2"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("index command") {
    auto r = run({"index", "--model", "clifford", "--m1", "0", "--m2", "0", "--tau-sq", "1/3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("index 1, nullity 6") != std::string::npos);
    auto v = run({"--format", "json", "index", "--model", "veronese-rp3", "--tau-sq", "3/10"});
    REQUIRE(v.code == 0);
    CHECK(nlohmann::json::parse(v.out)["index"] == 6);
}

TEST_CASE("phase csv columns") {
    auto r = run({"phase", "--model", "circle", "--n", "1", "--s", "1", "--grid", "1/4,1/2,1"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "model,d,tau_sq_num,tau_sq_den,index,nullity,verdict,theorem");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 3);
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("moduli and checks") {
    auto m = run({"--format", "csv", "moduli", "--samples", "3"});
    CHECK(m.code == 0);
    auto t = run({"--format", "json", "tai-check", "--n", "2", "--tau-sq", "1/2", "--samples", "20"});
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["pass"] == true);
    auto strict = run({"--tol", "tai-isometry=0", "--format", "json", "tai-check", "--n", "2", "--tau-sq", "1/2",
                       "--samples", "20"});
    CHECK(strict.code == 1);
    CHECK(run({"tai-check", "--n", "2", "--tau-sq", "1"}).code == 2);
    CHECK(run({"curvature-check", "--n", "1", "--tau-sq", "1/3", "--samples", "20"}).code == 0);
}
