#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "explicit_lab/cli.hpp"
#include "support.hpp"

using explicit_lab::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> rows(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
    return out;
}

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
    std::ofstream(path, std::ios::binary) << body;
    return path;
}

const std::string zeros = support::data_path("zeros_10k.txt");

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify the Gaussian pair") {
    const auto r = invoke({"verify", "--zeros", zeros, "--sieve-limit", "1000000", "--testfn",
                           "gausspair:x0=0.6931,beta=0.25", "--tol", "1e-6", "--no-meta"});
    CHECK(r.code == 0);
    const auto j = rows(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["command"] == "verify");
    CHECK(std::abs(j[0]["residual"].get<double>()) < 1e-6);
    CHECK(j[0]["budget"].get<double>() >= 0.0);
    CHECK(j[0]["pass"] == true);
    CHECK(j[0].find("timestamp") == j[0].end());
}

TEST_CASE("verification failure exits with 1") {
    const auto r = invoke({"verify", "--zeros", zeros, "--testfn", "gausspair:x0=0.6931,beta=0.25", "--drop-zero", "1",
                           "--no-meta"});
    CHECK(r.code == 1);
    CHECK(rows(r.out)[0]["pass"] == false);
}

TEST_CASE("comb") {
    const auto r = invoke({"comb", "--a", "1", "--nmax", "50", "--no-meta"});
    CHECK(r.code == 0);
    const auto j = rows(r.out);
    CHECK(j[0]["difference"].get<double>() < 1e-10);
    const auto three = invoke({"comb", "--a", "0.25", "1", "4", "--no-meta"});
    CHECK(three.code == 0);
    CHECK(rows(three.out).size() == 3);
}

TEST_CASE("malformed zero table exits with 2 and names the line") {
    const auto path = write_temp("explicit_lab_malformed.txt", "14.1\n21.0\nnot-a-number\n");
    const auto r = invoke({"zeros-check", "--zeros", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("usage errors exit with 2 and print usage") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {}, {"bogus"}, {"comb", "--frob"}, {"comb", "--format", "xml"}, {"verify", "--sieve-limit", "many"},
             {"probe", "--mode", "fast"}, {"pair", "--measure", "lambda"}}) {
        const auto r = invoke(args);
        CHECK(r.code == 2);
        CHECK(r.err.find("Usage") != std::string::npos);
    }
}

TEST_CASE("domain errors exit with 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"theta"},
             {"theta", "--t", "1,5"},
             {"probe", "--s", "0.5"},
             {"probe", "--s", "1+xi"},
             {"poles", "--radius", "0.5"},
             {"zeros-find", "--tmin", "5", "--tmax", "30"},
             {"verify", "--zeros", zeros, "--testfn", "dgauss:b=1"},
             {"verify", "--zeros", zeros, "--testfn", "hermite:c0=1,c1=1"},
             {"verify", "--testfn", "dgauss:a=1"},
             {"comb", "--tol", "-1"},
             {"pair", "--measure", "nu", "--testfn", "dgauss:a=1"}}) {
        CAPTURE(args.front());
        const auto r = invoke(args);
        CHECK(r.code == 2);
        CHECK(r.err.find("error:") != std::string::npos);
    }
}

TEST_CASE("coverage and resource errors exit with 3") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"psum", "--sieve-limit", "1"},
             {"psum", "--sieve-limit", "1000", "--x", "5000"},
             {"zeros-check", "--zeros", "/nonexistent/zeros.txt"},
             {"poles", "--samples", "10"},
             {"pair", "--measure", "mu", "--sieve-limit", "1000", "--side", "freq", "--testfn", "dgauss:a=0.01"},
             {"verify", "--zeros", zeros, "--sieve-limit", "1000", "--testfn", "dgauss:a=0.05"},
             {"comb", "--output", "/nonexistent/dir/out.json"}}) {
        CAPTURE(args.front());
        CHECK(invoke(args).code == 3);
    }
}

TEST_CASE("every subcommand passes on its default data") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"psum", "--sieve-limit", "100000"},
             {"alpha", "--sieve-limit", "100000", "--points", "5"},
             {"theta", "--t", "20", "-17.3", "1000"},
             {"zeros-check", "--zeros", zeros},
             {"zeros-find", "--tmin", "10", "--tmax", "30"},
             {"pair", "--measure", "mu", "--side", "freq", "--testfn", "dgauss:a=4"},
             {"pair", "--measure", "nu", "--zeros", zeros, "--testfn", "hermite:c1=1"},
             {"pair", "--measure", "comb", "--testfn", "dgauss:a=1"},
             {"probe", "--s", "1", "1+0.5i"},
             {"poles"},
             {"comb"}}) {
        CAPTURE(args.front());
        const auto r = invoke(args);
        CHECK(r.code == 0);
        CHECK(!r.out.empty());
        for (const auto& j : rows(r.out)) {
            CHECK(j.contains("version"));
            CHECK(j.contains("elapsed_seconds"));
            CHECK(j["command"] == args.front());
        }
    }
}

TEST_CASE("failures that each subcommand can report") {
    CHECK(invoke({"alpha", "--sieve-limit", "100000", "--points", "5", "--c", "0.001"}).code == 1);
    CHECK(invoke({"probe", "--s", "1.5", "--tol", "0"}).code == 1);
    const auto gappy = write_temp("explicit_lab_gappy.txt", "14.134725142\n21.022039639\n25.010857580\n60.831778525\n");
    CHECK(invoke({"zeros-check", "--zeros", gappy}).code == 1);
    CHECK(invoke({"psum", "--sieve-limit", "100000", "--x", "50", "100"}).code == 0);
}

TEST_CASE("determinism without meta fields") {
    const std::vector<std::string> args{"verify", "--zeros", zeros, "--testfn", "dgauss:a=4", "--no-meta"};
    const auto a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> probe{"probe", "--no-meta", "--format", "csv"};
    CHECK(invoke(probe).out == invoke(probe).out);
}

TEST_CASE("csv and file output") {
    const auto r = invoke({"comb", "--a", "1", "4", "--format", "csv", "--no-meta"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("command,a,nmax,time_side,freq_side,difference,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);

    const auto path = write_temp("explicit_lab_out.json", "");
    const auto f = invoke({"poles", "--output", path, "--no-meta"});
    CHECK(f.code == 0);
    CHECK(f.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(nlohmann::json::parse(line)["pass"] == true);
}

TEST_CASE("zeros-find writes a table that ingests back") {
    const auto path = write_temp("explicit_lab_found.txt", "");
    CHECK(invoke({"zeros-find", "--tmin", "10", "--tmax", "30", "--table", path, "--no-meta"}).code == 0);
    const auto t = explicit_lab::load_zeros(path);
    CHECK(t.size() == 3);
    CHECK(invoke({"zeros-check", "--zeros", path, "--samples", "10", "--no-meta"}).code == 0);
}

TEST_CASE("test function specs are reported in canonical form") {
    const auto r = invoke({"pair", "--measure", "comb", "--testfn", "gausspair:beta=2.5e-1,x0=0.6931", "--no-meta"});
    CHECK(r.code == 0);
    CHECK(rows(r.out)[0]["testfn"] == "gausspair:x0=0.6931,beta=0.25");
}

TEST_CASE("help exits with 0") {
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

}
