#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bierkit/cli/commands.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using bierkit::cli::run;
using Json = nlohmann::ordered_json;

namespace {

const std::string kData = BIERKIT_DATA_DIR;

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    Outcome o;
    o.code = run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

}  // namespace

TEST_CASE("bier") {
    auto hemi = call({"bier", "--complex", "builtin:hemi_icosahedron"});
    REQUIRE(hemi.code == 0);
    auto j = hemi.json();
    CHECK(j["facets"].size() == 60);
    CHECK(j["edges"].size() == 60);
    CHECK(j["counts"]["vertices"] == 12);
    CHECK(hemi.err.find("60 facets") != std::string::npos);

    CHECK(call({"bier", "--complex", "builtin:skeleton:3,1"}).json()["facets"].size() == 6);
    auto s0 = call({"bier", "--complex", kData + "/empty.json"});
    REQUIRE(s0.code == 0);
    CHECK(s0.json()["facets"] == Json::parse("[[-1],[-2]]"));

    CHECK(call({"bier", "--complex", "builtin:skeleton:4,4"}).code == 2);
    CHECK(call({"bier", "--complex", "builtin:nothing"}).code == 2);
    CHECK(call({"bier", "--complex", kData + "/missing.json"}).code == 2);
    CHECK(call({"bier", "--complex", kData + "/hemi12.csv"}).code == 2);
    CHECK(call({"bier", "--complex", "builtin:hemi_icosahedron", "--bogus"}).code == 2);
    CHECK(call({"bier"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("verify") {
    const std::string csv = kData + "/hemi12.csv";
    auto pass = call({"verify", "--vertices", csv, "--complex", "builtin:hemi_icosahedron"});
    CHECK(pass.code == 0);
    CHECK(pass.json()["verdict"] == "PASS");
    CHECK(pass.json()["hull"]["facets"] == 60);

    auto fail = call({"verify", "--vertices", csv, "--complex", "builtin:hemi_icosahedron", "--round", "5"});
    CHECK(fail.code == 1);
    auto fj = fail.json();
    CHECK(fj["verdict"] == "FAIL");
    CHECK(fj["non_vertices"].size() + fj["missing_facets"].size() + fj["extra_facets"].size() > 0);

    auto octa = call({"verify", "--vertices", kData + "/octahedron.csv", "--complex", "builtin:hemi_icosahedron"});
    CHECK(octa.code == 1);
    CHECK(octa.json()["reason"].get<std::string>().rfind("vertex count mismatch", 0) == 0);

    CHECK(call({"verify", "--vertices", kData + "/nope.csv", "--complex", "builtin:hemi_icosahedron"}).code == 2);
    CHECK(call({"verify", "--vertices", kData + "/empty.json", "--complex", "builtin:hemi_icosahedron"}).code == 2);
    CHECK(call({"verify", "--vertices", csv, "--complex", "builtin:hemi_icosahedron", "--round", "x"}).code == 2);
}

TEST_CASE("defcone") {
    for (auto [arg, n] : {std::pair{"4,2", 4}, std::pair{"6,3", 6}}) {
        auto r = call({"defcone", "--hypersimplex", arg});
        REQUIRE(r.code == 0);
        auto j = r.json();
        CHECK(j["lin_dim"] == n);
        CHECK(j["lineality"] == n - 1);
        CHECK(j["essential_dim"] == 1);
        CHECK(j["verdict"] == "Indecomposable");
    }
    auto sq = call({"defcone", "--complex", kData + "/square.fan"});
    REQUIRE(sq.code == 0);
    CHECK(sq.json()["essential_dim"] == 2);
    CHECK(sq.json()["verdict"] == "Decomposable");

    CHECK(call({"defcone", "--hypersimplex", "5,2"}).code == 2);
    CHECK(call({"defcone", "--hypersimplex", "6"}).code == 2);
    CHECK(call({"defcone"}).code == 2);
    CHECK(call({"defcone", "--complex", kData + "/square.fan", "--coarsen", "diplo"}).code == 2);
    CHECK(call({"defcone", "--complex", kData + "/square.fan", "--coarsen", "other"}).code == 2);
}

TEST_CASE("threshold") {
    auto hemi = call({"threshold", "--complex", "builtin:hemi_icosahedron"});
    CHECK(hemi.code == 0);
    CHECK(hemi.json()["threshold"] == false);
    CHECK(hemi.json()["lp_certified"] == true);

    auto sk = call({"threshold", "--complex", "builtin:skeleton:6,2"}).json();
    CHECK(sk["threshold"] == true);
    CHECK(sk["weights"] == Json::parse(R"(["1/6","1/6","1/6","1/6","1/6","1/6"])"));
    CHECK(sk["verified"] == true);

    auto k5 = call({"threshold", "--complex", kData + "/k_5_example.json"});
    CHECK(k5.code == 0);
    CHECK(k5.json()["verified"] == true);
}

TEST_CASE("minkowski-check") {
    CHECK(call({"minkowski-check", "--n", "4"}).json()["verdict"] == "PASS");
    CHECK(call({"minkowski-check", "--n", "4", "--x", "7,5,2,1"}).code == 0);
    auto lim = call({"minkowski-check", "--n", "3", "--x", "2,1,1"});
    CHECK(lim.code == 0);
    CHECK(lim.json()["summands"].size() == 1);
    CHECK(call({"minkowski-check", "--n", "4", "--x", "5/2,3/2,1/3,-1"}).code == 0);
    CHECK(call({"minkowski-check", "--n", "3", "--x", "1,2,3"}).code == 2);
    CHECK(call({"minkowski-check", "--n", "3", "--x", "3,2"}).code == 2);
    CHECK(call({"minkowski-check", "--n", "3", "--x", "3,a,1"}).code == 2);
}

TEST_CASE("--out and determinism") {
    const std::string path = "test_cli_out.json";
    auto r = call({"bier", "--complex", "builtin:hemi_icosahedron", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream file;
    file << in.rdbuf();
    CHECK(file.str() == call({"bier", "--complex", "builtin:hemi_icosahedron"}).out);
    std::remove(path.c_str());

    for (std::vector<std::string> args : {std::vector<std::string>{"defcone", "--hypersimplex", "6,3"},
                                          {"verify", "--vertices", kData + "/hemi12.csv", "--complex",
                                           "builtin:hemi_icosahedron", "--round", "5"},
                                          {"threshold", "--complex", "builtin:hemi_icosahedron"}})
        CHECK(call(args).out == call(args).out);
}
