#include <doctest.h>

#include "kwong/exact_engine.hpp"
#include "kwong/generators.hpp"
#include "kwong/serialize.hpp"

#include "../support/corpus.hpp"

using namespace kwong;
using namespace kwong::testsupport;

TEST_CASE("matrix CSV forms") {
    const auto k = gen_kwong(validate_points<Rational>({1, 2}), Exponent(3));
    CHECK(to_csv(k) == "1,3\n3,4\n");

    const auto c = gen_cauchy(validate_points<Rational>({1, 3}));
    CHECK(to_csv(c) == "1,1/2\n1/2,1/3\n");

    const auto f = gen_kwong(validate_points<double>({1, 2}), Exponent(0.5));
    // Binary64 entries parse back bit-exactly.
    std::istringstream is(to_csv(f));
    std::string cell;
    std::getline(is, cell, ',');
    CHECK(std::stod(cell) == f.at(0, 0));
}

TEST_CASE("matrix JSON carries mode, order and provenance") {
    const auto pts = squareplus_points(4);
    const auto k = gen_kwong(pts, Exponent(3));
    const json j = to_json(k);
    CHECK(j["order"] == 4);
    CHECK(j["mode"] == "exact");
    CHECK(j["entries"][0][2] == "21");
    CHECK(j["provenance"]["family"] == "kwong");
    CHECK(j["provenance"]["r"] == 3);
    CHECK(j["provenance"]["points"][2] == "5");
}

TEST_CASE("pivot log JSON") {
    const auto res = inertia_exact(gen_kwong(squareplus_points(4), Exponent(3)));
    const json j = to_json(res.log);
    CHECK(j["zero_block_dim"] == 1);
    CHECK(j["events"].size() == 3);
    CHECK(j["events"][0]["kind"] == "diag");
}

TEST_CASE("spectrum report JSON keeps infinities readable") {
    SpectrumReport rep;
    rep.eigenvalues = {-1.0, 2.0};
    rep.inertia = {1, 0, 1};
    rep.gap_ratio = std::numeric_limits<double>::infinity();
    const json j = to_json(rep);
    CHECK(j["gap_ratio"] == "inf");
    CHECK(j["inertia"] == json::array({1, 0, 1}));
    CHECK(j["route"] == "direct");
}
