#include <doctest.h>

#include "cubic/errors.hpp"
#include "cubic/json_io.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::a_m;
using testing::algebra;

TEST_CASE("series and algebra encodings") {
    const auto cfg = RingConfig::make(5, 4);
    CHECK(series_to_json(testing::ser(cfg, {1, 2})).dump() == "[1,2,0,0]");
    CHECK(series_from_json(cfg, Json::parse("[6, -1]")) == testing::ser(cfg, {1, 4}));
    const auto u = algebra(BranchCase::OneBranchUnramified, 7, 6);
    const auto back = algebra_from_json(algebra_to_json(*u));
    CHECK(back->min_poly() == u->min_poly());
    CHECK(back->config() == u->config());
    CHECK(algebra_to_json(*algebra(BranchCase::OneBranchRamified, 5, 4)).dump() == R"({"case":"1r","p":5,"prec":4})");
}

TEST_CASE("lattice round trip") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c, 5, default_precision(2));
        for (const auto& d : enumerate_descriptors(c, 5, 2)) {
            const Lattice M = make_family(alg, d);
            CHECK(lattice_from_json(lattice_to_json(M)) == M);
            CHECK(descriptor_from_json(descriptor_to_json(d)) == d);
        }
    }
}

TEST_CASE("descriptor encoding") {
    FamilyDescriptor d;
    d.r = 2;
    d.a = {3};
    CHECK(descriptor_to_json(d).dump() == R"({"a":[3],"case":"1r","k":0,"kind":"shifted","rho":2})");
    const auto parsed = descriptor_from_json(Json::parse(R"({"case":"3","kind":"shifted","l":1,"q":0,"a":[2]})"));
    CHECK(parsed.shape == FamilyShape::LQ);
    CHECK(parsed.l == 1);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"kind":"shifted"})")), ConfigError);
    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"case":"1r","kind":"other"})")), ConfigError);
    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"case":"1r","kind":"shifted","rho":"2"})")), ConfigError);
    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"algebra":{"case":"1r","p":5,"prec":4},"hnf":[]})")),
                    ConfigError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"case":"4","p":5,"prec":4})")), ConfigError);
}

TEST_CASE("census output is stable") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const ClassCensus c = iso_classes(a_m(alg, 1));
    CHECK(census_to_csv(c) == census_to_csv(iso_classes(a_m(alg, 1))));
    CHECK(dump(census_to_json(c)) == dump(census_to_json(iso_classes(a_m(alg, 1)))));
}
