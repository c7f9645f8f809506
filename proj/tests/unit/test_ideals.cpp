#include <doctest.h>

#include <map>

#include "cubic/duality.hpp"
#include "cubic/errors.hpp"
#include "cubic/ideals.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::a_m;
using testing::algebra;

TEST_CASE("the maximal order has one ideal class") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c);
        const Lattice A = Lattice::maximal(alg);
        CHECK(enumerate_ideal_lattices(A, 0) == std::vector<Lattice>{A});
        CHECK(iso_classes(A).classes.size() == 1);
    }
}

TEST_CASE("census of A_1 in the one-branch ramified case") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const Lattice A1 = a_m(alg, 1);
    const ClassCensus census = iso_classes(A1);
    REQUIRE(census.classes.size() == 4);
    CHECK(census.unexpected() == 0);
    int overrings = 0, duals = 0;
    for (const auto& cls : census.classes) {
        overrings += cls.tag == ClassTag::Overring;
        duals += cls.tag == ClassTag::Dual;
        CHECK(is_ideal_of(A1, cls.representative));
    }
    CHECK(overrings == 3);
    CHECK(duals == 1);
    CHECK(iso_classes(A1, 1).classes.size() == 4);
    CHECK(iso_classes(A1, 2).classes.size() == 4);
}

TEST_CASE("class counts of A_1 and A_2 at p = 5") {
    const std::map<BranchCase, std::pair<std::size_t, std::size_t>> counts{
        {BranchCase::OneBranchRamified, {4, 13}},    {BranchCase::OneBranchUnramified, {3, 11}},
        {BranchCase::TwoBranchesRamified, {5, 16}},  {BranchCase::TwoBranchesUnramified, {4, 14}},
        {BranchCase::ThreeBranches, {6, 20}}};
    for (auto c : kAllCases) {
        const auto alg = algebra(c);
        const ClassCensus c1 = iso_classes(a_m(alg, 1));
        const ClassCensus c2 = iso_classes(a_m(alg, 2));
        CHECK(c1.classes.size() == counts.at(c).first);
        CHECK(c2.classes.size() == counts.at(c).second);
        CHECK(c1.unexpected() == 0);
        CHECK(c2.unexpected() == 0);
    }
}

TEST_CASE("ideal isomorphism") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const Lattice A = Lattice::maximal(alg), A1 = a_m(alg, 1);
    CHECK(is_isomorphic_ideals({A1, A1}, {A1, A1.t_scaled(1)}));
    CHECK_FALSE(is_isomorphic_ideals({A1, A}, {A1, A1}));
    for (const auto& M : enumerate_normalized_ideals(A1)) CHECK(is_isomorphic(M, trace_dual(trace_dual(M))));
}

TEST_CASE("growth degrees") {
    CHECK(growth_degree({5, 7, 11}, {4, 4, 4}) == 0);
    CHECK(growth_degree({5, 7, 11, 13}, {13, 15, 19, 21}) == 1);
    CHECK(growth_degree({5, 7, 11, 13}, {1, 2, 5, 3}) == std::nullopt);
    CHECK_THROWS_AS(growth_degree({5}, {1}), PreconditionError);
}

TEST_CASE("parameter counts") {
    const auto a2 = par_estimate(am_descriptor(BranchCase::OneBranchRamified, 2), {5, 7, 11, 13});
    CHECK(a2.counts == std::vector<int>{13, 15, 19, 21});
    CHECK(a2.degree == 1);
    FamilyDescriptor e6;
    e6.r = 2;
    CHECK(par_estimate(e6, {5, 7, 11}).degree == 0);
    CHECK_THROWS_AS(par_estimate(am_descriptor(BranchCase::OneBranchUnramified, 1), {5, 7}), PreconditionError);
}

TEST_CASE("envelope") {
    const auto alg = algebra(BranchCase::OneBranchRamified, 17);
    CHECK_THROWS_AS(iso_classes(a_m(alg, 1)), EnvelopeError);
    CHECK_THROWS_AS(enumerate_ideal_lattices(a_m(algebra(BranchCase::OneBranchRamified), 1), 4), EnvelopeError);
}
