#include <doctest.h>

#include "cubic/classify.hpp"
#include "cubic/errors.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::a_m;
using testing::algebra;

TEST_CASE("embedding dimension") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    FamilyDescriptor c2;
    c2.r = 2;
    c2.a = {0};
    CHECK(embedding_dim(Lattice::maximal(alg)) == 1);
    CHECK(embedding_dim(make_family(alg, c2)) == 2);
    CHECK(embedding_dim(a_m(alg, 1)) == 3);
    const auto r3 = algebra(BranchCase::ThreeBranches);
    CHECK_THROWS_AS(embedding_dim(Lattice::maximal(r3)), LocalityError);
}

TEST_CASE("decomposability") {
    const auto r3 = algebra(BranchCase::ThreeBranches);
    CHECK(is_decomposable(Lattice::maximal(r3)));
    FamilyDescriptor c01;
    c01.branch_case = BranchCase::ThreeBranches;
    c01.shape = FamilyShape::LQ;
    c01.l = 0;
    c01.q = 1;
    c01.e = 0;
    c01.e_prime = 1;
    CHECK(is_decomposable(make_family(r3, canonical_alpha(r3, c01))));
    for (auto c : {BranchCase::OneBranchRamified, BranchCase::OneBranchUnramified}) {
        const auto alg = algebra(c);
        CHECK(is_local(Lattice::maximal(alg)));
        CHECK(is_local(a_m(alg, 2)));
    }
}

TEST_CASE("singularity table") {
    FamilyDescriptor e6;
    e6.r = 2;
    e6.a = {0};
    const auto s6 = singularity_type(algebra(BranchCase::OneBranchRamified), e6);
    CHECK(s6.name == "E_6");
    CHECK(s6.vx == std::vector<int>{3});
    CHECK(s6.vy == std::vector<int>{4});
    CHECK(s6.param_count == 1);
    CHECK(s6.multivaluations_match());

    FamilyDescriptor e7;
    e7.branch_case = BranchCase::TwoBranchesRamified;
    e7.r = 1;
    e7.a = {0};
    const auto s7 = singularity_type(algebra(BranchCase::TwoBranchesRamified), e7);
    CHECK(s7.name == "E_7");
    CHECK(s7.vx == std::vector<int>{2, 1});
    CHECK(s7.vy == std::vector<int>{3, kInfinity});
    CHECK(s7.multivaluations_match());

    FamilyDescriptor e10;
    e10.branch_case = BranchCase::ThreeBranches;
    e10.shape = FamilyShape::LQ;
    e10.l = 1;
    e10.q = 0;
    e10.e = 0;
    e10.e_prime = 1;
    e10.a = {2};
    const auto s10 = singularity_type(algebra(BranchCase::ThreeBranches), e10);
    CHECK(s10.name == "E_{1,0}");
    CHECK(s10.vx == std::vector<int>{1, 1, 1});
    CHECK(s10.vy == std::vector<int>{1, 1, kInfinity});
    CHECK(s10.multivaluations_match());

    CHECK_THROWS_AS(singularity_type(algebra(BranchCase::OneBranchRamified),
                                     am_descriptor(BranchCase::OneBranchRamified, 1)),
                    ClassificationError);
}

TEST_CASE("table multivaluations match for every plane member") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c, 5, default_precision(3));
        for (const auto& d : enumerate_descriptors(c, 5, 3)) {
            if (d.k != 0 || is_maximal_family(d) || (d.shape == FamilyShape::LQ && d.l == 0)) continue;
            CHECK(singularity_type(alg, d).multivaluations_match());
        }
    }
}
