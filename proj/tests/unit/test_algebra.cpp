#include <doctest.h>

#include "helpers.hpp"

using namespace cubic;
using testing::algebra;

TEST_CASE("defining relations") {
    const auto r1 = algebra(BranchCase::OneBranchRamified);
    CHECK(r1->mul(r1->tau(), r1->pow(r1->tau(), 2)) == r1->scalar(r1->t_power(1)));

    const auto r3 = algebra(BranchCase::ThreeBranches);
    CHECK(r3->mul(r3->basis(0), r3->basis(1)).is_zero());

    const auto r2 = algebra(BranchCase::TwoBranchesRamified);
    CHECK(r2->mul(r2->tau(), r2->tau()) == r2->t_power(1) * r2->basis(0));
}

TEST_CASE("traces") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c);
        CHECK(alg->trace(alg->one()) == alg->series(3));
    }
    const auto r1 = algebra(BranchCase::OneBranchRamified);
    CHECK(r1->trace(r1->tau()).is_zero());
    const auto r3 = algebra(BranchCase::ThreeBranches);
    CHECK(r3->trace(r3->basis(0)) == r3->series(1));
}

TEST_CASE("discriminant valuations are 2, 0, 1, 0, 0") {
    const std::vector<int> expected{2, 0, 1, 0, 0};
    for (std::size_t i = 0; i < kAllCases.size(); ++i) {
        const auto alg = algebra(kAllCases[i]);
        CHECK(alg->discriminant_valuation() == expected[i]);
        CHECK(alg->expected_discriminant_valuation() == expected[i]);
    }
}

TEST_CASE("multivaluations") {
    const auto r1 = algebra(BranchCase::OneBranchRamified);
    CHECK(r1->multival(r1->scalar(r1->t_power(1))) == std::vector<int>{3});

    const auto r3 = algebra(BranchCase::ThreeBranches);
    const Element x(r3->t_power(1), r3->t_power(2), Series(r3->config()));
    CHECK(r3->multival(x) == std::vector<int>{1, 2, kInfinity});

    const auto r2 = algebra(BranchCase::TwoBranchesRamified);
    CHECK(r2->multival(r2->t_power(1) * r2->tau())[0] == 3);
}

TEST_CASE("units") {
    const auto r1 = algebra(BranchCase::OneBranchRamified);
    CHECK(r1->is_unit(r1->one()));
    CHECK_FALSE(r1->is_unit(r1->tau()));
    const auto u1 = algebra(BranchCase::OneBranchUnramified);
    CHECK(u1->is_unit(u1->theta()));
}

TEST_CASE("default minimal polynomials are fixed") {
    CHECK(algebra(BranchCase::OneBranchUnramified)->min_poly() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(algebra(BranchCase::TwoBranchesUnramified)->min_poly() == std::vector<std::uint32_t>{2, 0, 1});
}
