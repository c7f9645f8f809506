#include <doctest.h>

#include "cubic/duality.hpp"
#include "cubic/errors.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::a_m;
using testing::algebra;

TEST_CASE("duals of A") {
    const auto r3 = algebra(BranchCase::ThreeBranches);
    CHECK(trace_dual(Lattice::maximal(r3)) == Lattice::maximal(r3));
    for (auto c : kAllCases) {
        const auto alg = algebra(c);
        CHECK(is_isomorphic(trace_dual(Lattice::maximal(alg)), Lattice::maximal(alg)));
    }
}

TEST_CASE("double duals return the input") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c, 5, default_precision(3));
        for (const auto& d : enumerate_descriptors(c, 5, 3)) {
            const Lattice B = make_family(alg, d);
            CHECK(trace_dual(trace_dual(B)) == B);
        }
    }
}

TEST_CASE("closed-form duals") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c, 5, default_precision(3));
        for (const auto& d : enumerate_descriptors(c, 5, 3)) {
            const auto cf = closed_form_dual(alg, d);
            if (!cf) continue;
            CHECK(is_isomorphic(*cf, trace_dual(make_family(alg, d))));
        }
    }
}

TEST_CASE("Gorenstein orders") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    FamilyDescriptor c2;
    c2.r = 2;
    c2.a = {0};
    CHECK(is_gorenstein(Lattice::maximal(alg)));
    CHECK(is_gorenstein(make_family(alg, c2)));
    CHECK_FALSE(is_gorenstein(a_m(alg, 2)));
}

TEST_CASE("dual via Hom") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    FamilyDescriptor c2;
    c2.r = 2;
    c2.a = {0};
    const Lattice C = make_family(alg, c2);
    CHECK(dual_via_hom(C, C) == C);
    // Hom(B, C) for Gorenstein C is a dual of B.
    CHECK(is_isomorphic(dual_via_hom(Lattice::maximal(alg), C), trace_dual(Lattice::maximal(alg))));
    CHECK_THROWS_AS(dual_via_hom(Lattice::maximal(alg), a_m(alg, 2)), PreconditionError);
}

TEST_CASE("dual reports") {
    const auto alg = algebra(BranchCase::TwoBranchesRamified, 5, default_precision(3));
    const DualReport a = dual_report(a_m(alg, 2));
    CHECK_FALSE(a.closed_form.has_value());
    FamilyDescriptor d;
    d.branch_case = BranchCase::TwoBranchesRamified;
    d.k = 1;
    d.r = 1;
    d.a = {3};
    const DualReport r = dual_report(make_family(alg, d));
    REQUIRE(r.closed_form.has_value());
    REQUIRE(r.witness.has_value());
    CHECK(r.closed_form->scaled(r.witness->numerator) == r.trace_dual.t_scaled(r.witness->shift));
}
