#include <doctest.h>

#include <set>

#include "cubic/errors.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::a_m;
using testing::algebra;

namespace {

std::set<Lattice> as_set(const std::vector<Lattice>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("m = 0 gives only A") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c);
        CHECK(enumerate_overrings_closed(alg, 0).size() == 1);
        CHECK(brute_force_overrings(alg, 0) == std::vector<Lattice>{Lattice::maximal(alg)});
    }
}

TEST_CASE("over-rings of A_1 in the one-branch ramified case") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const Series t = alg->t_power(1);
    const Lattice c1 = Lattice::from_generators(alg, {alg->one(), alg->pow(alg->tau(), 2), t * alg->tau()});
    const std::set<Lattice> expected{Lattice::maximal(alg), a_m(alg, 1), c1};
    CHECK(as_set(brute_force_overrings(alg, 1)) == expected);
    CHECK(as_set(closed_form_lattices(alg, 1)) == expected);
    CHECK(as_set(base_overrings(alg)) == expected);
}

TEST_CASE("procedure step from A_1") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    // Over-rings of A_2 inside A_1: the five C_2(τ + cτ²), t·C_1 + D and A_2.
    const auto next = procedure_step(a_m(alg, 1), 1);
    CHECK(next.size() == 7);
    int plane = 0;
    for (const auto& B : next) {
        const FamilyDescriptor d = recognize(B);
        if (d.k == 0) {
            CHECK(d.r == 2);
            ++plane;
        }
    }
    CHECK(plane == 5);
    // k = 0 members have no proper candidate subalgebra.
    FamilyDescriptor c2;
    c2.r = 2;
    c2.a = {0};
    CHECK(procedure_step(make_family(alg, c2), 2).empty());
}

TEST_CASE("procedure, closed form and oracle agree") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c, 5, default_precision(3));
        for (int m = 1; m <= 3; ++m) {
            ProcedureStats stats;
            const auto oracle = as_set(brute_force_overrings(alg, m));
            CHECK(as_set(iterate_procedure(alg, m, &stats)) == oracle);
            CHECK(as_set(closed_form_lattices(alg, m)) == oracle);
            CHECK(stats.condition_disagreements == 0);
        }
    }
}

TEST_CASE("candidate subalgebras satisfy both conditions equally") {
    const auto alg = algebra(BranchCase::ThreeBranches);
    const QuotientAlgebra Q = quotient_algebra(a_m(alg, 1), 1);
    const auto cands = subalgebra_candidates(Q);
    CHECK_FALSE(cands.empty());
    for (const auto& s : cands) CHECK(s.product_condition == s.surjective_condition);
    // The improper subalgebra is never a candidate.
    for (const auto& s : cands) CHECK(s.basis.size() < 3);
}

TEST_CASE("envelopes and precision") {
    CHECK_THROWS_AS(brute_force_overrings(algebra(BranchCase::OneBranchRamified, 11), 2), EnvelopeError);
    CHECK_THROWS_AS(brute_force_overrings(algebra(BranchCase::OneBranchRamified, 5, 30), 4), EnvelopeError);
    CHECK_THROWS_AS(require_enumeration_precision(*algebra(BranchCase::OneBranchRamified, 5, 5), 2), PrecisionError);
}
