#include <doctest.h>

#include "cubic/errors.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::a_m;
using testing::algebra;

namespace {

Lattice span(const AlgebraPtr& alg, std::initializer_list<Element> g) { return Lattice::from_generators(alg, g); }

std::array<int, 3> piv(int a, int b, int c) { return {a, b, c}; }

} // namespace

TEST_CASE("canonical forms") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const Lattice A = Lattice::maximal(alg);
    const Series t = alg->t_power(1);
    CHECK(span(alg, {alg->one(), alg->tau(), alg->pow(alg->tau(), 2), t * alg->tau()}) == A);
    CHECK(a_m(alg, 1).pivots() == piv(0, 1, 1));
    const Lattice c2 = span(alg, {alg->one(), t * alg->tau(), alg->t_power(2) * alg->basis(0),
                                  alg->t_power(2) * alg->basis(1), alg->t_power(2) * alg->basis(2)});
    CHECK(c2.pivots() == piv(0, 1, 2));
    CHECK(c2.entry(1, 1) == t);
}

TEST_CASE("rank deficiency and precision are reported") {
    const auto alg = algebra(BranchCase::OneBranchRamified, 5, 6);
    CHECK_THROWS_AS(span(alg, {alg->one(), alg->tau()}), DegenerateLatticeError);
    const Series t5 = alg->t_power(5);
    CHECK_THROWS_AS(Lattice::from_generators(alg, {alg->one(), t5 * alg->tau(), t5 * alg->pow(alg->tau(), 2)}, 2),
                    PrecisionError);
}

TEST_CASE("membership") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const Lattice A1 = a_m(alg, 1);
    CHECK(A1.contains(alg->t_power(1) * alg->tau()));
    CHECK_FALSE(A1.contains(alg->tau()));
    CHECK(A1.contains(alg->zero()));
}

TEST_CASE("sums, products and indices") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const Lattice A = Lattice::maximal(alg), A1 = a_m(alg, 1), A2 = a_m(alg, 2);
    CHECK(lattice_product(A1, A1) == A1);
    CHECK(lattice_product(A, A) == A);
    CHECK(lattice_sum(A2, A2) == A2);
    CHECK(lattice_index(A1, A) == 2);
    CHECK(lattice_index(A2, A) == 4);
    CHECK(lattice_index(A1.t_scaled(1), A1) == 3);
    CHECK_THROWS_AS(lattice_index(A, A1), PreconditionError);
}

TEST_CASE("orders") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const Series t = alg->t_power(1);
    CHECK(is_order(a_m(alg, 1)));
    CHECK_FALSE(is_order(span(alg, {alg->one(), alg->tau(), t * alg->pow(alg->tau(), 2)})));

    const auto r3 = algebra(BranchCase::ThreeBranches);
    const Series z(r3->config());
    const Series t3 = r3->t_power(1);
    CHECK(is_order(span(r3, {Element(r3->series(1), z, z), Element(z, r3->series(1), r3->series(1)),
                             Element(z, z, t3)})));

    const Lattice A = Lattice::maximal(alg), A1 = a_m(alg, 1), A2 = a_m(alg, 2);
    CHECK(is_overring(A, A1));
    CHECK_FALSE(is_overring(A1, A));
    const Lattice c2 = make_family(alg, recognize(span(alg, {alg->one(), t * alg->tau(), alg->t_power(2) * alg->tau(),
                                                             alg->t_power(2) * alg->pow(alg->tau(), 2)})));
    CHECK(is_overring(c2, A2));
}

TEST_CASE("colons and multiplier rings") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c);
        const Lattice A = Lattice::maximal(alg), A1 = a_m(alg, 1);
        CHECK(multiplier_ring(A1) == A1);
        CHECK(multiplier_ring(A) == A);
        CHECK(colon(A1, A) == A.t_scaled(1));
        CHECK(A1.conductor_exponent() == 1);
        CHECK(A1.t_scaled(2).t_content() == 2);
        CHECK(A1.t_scaled(2).divided_by_t(2) == A1);
    }
}

TEST_CASE("scaling search") {
    for (auto c : kAllCases) {
        const auto alg = algebra(c);
        const Lattice A = Lattice::maximal(alg), A1 = a_m(alg, 1);
        CHECK(is_isomorphic(A1, A1.t_scaled(1)));
        CHECK_FALSE(is_isomorphic(A, A1));
        // A unit of A scales A1 to a different lattice in the same class.
        const Element u = alg->one() + alg->basis(1);
        if (alg->is_unit(u)) CHECK(is_isomorphic(A1, A1.scaled(u)));
    }
    const auto alg = algebra(BranchCase::OneBranchRamified);
    const auto w = find_scaling(a_m(alg, 1), a_m(alg, 1).t_scaled(1));
    REQUIRE(w.has_value());
    CHECK(a_m(alg, 1).scaled(w->numerator) == a_m(alg, 1).t_scaled(1 + w->shift));
}
