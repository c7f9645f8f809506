#include <doctest.h>

#include <map>
#include <set>

#include "cubic/errors.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::a_m;
using testing::algebra;

namespace {

FamilyDescriptor rho(int k, int r, std::vector<std::uint32_t> a = {}) {
    FamilyDescriptor d;
    d.branch_case = BranchCase::OneBranchRamified;
    d.k = k;
    d.r = r;
    d.a = std::move(a);
    return d;
}

FamilyDescriptor three(int l, int q, std::vector<std::uint32_t> a) {
    FamilyDescriptor d;
    d.branch_case = BranchCase::ThreeBranches;
    d.shape = FamilyShape::LQ;
    d.l = l;
    d.q = q;
    d.e = 0;
    d.e_prime = 1;
    d.a = std::move(a);
    return d;
}

} // namespace

TEST_CASE("A_m and J_m") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    CHECK(make_Am(alg, 0) == Lattice::maximal(alg));
    CHECK(make_Am(alg, 1).pivots() == std::array<int, 3>{0, 1, 1});
    CHECK(make_Jm(alg, 2).pivots() == std::array<int, 3>{1, 2, 2});
}

TEST_CASE("family members") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    CHECK(make_family(alg, rho(0, 2, {0})).pivots() == std::array<int, 3>{0, 1, 2});
    CHECK(make_family(alg, rho(0, 0)) == Lattice::maximal(alg));
    CHECK(make_family(alg, am_descriptor(BranchCase::OneBranchRamified, 2)) == a_m(alg, 2));

    const auto r3 = algebra(BranchCase::ThreeBranches);
    for (int q = 0; q <= 3; ++q) {
        const Lattice C = make_family(r3, canonical_alpha(r3, three(0, q, {})));
        const Series tq = r3->t_power(q);
        std::vector<Element> g{r3->one(), r3->basis(0)};
        for (int i = 0; i < 3; ++i) g.push_back(tq * r3->basis(i));
        CHECK(C == Lattice::from_generators(r3, g));
    }
    for (auto c : kAllCases) {
        const auto a = algebra(c);
        CHECK(make_family(a, maximal_descriptor(c)) == Lattice::maximal(a));
    }
}

TEST_CASE("canonical parameters") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    CHECK(canonical_alpha(alg, rho(0, 2, {2, 3})).a == std::vector<std::uint32_t>{2});
    CHECK(canonical_alpha(alg, rho(0, 4, {1, 2})) == canonical_alpha(alg, rho(0, 4, {1, 2, 4})));

    const auto r3 = algebra(BranchCase::ThreeBranches);
    CHECK_THROWS_AS(canonical_alpha(r3, three(1, 0, {1})), InvalidDescriptorError);
    CHECK_THROWS_AS(validate(three(1, 0, {1}), 5), InvalidDescriptorError);
    CHECK_NOTHROW(canonical_alpha(r3, three(1, 0, {2})));
}

TEST_CASE("recognize inverts make_family") {
    const auto alg = algebra(BranchCase::OneBranchRamified);
    CHECK(recognize(make_family(alg, rho(0, 2, {0}))) == rho(0, 2, {0}));
    const FamilyDescriptor a2 = recognize(a_m(alg, 2));
    CHECK(a2.k == 2);
    CHECK(a2.r == 0);
    for (auto c : kAllCases) {
        const auto a = algebra(c, 5, default_precision(3));
        for (const auto& d : enumerate_descriptors(c, 5, 3)) CHECK(recognize(make_family(a, d)) == d);
    }
}

TEST_CASE("descriptor counts") {
    // Number of over-rings of A_m, frozen from the exhaustive oracle.
    const std::map<BranchCase, std::array<std::size_t, 3>> p5{
        {BranchCase::OneBranchRamified, {3, 10, 22}},    {BranchCase::OneBranchUnramified, {2, 9, 16}},
        {BranchCase::TwoBranchesRamified, {4, 12, 30}},  {BranchCase::TwoBranchesUnramified, {3, 11, 24}},
        {BranchCase::ThreeBranches, {5, 15, 40}}};
    const std::map<BranchCase, std::array<std::size_t, 3>> p7{
        {BranchCase::OneBranchRamified, {3, 12, 28}},    {BranchCase::OneBranchUnramified, {2, 11, 20}},
        {BranchCase::TwoBranchesRamified, {4, 14, 38}},  {BranchCase::TwoBranchesUnramified, {3, 13, 30}},
        {BranchCase::ThreeBranches, {5, 17, 50}}};
    for (auto c : kAllCases)
        for (int m = 1; m <= 3; ++m) {
            CHECK(enumerate_descriptors(c, 5, m).size() == p5.at(c)[static_cast<std::size_t>(m - 1)]);
            CHECK(enumerate_descriptors(c, 7, m).size() == p7.at(c)[static_cast<std::size_t>(m - 1)]);
        }
}

TEST_CASE("constructors are injective") {
    for (auto c : kAllCases) {
        const auto a = algebra(c, 5, default_precision(3));
        std::set<Lattice> seen;
        const auto ds = enumerate_descriptors(c, 5, 3);
        for (const auto& d : ds) {
            const Lattice M = make_family(a, d);
            CHECK(is_order(M));
            CHECK(M.contains(a_m(a, family_level(d))));
            seen.insert(M);
        }
        CHECK(seen.size() == ds.size());
    }
}
