#include "cubic/classify.hpp"

#include "cubic/errors.hpp"
#include "cubic/overrings.hpp"

namespace cubic {

bool is_decomposable(const Lattice& C) {
    const QuotientAlgebra Q = residue_algebra(C);
    for (const auto& x : fp::all_vectors(Q.p)) {
        if (fp::is_zero(x) || x == Q.one) continue;
        if (Q.product(x, x) == x) return true;
    }
    return false;
}

namespace {

std::vector<fp::Vec3> nilradical(const QuotientAlgebra& Q) {
    std::vector<fp::Vec3> nil;
    for (const auto& x : fp::all_vectors(Q.p))
        if (!fp::is_zero(x) && fp::is_zero(Q.power(x, 3))) nil.push_back(x);
    return fp::reduced_basis(nil, Q.p);
}

} // namespace

Lattice jacobson_radical(const Lattice& C) {
    if (!is_order(C)) throw PreconditionError("jacobson_radical expects an order");
    if (is_decomposable(C)) throw LocalityError("order is not local");
    const QuotientAlgebra Q = residue_algebra(C);
    std::vector<Element> g;
    for (const auto& v : nilradical(Q)) g.push_back(Q.lift(v));
    const Series t = C.alg().t_power(1);
    for (const auto& col : C.columns()) g.push_back(t * col);
    return Lattice::from_generators(C.algebra(), g);
}

int embedding_dim(const Lattice& C) {
    const Lattice J = jacobson_radical(C);
    const Lattice J2 = lattice_product(J, J);
    // [C/J : F_p] = 3 − dim rad(C/tC) = 3 − length(J/tC).
    const int residue_degree = 3 - (C.t_scaled(1).index_in_maximal() - J.index_in_maximal());
    return lattice_index(J2, J) / residue_degree;
}

namespace {

std::string single(int n) { return "E_" + std::to_string(n); }
std::string pair(const char* prefix, int a, int b) {
    return std::string(prefix) + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

} // namespace

SingularityType singularity_type(const AlgebraPtr& alg, const FamilyDescriptor& d) {
    if (d.kind != FamilyKind::ShiftedC || d.k != 0)
        throw ClassificationError("not a plane curve singularity: only k = 0 family members are listed");
    if (is_maximal_family(d)) throw ClassificationError("not a plane curve singularity: the maximal order is smooth");
    if (d.shape == FamilyShape::LQ && d.l == 0)
        throw ClassificationError("not a plane curve singularity: decomposable ring");

    SingularityType s;
    const int inf = kInfinity;
    s.branches = alg->branches();
    switch (d.branch_case) {
    case BranchCase::OneBranchRamified: {
        const int r = d.r / 2;
        if (d.r % 2 == 0) {
            s.name = single(6 * r);
            s.vy = {3 * r + 1};
        } else {
            s.name = single(6 * r + 2);
            s.vy = {3 * r + 2};
        }
        s.vx = {3};
        s.param_count = r;
        break;
    }
    case BranchCase::OneBranchUnramified:
        s.name = pair("E*", d.r, 0);
        s.vx = {1};
        s.vy = {d.r};
        s.param_count = d.r;
        s.unramified = true;
        break;
    case BranchCase::TwoBranchesRamified:
        s.vx = {2, 1};
        if (d.shape == FamilyShape::R) {
            s.name = single(6 * d.r + 1);
            s.vy = {2 * d.r + 1, inf};
            s.param_count = d.r;
        } else {
            s.name = pair("E", d.l, 2 * d.q + 1);
            s.vy = {2 * d.l, inf};
            s.param_count = d.l;
        }
        break;
    case BranchCase::TwoBranchesUnramified:
        s.name = pair("E*", d.l, 2 * d.q);
        s.vx = {1, 1};
        s.vy = {d.l, inf};
        s.param_count = d.l;
        s.unramified = true;
        break;
    case BranchCase::ThreeBranches:
        s.name = pair("E", d.l, 2 * d.q);
        s.vx = {1, 1, 1};
        s.vy = {d.l, d.l + d.q, inf};
        s.param_count = d.l;
        break;
    }

    const int need = family_conductor(d) + 2;
    const AlgebraPtr work = alg->prec() >= need ? alg : alg->with_precision(need);
    const Element y = work->t_power(family_middle_exponent(d)) * family_beta(*work, d);
    s.computed_vx = work->multival(work->scalar(work->t_power(1)));
    s.computed_vy = work->multival(y);
    if (d.branch_case == BranchCase::ThreeBranches) {
        // Report in the order (e, e', remaining branch).
        const int f = 3 - d.e - d.e_prime;
        const auto reorder = [&](const std::vector<int>& v) {
            return std::vector<int>{v[static_cast<std::size_t>(d.e)], v[static_cast<std::size_t>(d.e_prime)],
                                    v[static_cast<std::size_t>(f)]};
        };
        s.computed_vx = reorder(s.computed_vx);
        s.computed_vy = reorder(s.computed_vy);
    }
    return s;
}

} // namespace cubic
